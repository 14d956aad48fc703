#include "triwalk/walk_model.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <cmath>
#include <cstdlib>

namespace triwalk {

StepDistribution StepDistribution::validate(const Rational& a, const Rational& ap,
                                            const Rational& b, const Rational& bp,
                                            const Rational& g, const Rational& gp) {
    StepDistribution p;
    p.alpha = a;
    p.alpha_p = ap;
    p.beta = b;
    p.beta_p = bp;
    p.gamma = g;
    p.gamma_p = gp;
    for (const Rational* v : {&a, &ap, &b, &bp, &g, &gp})
        if (*v < 0) throw NegativeProbability("step probability below zero");
    if (a + ap + b + bp + g + gp != 1) throw MassNotOne("step probabilities do not sum to 1");
    Rational da = a - ap, db = b - bp, dg = g - gp;
    if (da != db || db != dg)
        throw DriftNotZero("alpha-alpha', beta-beta', gamma-gamma' are not all equal");
    p.kappa = da;
    if (p.kappa < 0) throw DriftNotZero("kappa < 0; swap primed and unprimed probabilities");
    p.alpha_hat = a + ap;
    p.beta_hat = b + bp;
    p.gamma_hat = g + gp;
    p.gamma_fun = p.alpha_hat * p.beta_hat + p.beta_hat * p.gamma_hat + p.gamma_hat * p.alpha_hat;
    if (p.gamma_fun == 0) throw DegenerateCovariance("Gamma(p) = 0");
    return p;
}

BigInt StepDistribution::common_denominator() const {
    BigInt d = 1;
    for (const Rational* v : {&alpha, &alpha_p, &beta, &beta_p, &gamma, &gamma_p})
        d = boost::integer::lcm(d, denominator(*v));
    return d;
}

std::array<Step, 6> steps(const StepDistribution& p) {
    return {{{{1, 0}, p.alpha},
             {{-1, 0}, p.alpha_p},
             {{0, 1}, p.beta_p},
             {{0, -1}, p.beta},
             {{-1, 1}, p.gamma},
             {{1, -1}, p.gamma_p}}};
}

Realization::Realization(Vec2 e1, Vec2 e2) : e1_(e1), e2_(e2) {
    T_ = Mat2::from_columns(e1, e2);
    if (T_.det() == 0.0) throw DomainError("realization vectors are linearly dependent");
    K_ = e1.norm() + e2.norm();
}

Vec2 Realization::e(int i) const {
    switch (i) {
        case 1: return e1_;
        case 2: return e2_;
        case 3: return e3();
    }
    throw DomainError("basis index out of range");
}

double moment(const StepDistribution& p, const Realization& r, int q, Vec2 theta) {
    if (q < 1) throw DomainError("moment order must be >= 1");
    double u1 = dot(r.e1(), theta), u2 = dot(r.e2(), theta), u3 = dot(r.e3(), theta);
    if (q % 2 == 1) {
        if (q == 1) return 0.0;  // zero mean
        double k = to_double(p.kappa);
        return k * (std::pow(u1, q) - std::pow(u2, q) + std::pow(u3, q));
    }
    return to_double(p.alpha_hat) * std::pow(u1, q) + to_double(p.beta_hat) * std::pow(u2, q) +
           to_double(p.gamma_hat) * std::pow(u3, q);
}

double moment_edge_sum(const StepDistribution& p, const Realization& r, int q, Vec2 theta) {
    double s = 0.0;
    for (const Step& st : steps(p))
        s += to_double(st.probability) * std::pow(dot(r.embed(st.offset), theta), q);
    return s;
}

namespace {

Rational rat_pow(Rational base, int q) {
    Rational out = 1;
    for (int i = 0; i < q; ++i) out *= base;
    return out;
}

Rational rat_dot(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b) {
    return a[0] * b[0] + a[1] * b[1];
}

}  // namespace

Rational moment_exact(const StepDistribution& p,
                      const std::array<std::array<Rational, 2>, 3>& evec, int q,
                      const std::array<Rational, 2>& theta) {
    if (q < 1) throw DomainError("moment order must be >= 1");
    Rational u1 = rat_dot(evec[0], theta), u2 = rat_dot(evec[1], theta), u3 = rat_dot(evec[2], theta);
    if (q % 2 == 1) {
        if (q == 1) return 0;
        return p.kappa * (rat_pow(u1, q) - rat_pow(u2, q) + rat_pow(u3, q));
    }
    return p.alpha_hat * rat_pow(u1, q) + p.beta_hat * rat_pow(u2, q) + p.gamma_hat * rat_pow(u3, q);
}

Rational moment_edge_sum_exact(const StepDistribution& p,
                               const std::array<std::array<Rational, 2>, 3>& evec, int q,
                               const std::array<Rational, 2>& theta) {
    Rational s = 0;
    for (const Step& st : steps(p)) {
        std::array<Rational, 2> v = {
            Rational(st.offset.x1) * evec[0][0] + Rational(st.offset.x2) * evec[1][0],
            Rational(st.offset.x1) * evec[0][1] + Rational(st.offset.x2) * evec[1][1]};
        s += st.probability * rat_pow(rat_dot(v, theta), q);
    }
    return s;
}

double cumulant(const StepDistribution& p, const Realization& r, int q, Vec2 theta) {
    if (q < 1) throw DomainError("cumulant order must be >= 1");
    // chi_q = M_q - sum_{m=1}^{q-1} C(q-1, m-1) chi_m M_{q-m}, with M_0 = 1.
    std::vector<double> M(q + 1, 0.0), chi(q + 1, 0.0);
    M[0] = 1.0;
    for (int i = 1; i <= q; ++i) M[i] = moment(p, r, i, theta);
    for (int i = 1; i <= q; ++i) {
        double s = M[i];
        double binom = 1.0;  // C(i-1, m-1), m = 1..
        for (int m = 1; m < i; ++m) {
            s -= binom * chi[m] * M[i - m];
            binom = binom * static_cast<double>(i - 1 - (m - 1)) / static_cast<double>(m);
        }
        chi[i] = s;
    }
    return chi[q];
}

std::complex<double> char_fn(const StepDistribution& p, const Realization& r, Vec2 theta) {
    std::complex<double> s = 0.0;
    for (const Step& st : steps(p)) {
        double phase = dot(r.embed(st.offset), theta);
        s += to_double(st.probability) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return s;
}

std::complex<double> char_fn_integer_sincos(const StepDistribution& p, Vec2 theta) {
    double ah = to_double(p.alpha_hat), bh = to_double(p.beta_hat), gh = to_double(p.gamma_hat);
    double k = to_double(p.kappa);
    double t1 = theta.x, t2 = theta.y;
    std::complex<double> phi1(ah * std::cos(t1), k * std::sin(t1));
    std::complex<double> phi2(bh * std::cos(-t2), k * std::sin(-t2));
    std::complex<double> phi3(gh * std::cos(t2 - t1), k * std::sin(t2 - t1));
    return phi1 + phi2 + phi3;
}

CovarianceData covariance(const StepDistribution& p, const Realization& r) {
    CovarianceData cov;
    double q11 = moment(p, r, 2, {1, 0});
    double q22 = moment(p, r, 2, {0, 1});
    double q12 = (moment(p, r, 2, {1, 1}) - q11 - q22) / 2.0;  // polarization
    cov.Q = {q11, q12, q12, q22};
    if (cov.Q.det() <= 0.0 || q11 <= 0.0)
        throw DegenerateCovariance("covariance matrix not positive definite");
    cov.Q_inv = cov.Q.inverse();

    cov.Q_hat = {{{p.alpha_hat + p.gamma_hat, -p.gamma_hat},
                  {-p.gamma_hat, p.beta_hat + p.gamma_hat}}};

    const Rational& G = p.gamma_fun;
    cov.gram[0][0] = (p.beta_hat + p.gamma_hat) / G;
    cov.gram[1][1] = (p.gamma_hat + p.alpha_hat) / G;
    cov.gram[2][2] = (p.alpha_hat + p.beta_hat) / G;
    cov.gram[0][1] = cov.gram[1][0] = p.gamma_hat / G;
    cov.gram[1][2] = cov.gram[2][1] = p.alpha_hat / G;
    cov.gram[2][0] = cov.gram[0][2] = -p.beta_hat / G;

    // Q = T Qhat T^t, relative tolerance 1e-14.
    Mat2 qh = {to_double(cov.Q_hat[0][0]), to_double(cov.Q_hat[0][1]),
               to_double(cov.Q_hat[1][0]), to_double(cov.Q_hat[1][1])};
    Mat2 rec = r.T() * qh * r.T().transpose();
    double scale = std::abs(q11) + std::abs(q22) + std::abs(q12);
    const std::array<std::pair<double, double>, 4> entries = {
        {{rec.a11, cov.Q.a11}, {rec.a12, cov.Q.a12}, {rec.a21, cov.Q.a21}, {rec.a22, cov.Q.a22}}};
    for (auto [lhs, rhs] : entries)
        if (std::abs(lhs - rhs) > 1e-14 * scale)
            throw DegenerateCovariance("Q != T Qhat T^t beyond tolerance");
    return cov;
}

}  // namespace triwalk
