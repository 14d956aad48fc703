#include "triwalk/expansion.hpp"

#include "triwalk/kernel.hpp"
#include "triwalk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace triwalk {

namespace {

/// <Q^-1 e_i, x> expanded in lattice coordinates: x1 g_{i1} + x2 g_{i2}.
GaussPolynomial qinv_dot_x(int i, const CovarianceData& cov) {
    GaussPolynomial p;
    p.add_term({1, 0}, cov.g(i, 1));
    p.add_term({0, 1}, cov.g(i, 2));
    return p;
}

GaussPolynomial partial(const GaussPolynomial& g, int i) {
    // d/dx3 := d/dx2 - d/dx1
    if (i == 3) return g.derivative(2) - g.derivative(1);
    return g.derivative(i);
}

}  // namespace

GaussPolynomial hermite_g(const std::vector<int>& indices, const CovarianceData& cov) {
    if (indices.empty()) throw DomainError("hermite_g needs at least one index");
    GaussPolynomial g = -qinv_dot_x(indices[0], cov);
    for (std::size_t k = 1; k < indices.size(); ++k) {
        int i = indices[k];
        g = (-qinv_dot_x(i, cov)) * g + partial(g, i);
    }
    return g;
}

FourierCheck gaussian_fourier_check(const StepDistribution& p, const Realization& r,
                                    const std::vector<int>& indices, double x1, double x2) {
    if (indices.size() > 6) throw DomainError("index list capped at length 6");
    CovarianceData cov = covariance(p, r);
    Vec2 x = r.e1() * x1 + r.e2() * x2;

    // Integration box: Gaussian factor below 1e-300 outside |theta| ~ L.
    double lambda_min = 0.5 * (cov.Q.a11 + cov.Q.a22 -
                               std::hypot(cov.Q.a11 - cov.Q.a22, 2.0 * cov.Q.a12));
    double L = std::sqrt(2.0 * 700.0 / lambda_min);
    auto integrand = [&](double t1, double t2) {
        Vec2 theta{t1, t2};
        double prod = 1.0;
        for (int i : indices) prod *= dot(r.e(i), theta);
        double quad = cov.Q.a11 * t1 * t1 + 2.0 * cov.Q.a12 * t1 * t2 + cov.Q.a22 * t2 * t2;
        double phase = -dot(x, theta);
        return prod * std::exp(-0.5 * quad) *
               std::complex<double>(std::cos(phase), std::sin(phase));
    };
    FourierCheck out;
    out.numeric = integrate2d_complex(integrand, -L, L, -L, L, 1e-12);

    GaussPolynomial g = hermite_g(indices, cov);
    double quad_inv = to_double(cov.g(1, 1)) * x1 * x1 + 2.0 * to_double(cov.g(1, 2)) * x1 * x2 +
                      to_double(cov.g(2, 2)) * x2 * x2;
    std::complex<double> ipow = std::pow(std::complex<double>(0.0, 1.0),
                                         static_cast<int>(indices.size()));
    out.symbolic = 2.0 * std::numbers::pi * ipow / std::sqrt(cov.Q.det()) *
                   std::exp(-0.5 * quad_inv) * g.eval<double>(x1, x2);
    return out;
}

namespace {

IndexPolynomial moment_polynomial(const StepDistribution& p, int q) {
    if (q == 1) return IndexPolynomial();
    if (q % 2 == 1) {
        return IndexPolynomial::power_of_var(1, q, p.kappa) -
               IndexPolynomial::power_of_var(2, q, p.kappa) +
               IndexPolynomial::power_of_var(3, q, p.kappa);
    }
    return IndexPolynomial::power_of_var(1, q, p.alpha_hat) +
           IndexPolynomial::power_of_var(2, q, p.beta_hat) +
           IndexPolynomial::power_of_var(3, q, p.gamma_hat);
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational binom(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace

IndexPolynomial cumulant_polynomial(const StepDistribution& p, int q) {
    // chi_q = M_q - sum_{m=1}^{q-1} C(q-1, m-1) chi_m M_{q-m}, M_0 = 1.
    std::vector<IndexPolynomial> M(q + 1), chi(q + 1);
    M[0] = IndexPolynomial(Rational(1));
    for (int i = 1; i <= q; ++i) M[i] = moment_polynomial(p, i);
    for (int i = 1; i <= q; ++i) {
        IndexPolynomial s = M[i];
        for (int m = 1; m < i; ++m)
            s = s - (chi[m] * M[i - m]) * binom(i - 1, m - 1);
        chi[i] = s;
    }
    return chi[q];
}

std::vector<IndexPolynomial> edgeworth_b_index(const StepDistribution& p, int N) {
    // phi(theta/sqrt n)^n = e^{-<Q theta,theta>/2} exp(sum_{q>=3} i^q chi_q s^{q-2}/q!)
    // with s = n^{-1/2}. The i-powers are carried implicitly: every monomial of
    // degree d in (u1,u2,u3) owns a factor (i)^d, which is consistent under
    // multiplication because the cumulant blocks are homogeneous.
    std::vector<IndexPolynomial> A(N + 1);  // series coefficient of s^j
    for (int j = 1; j <= N; ++j) A[j] = cumulant_polynomial(p, j + 2) * (1 / factorial(j + 2));

    std::vector<IndexPolynomial> B(N + 1);
    B[0] = IndexPolynomial(Rational(1));
    // exp(A) = sum A^k / k!, truncated at order N in s.
    std::vector<IndexPolynomial> Ak(N + 1);  // current power A^k
    Ak[0] = IndexPolynomial(Rational(1));
    for (int k = 1; k <= N; ++k) {
        std::vector<IndexPolynomial> next(N + 1);
        for (int a = 1; a <= N; ++a)
            for (int b = 0; a + b <= N; ++b)
                next[a + b] = next[a + b] + A[a] * Ak[b];
        Ak = std::move(next);
        Rational inv_kfact = 1 / factorial(k);
        for (int j = k; j <= N; ++j) B[j] = B[j] + Ak[j] * inv_kfact;
    }
    return B;
}

std::vector<std::vector<EdgeworthComponent>> edgeworth_b(const StepDistribution& p, int N) {
    std::vector<IndexPolynomial> B = edgeworth_b_index(p, N);
    std::vector<std::vector<EdgeworthComponent>> out(N + 1);
    for (int j = 0; j <= N; ++j) {
        // Split by homogeneous degree; each degree-k block is b_j^{(k)} with i^k.
        std::map<int, IndexPolynomial> by_degree;
        for (const auto& [key, v] : B[j].terms())
            by_degree[key[0] + key[1] + key[2]].add_term(key, v);
        for (const auto& [deg, poly] : by_degree)
            out[j].push_back({deg, poly.canonical()});
    }
    return out;
}

std::vector<GaussPolynomial> correction_polynomials(const StepDistribution& p, int N) {
    if (N < 1) throw DomainError("correction order must be >= 1");
    CovarianceData cov = covariance(p, Realization::integer_basis());
    std::vector<IndexPolynomial> B = edgeworth_b_index(p, N);
    std::vector<GaussPolynomial> out(N);
    for (int j = 1; j <= N; ++j) {
        GaussPolynomial P;
        for (const auto& [key, coeff] : B[j].terms()) {
            std::vector<int> indices;
            for (int v = 0; v < 3; ++v)
                for (int rep = 0; rep < key[v]; ++rep) indices.push_back(v + 1);
            int deg = static_cast<int>(indices.size());
            // (i)^deg from b_j times (i)^deg from the Gaussian integral.
            Rational sign = (deg % 2 == 0) ? Rational(1) : Rational(-1);
            P = P + hermite_g(indices, cov) * (coeff * sign);
        }
        out[j - 1] = P;
    }
    return out;
}

Rational a1_closed_form(const StepDistribution& p, const Rational& y1, const Rational& y2,
                        A1Basis basis) {
    const Rational &ah = p.alpha_hat, &bh = p.beta_hat, &gh = p.gamma_hat;
    const Rational& G = p.gamma_fun;
    const Rational& k = p.kappa;
    auto sq = [](const Rational& r) { return r * r; };
    auto cube = [](const Rational& r) { return r * r * r; };

    if (basis == A1Basis::StandardCoords) {
        Rational a0 = -1 + (sq(1 / G) / 8) * (ah * sq(bh + gh) + bh * sq(gh + ah) + gh * sq(ah + bh));
        // The linear block carries a factor 1/2: it is the linear part of P_1,
        // which is (kappa/2) (g12 <Q^-1 e3,y> + g23 <Q^-1 e1,y> + g31 <Q^-1 e2,y>).
        // Cross-checked against Richardson-extrapolated DP residuals at y != 0.
        Rational a1 = (sq(1 / G) / 2) * ((ah * bh - 2 * bh * gh + gh * ah) * y1 +
                                         (-ah * bh - bh * gh + 2 * gh * ah) * y2);
        Rational a2 = (Rational(3) / (8 * sq(G))) * (-1 + 5 * ah * bh * gh / G);
        return a0 + k * a1 + k * k * a2;
    }

    // Gram form: everything through <Q^-1 e_i, e_j> and <Q^-1 e_i, y>.
    CovarianceData cov = covariance(p, Realization::integer_basis());
    auto g = [&](int i, int j) { return cov.g(i, j); };
    auto gy = [&](int i) { return g(i, 1) * y1 + g(i, 2) * y2; };

    Rational a0 = -1 + (ah * sq(g(1, 1)) + bh * sq(g(2, 2)) + gh * sq(g(3, 3))) / 8;
    Rational a1 = (g(1, 2) * gy(3) + g(2, 3) * gy(1) + g(3, 1) * gy(2)) / 2;
    Rational a2 = Rational(-5, 24) * (cube(g(1, 1)) + cube(g(2, 2)) + cube(g(3, 3))) +
                  Rational(1, 6) * (cube(g(1, 2)) + cube(g(2, 3)) - cube(g(3, 1))) +
                  Rational(1, 4) * (g(1, 1) * g(1, 2) * g(2, 2) + g(2, 2) * g(2, 3) * g(3, 3) -
                                    g(3, 3) * g(3, 1) * g(1, 1));
    return a0 + k * a1 + k * k * a2;
}

ExpansionSeries build_expansion(const StepDistribution& p, int N) {
    ExpansionSeries s;
    s.N = N;
    s.b = edgeworth_b(p, N);
    if (N >= 1) s.P = correction_polynomials(p, N);
    return s;
}

double asymptotic_p(const StepDistribution& p, const StandardBasis& sb,
                    const ExpansionSeries& series, int n, LatticePoint x, LatticePoint y) {
    if (n < 1) throw DomainError("asymptotic_p requires n >= 1");
    double c = 3.0;
    if (p.is_periodic()) {
        if (!period_check(p, n, x, y))
            throw PeriodicityViolated("n is off the kappa=1/3 congruence class");
        c = 9.0;
    }
    LatticePoint d = y - x;
    Vec2 v = sb.embed(d);
    double sqrt_n = std::sqrt(static_cast<double>(n));
    double series_sum = 1.0;
    for (int j = 1; j <= series.N; ++j)
        series_sum += std::pow(sqrt_n, -j) *
                      series.P[j - 1].eval<double>(d.x1 / sqrt_n, d.x2 / sqrt_n);
    return c * sb.A_G / (2.0 * std::numbers::pi * n) *
           std::exp(-1.5 / n * v.norm2()) * series_sum;
}

double asymptotic_p(const StepDistribution& p, const StandardBasis& sb, int n, LatticePoint x,
                    LatticePoint y, int N) {
    return asymptotic_p(p, sb, build_expansion(p, N), n, x, y);
}

double richardson(const std::vector<double>& n_values, const std::vector<double>& values,
                  const std::vector<double>& exponents) {
    std::vector<double> n = n_values, v = values;
    for (double e : exponents) {
        if (v.size() < 2) break;
        std::vector<double> nn(v.size() - 1), nv(v.size() - 1);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            double w0 = std::pow(n[i], e), w1 = std::pow(n[i + 1], e);
            nv[i] = (w1 * v[i + 1] - w0 * v[i]) / (w1 - w0);
            nn[i] = n[i + 1];
        }
        n = std::move(nn);
        v = std::move(nv);
    }
    return v.back();
}

std::vector<double> a1_residuals(const StepDistribution& p, LatticePoint y,
                                 const std::vector<int>& n_grid) {
    StandardBasis sb = standard_basis(p);
    double c = p.is_periodic() ? 9.0 : 3.0;
    if (p.is_periodic())
        for (int n : n_grid)
            if (!period_check(p, n, {0, 0}, y))
                throw PeriodicityViolated("n grid is off the congruence class of y");
    std::vector<double> pn = p_n_float_series(p, n_grid, y);
    double norm2 = sb.embed(y).norm2();
    std::vector<double> r(n_grid.size());
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        double n = n_grid[i];
        double gauss = c * sb.A_G * std::exp(-1.5 * norm2 / n);
        r[i] = n * (2.0 * std::numbers::pi * n * pn[i] / gauss - 1.0);
    }
    return r;
}

double extract_a1_numeric(const StepDistribution& p, LatticePoint y,
                          const std::vector<int>& n_grid) {
    if (n_grid.size() < 3) throw InsufficientGrid("need at least 3 grid points");
    std::vector<double> r = a1_residuals(p, y, n_grid);
    std::vector<double> n(n_grid.begin(), n_grid.end());
    // r(n) has an expansion in integer powers of 1/n (odd-j P_j are odd
    // polynomials, so half-integer powers cancel).
    std::vector<double> exponents;
    for (std::size_t e = 1; e < n_grid.size(); ++e) exponents.push_back(static_cast<double>(e));
    return richardson(n, r, exponents);
}

}  // namespace triwalk
