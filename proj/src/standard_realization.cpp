#include "triwalk/standard_realization.hpp"

#include <algorithm>
#include <cmath>

namespace triwalk {

StandardBasis standard_basis(const StepDistribution& p) {
    double G = to_double(p.gamma_fun);
    double bg = to_double(p.beta_hat + p.gamma_hat);
    StandardBasis sb;
    sb.A_G = 1.0 / (3.0 * std::sqrt(G));
    sb.l = std::sqrt(bg / (3.0 * G));
    sb.h1 = {sb.l, 0.0};
    sb.h2 = {to_double(p.gamma_hat) / bg * sb.l, std::sqrt(G) / bg * sb.l};
    return sb;
}

double energy(const StepDistribution& p, double u, double v1, double v2) {
    if (u <= 0.0 || v2 <= 0.0) throw DomainError("energy requires u > 0 and v2 > 0");
    double ah = to_double(p.alpha_hat), bh = to_double(p.beta_hat), gh = to_double(p.gamma_hat);
    return 0.5 * (ah * u * u + bh * (v1 * v1 + v2 * v2) +
                  gh * ((v1 - u) * (v1 - u) + v2 * v2));
}

namespace {

struct Simplex2 {
    std::array<std::array<double, 2>, 3> v;
    std::array<double, 3> f;
};

}  // namespace

EnergyMinimizer minimize_energy(const StepDistribution& p, double area) {
    if (area <= 0.0) throw DomainError("area must be positive");

    auto objective = [&](double u, double v1) {
        if (u <= 1e-12) return 1e300;
        return energy(p, u, v1, area / u);
    };

    const int budget = 10000;
    int used = 0;
    double tol = 1e-12;

    std::array<double, 2> best = {std::sqrt(area), 0.0};
    double best_f = objective(best[0], best[1]);

    // Nelder-Mead with a couple of restarts from the incumbent.
    for (int restart = 0; restart < 4 && used < budget; ++restart) {
        double h = (restart == 0) ? 0.5 * best[0] : 0.1 * best[0];
        Simplex2 s;
        s.v[0] = best;
        s.v[1] = {best[0] + h, best[1]};
        s.v[2] = {best[0], best[1] + h};
        for (int i = 0; i < 3; ++i) s.f[i] = objective(s.v[i][0], s.v[i][1]);

        while (used++ < budget) {
            std::array<int, 3> idx = {0, 1, 2};
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s.f[a] < s.f[b]; });
            int lo = idx[0], mid = idx[1], hi = idx[2];
            if (s.f[hi] - s.f[lo] < tol * (1.0 + std::abs(s.f[lo]))) break;

            std::array<double, 2> c = {(s.v[lo][0] + s.v[mid][0]) / 2.0,
                                       (s.v[lo][1] + s.v[mid][1]) / 2.0};
            auto point = [&](double t) {
                return std::array<double, 2>{c[0] + t * (c[0] - s.v[hi][0]),
                                             c[1] + t * (c[1] - s.v[hi][1])};
            };
            auto refl = point(1.0);
            double fr = objective(refl[0], refl[1]);
            if (fr < s.f[lo]) {
                auto exp_pt = point(2.0);
                double fe = objective(exp_pt[0], exp_pt[1]);
                if (fe < fr) { s.v[hi] = exp_pt; s.f[hi] = fe; }
                else { s.v[hi] = refl; s.f[hi] = fr; }
            } else if (fr < s.f[mid]) {
                s.v[hi] = refl; s.f[hi] = fr;
            } else {
                auto con = point(-0.5);
                double fc = objective(con[0], con[1]);
                if (fc < s.f[hi]) { s.v[hi] = con; s.f[hi] = fc; }
                else {
                    for (int i : {mid, hi}) {
                        s.v[i] = {(s.v[i][0] + s.v[lo][0]) / 2.0, (s.v[i][1] + s.v[lo][1]) / 2.0};
                        s.f[i] = objective(s.v[i][0], s.v[i][1]);
                    }
                }
            }
        }
        for (int i = 0; i < 3; ++i)
            if (s.f[i] < best_f) { best_f = s.f[i]; best = s.v[i]; }
    }
    if (used >= budget) throw NonConvergence("energy minimization exceeded iteration budget");

    // Polish: for fixed u the optimal shear is v1 = gh u / (bh + gh), which
    // reduces the problem to one variable; a few Newton steps on the reduced
    // energy E(u) = (A u^2 + B / u^2) / 2 take the simplex output from ~1e-6
    // to machine precision.
    double bh = to_double(p.beta_hat), gh = to_double(p.gamma_hat);
    double ah = to_double(p.alpha_hat);
    double A = ah + bh * gh / (bh + gh);
    double B = (bh + gh) * area * area;
    double u = std::abs(best[0]);
    for (int it = 0; it < 50; ++it) {
        double grad = A * u - B / (u * u * u);
        double hess = A + 3.0 * B / (u * u * u * u);
        double du = grad / hess;
        u -= du;
        ++used;
        if (std::abs(du) < 1e-15 * u) break;
    }

    EnergyMinimizer m;
    m.u = u;
    m.v1 = gh * u / (bh + gh);
    m.v2 = area / m.u;
    m.value = energy(p, m.u, m.v1, m.v2);
    m.iterations = used;
    return m;
}

}  // namespace triwalk
