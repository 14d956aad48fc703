#include "triwalk/kernel.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace triwalk {

std::array<EmbeddedStep, 6> step_support(const StepDistribution& p, const Realization& r) {
    std::array<EmbeddedStep, 6> out;
    auto st = steps(p);
    for (std::size_t i = 0; i < 6; ++i) out[i] = {r.embed(st[i].offset), st[i].probability};
    return out;
}

KernelTable::KernelTable(const StepDistribution& p, KernelMode mode) : p_(p), mode_(mode) {
    step_den_ = p.common_denominator();
    auto st = steps(p);
    for (std::size_t i = 0; i < 6; ++i) {
        Rational scaled = st[i].probability * step_den_;
        step_num_[i] = numerator(scaled);  // denominator is 1 by construction
        step_flt_[i] = to_double(st[i].probability);
    }
}

KernelTable KernelTable::delta(const StepDistribution& p, KernelMode mode) {
    KernelTable t(p, mode);
    t.n_ = 0;
    t.radius_ = 0;
    if (mode == KernelMode::Exact)
        t.num_ = {BigInt(1)};
    else
        t.flt_ = {1.0};
    return t;
}

void KernelTable::evolve(int steps) { evolve_impl(steps, true); }
void KernelTable::evolve_serial(int steps) { evolve_impl(steps, false); }

void KernelTable::evolve_impl(int steps, bool parallel) {
    // Step offsets matching steps(): (+1,0) (-1,0) (0,+1) (0,-1) (-1,+1) (+1,-1).
    static constexpr int dx1[6] = {1, -1, 0, 0, -1, 1};
    static constexpr int dx2[6] = {0, 0, 1, -1, 1, -1};

    for (int s = 0; s < steps; ++s) {
        int r_old = radius_;
        int r_new = r_old + 1;
        if (r_new > capacity_)
            throw CapacityExceeded("kernel support exceeds configured capacity");
        std::int64_t w_old = 2 * r_old + 1;
        std::int64_t w_new = 2 * r_new + 1;
        auto old_at = [&](std::int64_t i, std::int64_t j) -> std::size_t {
            return static_cast<std::size_t>(i + r_old) * w_old + static_cast<std::size_t>(j + r_old);
        };
        auto new_at = [&](std::int64_t i, std::int64_t j) -> std::size_t {
            return static_cast<std::size_t>(i + r_new) * w_new + static_cast<std::size_t>(j + r_new);
        };

        if (mode_ == KernelMode::Exact) {
            std::vector<BigInt> next(static_cast<std::size_t>(w_new * w_new));
            for (std::int64_t i = -r_new; i <= r_new; ++i) {
                for (std::int64_t j = -r_new; j <= r_new; ++j) {
                    BigInt acc = 0;
                    for (int k = 0; k < 6; ++k) {
                        if (step_num_[k] == 0) continue;
                        std::int64_t pi = i - dx1[k], pj = j - dx2[k];
                        if (pi < -r_old || pi > r_old || pj < -r_old || pj > r_old) continue;
                        const BigInt& v = num_[old_at(pi, pj)];
                        if (v != 0) acc += step_num_[k] * v;
                    }
                    next[new_at(i, j)] = std::move(acc);
                }
            }
            num_ = std::move(next);
        } else {
            std::vector<double> next(static_cast<std::size_t>(w_new * w_new), 0.0);
#pragma omp parallel for schedule(static) if (parallel)
            for (std::int64_t i = -r_new; i <= r_new; ++i) {
                for (std::int64_t j = -r_new; j <= r_new; ++j) {
                    double acc = 0.0;
                    for (int k = 0; k < 6; ++k) {
                        std::int64_t pi = i - dx1[k], pj = j - dx2[k];
                        if (pi < -r_old || pi > r_old || pj < -r_old || pj > r_old) continue;
                        acc += step_flt_[k] * flt_[old_at(pi, pj)];
                    }
                    next[new_at(i, j)] = acc;
                }
            }
            flt_ = std::move(next);
        }
        radius_ = r_new;
        ++n_;
    }
}

Rational KernelTable::exact_at(LatticePoint y) const {
    if (mode_ != KernelMode::Exact) throw DomainError("exact_at requires Exact mode");
    if (std::llabs(y.x1) > radius_ || std::llabs(y.x2) > radius_) return 0;
    BigInt den = 1;
    for (int i = 0; i < n_; ++i) den *= step_den_;
    return Rational(num_[index(y.x1, y.x2)], den);
}

double KernelTable::value_at(LatticePoint y) const {
    if (std::llabs(y.x1) > radius_ || std::llabs(y.x2) > radius_) return 0.0;
    if (mode_ == KernelMode::Exact) return to_double(exact_at(y));
    return flt_[index(y.x1, y.x2)];
}

Rational KernelTable::total_mass_exact() const {
    if (mode_ != KernelMode::Exact) throw DomainError("total_mass_exact requires Exact mode");
    BigInt s = 0;
    for (const BigInt& v : num_) s += v;
    BigInt den = 1;
    for (int i = 0; i < n_; ++i) den *= step_den_;
    return Rational(s, den);
}

double KernelTable::total_mass_float() const {
    if (mode_ != KernelMode::Float) throw DomainError("total_mass_float requires Float mode");
    double sum = 0.0, c = 0.0;
    for (double v : flt_) {
        double t = v - c;
        double u = sum + t;
        c = (u - sum) - t;
        sum = u;
    }
    return sum;
}

Rational p_n(const StepDistribution& p, int n, LatticePoint y) {
    if (n < 0) throw DomainError("n must be nonnegative");
    KernelTable t = KernelTable::delta(p, KernelMode::Exact);
    t.evolve(n);
    return t.exact_at(y);
}

std::vector<double> p_n_float_series(const StepDistribution& p, const std::vector<int>& n_list,
                                     LatticePoint y) {
    int n_max = 0;
    for (int n : n_list) n_max = std::max(n_max, n);
    KernelTable t = KernelTable::delta(p, KernelMode::Float);
    std::vector<double> out(n_list.size(), 0.0);
    for (int n = 0; n <= n_max; ++n) {
        for (std::size_t i = 0; i < n_list.size(); ++i)
            if (n_list[i] == n) out[i] = t.value_at(y);
        if (n < n_max) t.evolve(1);
    }
    return out;
}

namespace {

int quad_nodes(int n, std::int64_t y_l1) {
    // Integrand is a trig polynomial of degree <= n + |y|_1 per axis; an
    // M-point equispaced rule with M = 2(n + |y|_1) + 4 integrates it exactly.
    return static_cast<int>(2 * (n + y_l1) + 4);
}

}  // namespace

double fourier_p_n(const StepDistribution& p, int n, LatticePoint y) {
    if (n < 1) throw DomainError("fourier_p_n requires n >= 1");
    const int M = quad_nodes(n, std::llabs(y.x1) + std::llabs(y.x2));
    const double h = 2.0 * std::numbers::pi / M;
    double acc = 0.0;
    for (int a = 0; a < M; ++a) {
        double t1 = -std::numbers::pi + a * h;
        for (int b = 0; b < M; ++b) {
            double t2 = -std::numbers::pi + b * h;
            std::complex<double> phi = char_fn_integer_sincos(p, {t1, t2});
            std::complex<double> val = std::pow(phi, n) *
                std::exp(std::complex<double>(0.0, -(y.x1 * t1 + y.x2 * t2)));
            acc += val.real();
        }
    }
    return acc / (static_cast<double>(M) * M);
}

std::vector<std::vector<double>> fourier_block(const StepDistribution& p, int n, int ymax) {
    if (n < 1) throw DomainError("fourier_block requires n >= 1");
    const int M = quad_nodes(n, 2 * static_cast<std::int64_t>(ymax));
    const double h = 2.0 * std::numbers::pi / M;
    const int W = 2 * ymax + 1;

    // inner[a][y2+ymax] = sum_b phi^n(t_a, t_b) e^{-i y2 t_b}
    std::vector<std::vector<std::complex<double>>> inner(
        M, std::vector<std::complex<double>>(W, 0.0));
#pragma omp parallel for schedule(static)
    for (int a = 0; a < M; ++a) {
        double t1 = -std::numbers::pi + a * h;
        for (int b = 0; b < M; ++b) {
            double t2 = -std::numbers::pi + b * h;
            std::complex<double> phin = std::pow(char_fn_integer_sincos(p, {t1, t2}), n);
            for (int y2 = -ymax; y2 <= ymax; ++y2)
                inner[a][y2 + ymax] += phin * std::exp(std::complex<double>(0.0, -y2 * t2));
        }
    }
    std::vector<std::vector<double>> out(W, std::vector<double>(W, 0.0));
    for (int y1 = -ymax; y1 <= ymax; ++y1) {
        for (int y2 = -ymax; y2 <= ymax; ++y2) {
            std::complex<double> s = 0.0;
            for (int a = 0; a < M; ++a) {
                double t1 = -std::numbers::pi + a * h;
                s += inner[a][y2 + ymax] * std::exp(std::complex<double>(0.0, -y1 * t1));
            }
            out[y1 + ymax][y2 + ymax] = s.real() / (static_cast<double>(M) * M);
        }
    }
    return out;
}

int sublattice_of(LatticePoint y) {
    return static_cast<int>(((y.x1 - y.x2) % 3 + 3) % 3);
}

bool period_check(const StepDistribution& p, int n, LatticePoint x, LatticePoint y) {
    if (!p.is_periodic()) throw NotPeriodic("period_check requires kappa = 1/3");
    int k = sublattice_of(x), l = sublattice_of(y);
    return ((n - (l - k)) % 3 + 3) % 3 == 0;
}

}  // namespace triwalk
