#pragma once

#include "triwalk/walk_model.hpp"

#include <vector>

namespace triwalk {

enum class KernelMode { Exact, Float };

/// Six step vectors of a realization with their probabilities,
/// zero-probability steps retained.
struct EmbeddedStep {
    Vec2 vector;
    Rational probability;
};
std::array<EmbeddedStep, 6> step_support(const StepDistribution& p, const Realization& r);

/// n-step probability mass function over lattice coordinates, stored on a
/// dense origin-centered square that grows by one per step.
///
/// Exact mode keeps integer numerators over the implicit denominator d^n
/// (d = common denominator of the step probabilities), so every entry is a
/// rational whose denominator divides d^n and convolution is pure integer
/// arithmetic. Float mode is the workhorse for large n; its inner loop is
/// OpenMP-parallel over rows, with a serial reference kept for testing.
class KernelTable {
  public:
    static KernelTable delta(const StepDistribution& p, KernelMode mode);

    int n() const { return n_; }
    int radius() const { return radius_; }
    KernelMode mode() const { return mode_; }
    const StepDistribution& walk() const { return p_; }

    int capacity() const { return capacity_; }
    void set_capacity(int c) { capacity_ = c; }

    /// Advances the table by `steps` convolutions with the one-step law.
    void evolve(int steps);
    /// Same result, single-threaded; reference implementation.
    void evolve_serial(int steps);

    Rational exact_at(LatticePoint y) const;
    double value_at(LatticePoint y) const;

    Rational total_mass_exact() const;
    /// Kahan-compensated sum of the float table.
    double total_mass_float() const;

    template <class F>
    void for_each(F&& fn) const {
        for (std::int64_t i = -radius_; i <= radius_; ++i)
            for (std::int64_t j = -radius_; j <= radius_; ++j)
                fn(LatticePoint{i, j}, value_at({i, j}));
    }

  private:
    KernelTable(const StepDistribution& p, KernelMode mode);
    std::size_t index(std::int64_t i, std::int64_t j) const {
        return static_cast<std::size_t>(i + radius_) * (2 * radius_ + 1) +
               static_cast<std::size_t>(j + radius_);
    }
    void evolve_impl(int steps, bool parallel);

    StepDistribution p_;
    KernelMode mode_;
    int n_ = 0;
    int radius_ = 0;
    int capacity_ = 4096;
    BigInt step_den_ = 1;                  // d
    std::array<BigInt, 6> step_num_;       // c_s with p_s = c_s / d
    std::array<double, 6> step_flt_;
    std::vector<BigInt> num_;              // exact numerators over d^n
    std::vector<double> flt_;
};

/// Exact n-step probability p(n, 0, y) by rational dynamic programming.
Rational p_n(const StepDistribution& p, int n, LatticePoint y);

/// Float-mode p(n, 0, y) for every n in n_list (single DP sweep to max n).
std::vector<double> p_n_float_series(const StepDistribution& p, const std::vector<int>& n_list,
                                     LatticePoint y);

/// Fourier-inversion value of p(n, 0, y): equispaced trapezoid rule over
/// [-pi, pi]^2 in the integer basis, exact for the trigonometric polynomial
/// integrand once M >= 2(n + |y|_1) + 2.
double fourier_p_n(const StepDistribution& p, int n, LatticePoint y);

/// All values p(n, 0, y) for |y1|,|y2| <= ymax at once, via separable
/// partial sums over the quadrature grid.
std::vector<std::vector<double>> fourier_block(const StepDistribution& p, int n, int ymax);

/// Index k of the sublattice V_k containing y (kappa = 1/3 decomposition);
/// k = (y1 - y2) mod 3.
int sublattice_of(LatticePoint y);

/// True iff n = (l - k) mod 3 for x in V_k, y in V_l. Throws NotPeriodic
/// unless kappa = 1/3.
bool period_check(const StepDistribution& p, int n, LatticePoint x, LatticePoint y);

}  // namespace triwalk
