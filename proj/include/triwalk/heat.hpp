#pragma once

#include "triwalk/kernel.hpp"
#include "triwalk/standard_realization.hpp"

#include <vector>

namespace triwalk {

/// Real-valued function on the lattice ball {|x1|,|x2| <= radius}; reads
/// outside the ball return 0.
class GridFunction {
  public:
    explicit GridFunction(int radius)
        : radius_(radius), values_(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1), 0.0) {}

    int radius() const { return radius_; }

    double at(LatticePoint x) const {
        if (std::llabs(x.x1) > radius_ || std::llabs(x.x2) > radius_) return 0.0;
        return values_[index(x)];
    }
    void set(LatticePoint x, double v) {
        if (std::llabs(x.x1) > radius_ || std::llabs(x.x2) > radius_)
            throw DomainError("grid point outside ball");
        values_[index(x)] = v;
    }

    template <class F>
    void fill(F&& fn) {
        for (std::int64_t i = -radius_; i <= radius_; ++i)
            for (std::int64_t j = -radius_; j <= radius_; ++j)
                values_[index({i, j})] = fn(LatticePoint{i, j});
    }

  private:
    std::size_t index(LatticePoint x) const {
        return static_cast<std::size_t>(x.x1 + radius_) * (2 * radius_ + 1) +
               static_cast<std::size_t>(x.x2 + radius_);
    }
    int radius_;
    std::vector<double> values_;
};

/// Smooth compactly supported test function from a closed-form family, with
/// the Laplacian available analytically. The Gaussian member is compactly
/// supported in the numerical sense (cut at 8.5 sigma, tail below 1e-15).
class TestFunction {
  public:
    static TestFunction gaussian(double sigma, double amplitude = 1.0);
    /// exp(1 - R^2/(R^2 - r^2)) on r < R, zero outside.
    static TestFunction bump(double R, double amplitude = 1.0);
    /// x1 times the bump.
    static TestFunction poly_bump(double R, double amplitude = 1.0);

    double operator()(Vec2 z) const;
    double laplacian(Vec2 z) const;
    double support_radius() const { return support_; }
    double sup_norm() const;

  private:
    enum class Kind { Gaussian, Bump, PolyBump };
    Kind kind_;
    double scale_;  // sigma or R
    double amplitude_;
    double support_;
};

/// Delta_d f(x) = sum_e p(e) (f(x) - f(x + e)).
double discrete_laplacian(const StepDistribution& p, const GridFunction& f, LatticePoint x);

/// L^n f by a single convolution with the n-step kernel (Float mode).
GridFunction transition_apply(const StepDistribution& p, const GridFunction& f, int n);

/// Reference path: n-fold application of L = I - Delta_d.
GridFunction transition_apply_stepwise(const StepDistribution& p, const GridFunction& f, int n);

/// Heat semigroup H_t f(x) by adaptive quadrature over the support disk.
double heat_apply(double t, const TestFunction& f, Vec2 x, double tol = 1e-10);

/// sup over lattice points of |(3/d^2) Delta_d (f o d)(x) + (1/2)(Lap f)(d x)|
/// in the standard realization; decays like O(delta).
double generator_gap(const StepDistribution& p, const StandardBasis& sb, const TestFunction& f,
                     double delta);

/// |L^n (f o delta_n)(x_n) - H_t f(delta_n x_n)| with delta_n = sqrt(3t/n).
double semigroup_gap(const StepDistribution& p, const StandardBasis& sb, const TestFunction& f,
                     double t, int n, LatticePoint x_n);

}  // namespace triwalk
