#pragma once

#include "triwalk/errors.hpp"
#include "triwalk/geometry.hpp"
#include "triwalk/lattice.hpp"
#include "triwalk/rational.hpp"

#include <array>
#include <complex>
#include <vector>

namespace triwalk {

/// One-step distribution (alpha, alpha', beta, beta', gamma, gamma') on the six
/// triangular directions, with the derived quantities kappa, hatted sums and
/// Gamma(p). All fields exact rationals; immutable after validation.
struct StepDistribution {
    Rational alpha, alpha_p, beta, beta_p, gamma, gamma_p;
    Rational kappa;
    Rational alpha_hat, beta_hat, gamma_hat;
    Rational gamma_fun;  // Gamma(p) = ab + bc + ca over the hats

    /// Checks nonnegativity, unit mass, zero drift and Gamma(p) > 0,
    /// then fills in the derived fields.
    static StepDistribution validate(const Rational& a, const Rational& ap,
                                     const Rational& b, const Rational& bp,
                                     const Rational& g, const Rational& gp);

    bool is_periodic() const { return kappa == Rational(1, 3); }

    /// Least common denominator of the six probabilities.
    BigInt common_denominator() const;
};

/// One lattice step: the displacement in e1,e2 coordinates and its probability.
/// The sign convention is the one that makes alpha-alpha' = beta-beta' =
/// gamma-gamma' the drift per direction: +e1->alpha, -e1->alpha',
/// +e2->beta', -e2->beta, +e3->gamma, -e3->gamma'.
struct Step {
    LatticePoint offset;
    Rational probability;
};

/// The six steps, zero-probability entries retained.
std::array<Step, 6> steps(const StepDistribution& p);

/// Planar embedding of the lattice: basis vectors e1, e2 (e3 = e2 - e1).
class Realization {
  public:
    Realization(Vec2 e1, Vec2 e2);

    static Realization integer_basis() { return Realization({1, 0}, {0, 1}); }

    Vec2 e1() const { return e1_; }
    Vec2 e2() const { return e2_; }
    Vec2 e3() const { return e2_ - e1_; }
    Vec2 e(int i) const;  // i in {1,2,3}
    const Mat2& T() const { return T_; }
    double K() const { return K_; }

    Vec2 embed(LatticePoint x) const {
        return e1_ * static_cast<double>(x.x1) + e2_ * static_cast<double>(x.x2);
    }

  private:
    Vec2 e1_, e2_;
    Mat2 T_;
    double K_;
};

/// Covariance of the one-step distribution in a given realization, together
/// with the exact integer-basis matrix and the Gram table <Q^-1 e_i, e_j>.
struct CovarianceData {
    Mat2 Q;
    Mat2 Q_inv;
    std::array<std::array<Rational, 2>, 2> Q_hat;
    std::array<std::array<Rational, 3>, 3> gram;  // gram[i-1][j-1] = <Q^-1 e_i, e_j>

    const Rational& g(int i, int j) const { return gram[i - 1][j - 1]; }
};

/// q-th directional moment M_q(theta), closed form (kappa-weighted for odd q,
/// hat-weighted for even q).
double moment(const StepDistribution& p, const Realization& r, int q, Vec2 theta);

/// Same quantity by brute-force summation over the six steps; test oracle.
double moment_edge_sum(const StepDistribution& p, const Realization& r, int q, Vec2 theta);

/// Exact-rational versions over explicitly supplied basis vectors
/// (evec[0]=e1, evec[1]=e2, evec[2]=e3 as rational coordinate pairs).
Rational moment_exact(const StepDistribution& p,
                      const std::array<std::array<Rational, 2>, 3>& evec, int q,
                      const std::array<Rational, 2>& theta);
Rational moment_edge_sum_exact(const StepDistribution& p,
                               const std::array<std::array<Rational, 2>, 3>& evec, int q,
                               const std::array<Rational, 2>& theta);

/// q-th cumulant of <X, theta> via the moment-cumulant recursion.
double cumulant(const StepDistribution& p, const Realization& r, int q, Vec2 theta);

/// Characteristic function phi(theta) = sum p(e) exp(i<e,theta>).
std::complex<double> char_fn(const StepDistribution& p, const Realization& r, Vec2 theta);

/// Integer-basis characteristic function through the three-term sin/cos form.
std::complex<double> char_fn_integer_sincos(const StepDistribution& p, Vec2 theta);

/// Assembles Q by polarization of M_2, the exact integer-basis matrix and the
/// closed-form Gram table; cross-checks Q = T Qhat T^t.
CovarianceData covariance(const StepDistribution& p, const Realization& r);

}  // namespace triwalk
