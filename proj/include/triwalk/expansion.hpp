#pragma once

#include "triwalk/polynomial.hpp"
#include "triwalk/standard_realization.hpp"
#include "triwalk/walk_model.hpp"

#include <complex>
#include <vector>

namespace triwalk {

/// Real polynomial in the lattice coordinates (x1, x2), exact coefficients.
using GaussPolynomial = Poly2<Rational>;
/// Canonicalized polynomial in u1 = <e1,theta>, u2 = <e2,theta> (u3 eliminated).
using ThetaPolynomial = Poly2<Rational>;
/// Multiset-of-indices form in u1, u2, u3.
using IndexPolynomial = Poly3<Rational>;

/// Hermite-type polynomial G(i1,...,iN)(x) from the Gaussian-Fourier
/// recursion; indices in {1,2,3}, x expanded in lattice coordinates through
/// the Gram table. Symmetric in the indices.
GaussPolynomial hermite_g(const std::vector<int>& indices, const CovarianceData& cov);

/// Evaluates the Gaussian-weighted Fourier integral F(i1,...,iN)(x) two ways:
/// 2-D quadrature versus 2pi i^N (det Q)^{-1/2} e^{-<Q^-1 x,x>/2} G(x).
/// x is given in e-basis coordinates. Test-harness operation.
struct FourierCheck {
    std::complex<double> numeric;
    std::complex<double> symbolic;
};
FourierCheck gaussian_fourier_check(const StepDistribution& p, const Realization& r,
                                    const std::vector<int>& indices, double x1, double x2);

/// One homogeneous component of an Edgeworth coefficient:
/// the term (i)^degree * poly(theta) of b_j.
struct EdgeworthComponent {
    int degree;
    ThetaPolynomial poly;
};

/// q-th cumulant as a homogeneous degree-q polynomial in u1, u2, u3.
IndexPolynomial cumulant_polynomial(const StepDistribution& p, int q);

/// Edgeworth coefficients b_0..b_N from the formal exponential of the
/// cumulant series; b[j] lists homogeneous components with their i-powers.
std::vector<std::vector<EdgeworthComponent>> edgeworth_b(const StepDistribution& p, int N);

/// Internal multiset form of b_j: real coefficients with the convention that
/// each monomial of degree d carries an implicit factor (i)^d.
std::vector<IndexPolynomial> edgeworth_b_index(const StepDistribution& p, int N);

/// Spatial correction polynomials P_1..P_N (real, exact coefficients,
/// realization-independent in lattice coordinates).
std::vector<GaussPolynomial> correction_polynomials(const StepDistribution& p, int N);

enum class A1Basis { StandardCoords, GramForm };

/// Closed-form leading correction a1(y; kappa) = a1^(0) + kappa a1^(1)(y)
/// + kappa^2 a1^(2); y in lattice (= standard h-basis) coordinates.
Rational a1_closed_form(const StepDistribution& p, const Rational& y1, const Rational& y2,
                        A1Basis basis);

/// b's and P's bundled for repeated evaluation.
struct ExpansionSeries {
    int N;
    std::vector<std::vector<EdgeworthComponent>> b;
    std::vector<GaussPolynomial> P;  // P[j-1] = P_j
};
ExpansionSeries build_expansion(const StepDistribution& p, int N);

/// Order-N asymptotic value of p(n, x, y) in the standard realization.
/// Throws PeriodicityViolated when kappa = 1/3 and n is off the congruence
/// class of (x, y).
double asymptotic_p(const StepDistribution& p, const StandardBasis& sb,
                    const ExpansionSeries& series, int n, LatticePoint x, LatticePoint y);
double asymptotic_p(const StepDistribution& p, const StandardBasis& sb, int n, LatticePoint x,
                    LatticePoint y, int N);

/// Sequential Richardson elimination: fits v(n) = L + sum c_e n^{-e} over the
/// given exponents (one per elimination stage) and returns the limit estimate.
double richardson(const std::vector<double>& n_values, const std::vector<double>& values,
                  const std::vector<double>& exponents);

/// Residual r(n) = n (2 pi n p_n(y) / (c A(G) exp(-3|y_hat|^2/(2n))) - 1)
/// from the float DP kernel.
std::vector<double> a1_residuals(const StepDistribution& p, LatticePoint y,
                                 const std::vector<int>& n_grid);

/// Richardson-extrapolated numeric estimate of a1(y; kappa) from the exact
/// kernel on the given n grid (powers of n^{-1}; needs >= 3 points).
double extract_a1_numeric(const StepDistribution& p, LatticePoint y,
                          const std::vector<int>& n_grid);

}  // namespace triwalk
