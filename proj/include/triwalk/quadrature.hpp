#pragma once

#include <complex>
#include <functional>

namespace triwalk {

/// Tensor-product Gauss-Legendre over [ax,bx] x [ay,by], composite over k x k
/// panels with k doubled until two successive refinements agree to `tol`
/// (absolute). Throws QuadratureFailure if the budget runs out.
double integrate2d(const std::function<double(double, double)>& f, double ax, double bx,
                   double ay, double by, double tol);

std::complex<double> integrate2d_complex(const std::function<std::complex<double>(double, double)>& f,
                                         double ax, double bx, double ay, double by, double tol);

}  // namespace triwalk
