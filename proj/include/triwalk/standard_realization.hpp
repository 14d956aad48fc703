#pragma once

#include "triwalk/walk_model.hpp"

#include <array>

namespace triwalk {

/// The area-normalized basis that makes the covariance isotropic, Q = (1/3) I.
struct StandardBasis {
    double A_G;  // area of the h1,h2 parallelogram, 1/(3 Gamma^{1/2})
    double l;    // edge length scale
    Vec2 h1, h2;

    Vec2 h3() const { return h2 - h1; }
    Realization realization() const { return Realization(h1, h2); }

    Vec2 embed(LatticePoint x) const {
        return h1 * static_cast<double>(x.x1) + h2 * static_cast<double>(x.x2);
    }
};

/// Closed-form standard basis: h1 = (l, 0),
/// h2 = (gamma_hat l / (beta_hat+gamma_hat), Gamma^{1/2} l / (beta_hat+gamma_hat)).
StandardBasis standard_basis(const StepDistribution& p);

/// Edge energy (1/2)[ah u^2 + bh (v1^2+v2^2) + gh ((v1-u)^2+v2^2)] of the
/// realization e1 = (u, 0), e2 = (v1, v2).
double energy(const StepDistribution& p, double u, double v1, double v2);

struct EnergyMinimizer {
    double u, v1, v2;
    double value;
    int iterations;
};

/// Minimizes the edge energy under the parallelogram-area constraint
/// u * v2 = area (v2 eliminated; Nelder-Mead on (u, v1) with restart).
EnergyMinimizer minimize_energy(const StepDistribution& p, double area);

}  // namespace triwalk
