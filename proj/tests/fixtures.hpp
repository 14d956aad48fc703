#pragma once

#include "triwalk/walk_model.hpp"

#include <random>

namespace triwalk::fixtures {

/// Symmetric walk, all six probabilities 1/6 (kappa = 0).
inline StepDistribution simple_walk() {
    Rational s(1, 6);
    return StepDistribution::validate(s, s, s, s, s, s);
}

/// 1/6 + eps on the unprimed directions, 1/6 - eps on the primed ones
/// (kappa = 2 eps); default eps = 1/10.
inline StepDistribution tilted_walk(const Rational& eps = Rational(1, 10)) {
    Rational u = Rational(1, 6) + eps, v = Rational(1, 6) - eps;
    return StepDistribution::validate(u, v, u, v, u, v);
}

/// Fully asymmetric aperiodic fixture (kappa = 1/6).
inline StepDistribution skew_walk() {
    return StepDistribution::validate(Rational(1, 4), Rational(1, 12), Rational(1, 3),
                                      Rational(1, 6), Rational(1, 6), Rational(0));
}

/// One-sided walk, kappa = 1/3: period 3, three sublattices.
inline StepDistribution periodic_walk() {
    Rational t(1, 3);
    return StepDistribution::validate(t, 0, t, 0, t, 0);
}

/// Deterministic pseudo-random valid step distribution: hatted sums are
/// positive multiples of 1/60 and kappa stays within [0, min hat].
inline StepDistribution random_walk(std::mt19937& rng) {
    std::uniform_int_distribution<int> cut(1, 58);
    int a, b;
    do {
        a = cut(rng);
        b = cut(rng);
    } while (a + b >= 60);
    Rational ah(a, 60), bh(b, 60), gh(60 - a - b, 60);
    Rational min_hat = std::min({ah, bh, gh});
    std::uniform_int_distribution<int> knum(0, 12);
    Rational kappa = min_hat * knum(rng) / 12;
    return StepDistribution::validate((ah + kappa) / 2, (ah - kappa) / 2, (bh + kappa) / 2,
                                      (bh - kappa) / 2, (gh + kappa) / 2, (gh - kappa) / 2);
}

}  // namespace triwalk::fixtures
