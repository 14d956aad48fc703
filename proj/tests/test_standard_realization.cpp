#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "triwalk/standard_realization.hpp"

#include <cmath>
#include <random>

using namespace triwalk;
using namespace triwalk::fixtures;

TEST_CASE("simple walk standard basis: h1 = (sqrt(2/3), 0), h2 = (1/sqrt6, 1/sqrt2)") {
    StandardBasis sb = standard_basis(simple_walk());
    CHECK(sb.A_G == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(sb.l == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(sb.h1.x == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(sb.h1.y == 0.0);
    CHECK(sb.h2.x == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-15));
    CHECK(sb.h2.y == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    // equilateral: all three edges have length l
    CHECK(sb.h2.norm() == doctest::Approx(sb.l).epsilon(1e-15));
    CHECK(sb.h3().norm() == doctest::Approx(sb.l).epsilon(1e-15));
}

TEST_CASE("skew fixture standard basis: A_G = 2/sqrt(11)") {
    StandardBasis sb = standard_basis(skew_walk());
    CHECK(sb.A_G == doctest::Approx(2.0 / std::sqrt(11.0)).epsilon(1e-15));
    // area of the (h1, h2) parallelogram equals A_G
    double area = sb.h1.x * sb.h2.y - sb.h1.y * sb.h2.x;
    CHECK(area == doctest::Approx(sb.A_G).epsilon(1e-14));
}

TEST_CASE("periodic fixture standard basis is again equilateral") {
    StandardBasis sb = standard_basis(periodic_walk());
    CHECK(sb.A_G == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(sb.h2.norm() == doctest::Approx(sb.l).epsilon(1e-14));
    CHECK(sb.h3().norm() == doctest::Approx(sb.l).epsilon(1e-14));
}

TEST_CASE("standard basis isotropizes the covariance: Q = (1/3) I") {
    std::mt19937 rng(20240812);
    for (int i = 0; i < 50; ++i) {
        StepDistribution p = random_walk(rng);
        StandardBasis sb = standard_basis(p);
        CovarianceData cov = covariance(p, sb.realization());
        CHECK(std::abs(cov.Q.a11 - 1.0 / 3.0) < 1e-13);
        CHECK(std::abs(cov.Q.a22 - 1.0 / 3.0) < 1e-13);
        CHECK(std::abs(cov.Q.a12) < 1e-13);
    }
}

TEST_CASE("energy closed form and domain errors") {
    StepDistribution p = simple_walk();
    // hats all 1/3: E = (1/6)(u^2 + v1^2 + v2^2 + (v1-u)^2 + v2^2)
    CHECK(energy(p, 1.0, 0.5, 2.0) ==
          doctest::Approx((1.0 + 0.25 + 4.0 + 0.25 + 4.0) / 6.0).epsilon(1e-15));
    CHECK_THROWS_AS(energy(p, 0.0, 0.5, 2.0), DomainError);
    CHECK_THROWS_AS(energy(p, 1.0, 0.5, -1.0), DomainError);
}

TEST_CASE("constrained minimizer recovers the closed-form basis") {
    for (const auto& p : {simple_walk(), tilted_walk(), skew_walk(), periodic_walk()}) {
        StandardBasis sb = standard_basis(p);
        EnergyMinimizer m = minimize_energy(p, sb.A_G);
        CHECK(std::abs(m.u - sb.l) < 1e-8);
        CHECK(std::abs(m.v1 - sb.h2.x) < 1e-8);
        CHECK(std::abs(m.v2 - sb.h2.y) < 1e-8);
        CHECK(m.value == doctest::Approx(energy(p, sb.l, sb.h2.x, sb.h2.y)).epsilon(1e-10));
        CHECK(m.iterations > 0);
    }
}

TEST_CASE("minimizer value survives a grid search under the area constraint") {
    StepDistribution p = simple_walk();
    StandardBasis sb = standard_basis(p);
    double fmin = energy(p, sb.l, sb.h2.x, sb.h2.y);
    for (int i = 1; i <= 50; ++i) {
        double u = 2.0 * sb.l * i / 50.0;
        for (int j = -25; j <= 25; ++j) {
            double v1 = sb.l * j / 25.0;
            CHECK(energy(p, u, v1, sb.A_G / u) >= fmin - 1e-12);
        }
    }
}

TEST_CASE("energy is convex along probe segments through the minimizer") {
    StepDistribution p = skew_walk();
    StandardBasis sb = standard_basis(p);
    auto f = [&](double t, double du, double dv1) {
        double u = sb.l + t * du;
        return energy(p, u, sb.h2.x + t * dv1, sb.A_G / u);
    };
    for (auto [du, dv1] : {std::pair{0.1, 0.0}, {0.0, 0.1}, {0.07, -0.07}}) {
        double mid = f(0.0, du, dv1);
        CHECK(f(1.0, du, dv1) + f(-1.0, du, dv1) >= 2.0 * mid - 1e-12);
        CHECK(f(0.5, du, dv1) >= mid - 1e-12);
    }
}

TEST_CASE("basis scales like sqrt(area)") {
    StepDistribution p = tilted_walk();
    StandardBasis sb = standard_basis(p);
    EnergyMinimizer m1 = minimize_energy(p, sb.A_G);
    EnergyMinimizer m2 = minimize_energy(p, 2.0 * sb.A_G);
    CHECK(m2.u == doctest::Approx(std::sqrt(2.0) * m1.u).epsilon(1e-7));
    CHECK(m2.v2 == doctest::Approx(std::sqrt(2.0) * m1.v2).epsilon(1e-7));
}

TEST_CASE("minimize_energy rejects nonpositive area") {
    CHECK_THROWS_AS(minimize_energy(simple_walk(), 0.0), DomainError);
}
