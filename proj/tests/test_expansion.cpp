#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "triwalk/expansion.hpp"
#include "triwalk/kernel.hpp"

#include <cmath>
#include <random>

using namespace triwalk;
using namespace triwalk::fixtures;

namespace {

// <Q^-1 e_i, x> as a polynomial in lattice coordinates.
GaussPolynomial lin(int i, const CovarianceData& cov) {
    GaussPolynomial p;
    p.add_term({1, 0}, cov.g(i, 1));
    p.add_term({0, 1}, cov.g(i, 2));
    return p;
}

IndexPolynomial odd_moment_poly(const StepDistribution& p, int q) {
    return IndexPolynomial::power_of_var(1, q, p.kappa) -
           IndexPolynomial::power_of_var(2, q, p.kappa) +
           IndexPolynomial::power_of_var(3, q, p.kappa);
}

IndexPolynomial even_moment_poly(const StepDistribution& p, int q) {
    return IndexPolynomial::power_of_var(1, q, p.alpha_hat) +
           IndexPolynomial::power_of_var(2, q, p.beta_hat) +
           IndexPolynomial::power_of_var(3, q, p.gamma_hat);
}

}  // namespace

TEST_CASE("hermite G closed forms: length 1 and 2") {
    CovarianceData cov = covariance(skew_walk(), Realization::integer_basis());
    for (int i = 1; i <= 3; ++i) {
        CHECK(hermite_g({i}, cov) == -lin(i, cov));
        for (int j = 1; j <= 3; ++j) {
            GaussPolynomial expected = lin(i, cov) * lin(j, cov) - GaussPolynomial(cov.g(i, j));
            CHECK(hermite_g({i, j}, cov) == expected);
        }
    }
}

TEST_CASE("hermite G closed forms: G(i,i,i)") {
    CovarianceData cov = covariance(tilted_walk(), Realization::integer_basis());
    for (int i = 1; i <= 3; ++i) {
        GaussPolynomial L = lin(i, cov);
        GaussPolynomial expected = -(L * L * L) + L * (cov.g(i, i) * 3);
        CHECK(hermite_g({i, i, i}, cov) == expected);
    }
}

TEST_CASE("hermite G constant terms of G(iijj) and G(iiijjj)") {
    CovarianceData cov = covariance(skew_walk(), Realization::integer_basis());
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            Rational gii = cov.g(i, i), gjj = cov.g(j, j), gij = cov.g(i, j);
            CHECK(hermite_g({i, i, j, j}, cov).constant_term() == gii * gjj + 2 * gij * gij);
            CHECK(hermite_g({i, i, i, j, j, j}, cov).constant_term() ==
                  -9 * gii * gij * gjj - 6 * gij * gij * gij);
        }
    }
}

TEST_CASE("hermite G is symmetric in its indices") {
    CovarianceData cov = covariance(skew_walk(), Realization::integer_basis());
    CHECK(hermite_g({1, 2, 3}, cov) == hermite_g({3, 1, 2}, cov));
    CHECK(hermite_g({1, 2, 3}, cov) == hermite_g({2, 1, 3}, cov));
    CHECK(hermite_g({1, 1, 2, 3}, cov) == hermite_g({3, 2, 1, 1}, cov));
    CHECK(hermite_g({1, 2, 2, 3, 3, 3}, cov) == hermite_g({3, 3, 2, 1, 3, 2}, cov));
}

TEST_CASE("Gaussian-Fourier integral: quadrature agrees with the symbolic form") {
    StepDistribution p = skew_walk();
    Realization r = standard_basis(p).realization();
    std::vector<std::vector<int>> lists = {{1},       {3},          {1, 2},
                                           {3, 3},    {1, 2, 3},    {2, 2, 2},
                                           {1, 1, 2, 2}, {1, 2, 3, 3}, {1, 1, 2, 2, 3, 3}};
    for (const auto& idx : lists) {
        for (auto [x1, x2] : {std::pair{0.0, 0.0}, {0.4, -0.3}}) {
            FourierCheck fc = gaussian_fourier_check(p, r, idx, x1, x2);
            double scale = std::max(1.0, std::abs(fc.symbolic));
            CHECK(std::abs(fc.numeric - fc.symbolic) < 1e-8 * scale);
        }
    }
}

TEST_CASE("cumulant polynomials: chi_2 = M_2, chi_3 = M_3, chi_4 = M_4 - 3 M_2^2") {
    for (const auto& p : {simple_walk(), skew_walk(), periodic_walk()}) {
        CHECK(cumulant_polynomial(p, 2) == even_moment_poly(p, 2));
        CHECK(cumulant_polynomial(p, 3) == odd_moment_poly(p, 3));
        IndexPolynomial m2 = even_moment_poly(p, 2);
        CHECK(cumulant_polynomial(p, 4) == even_moment_poly(p, 4) - (m2 * m2) * Rational(3));
    }
}

TEST_CASE("Edgeworth coefficients b_1, b_2 in closed form") {
    // b_1 = chi_3 / 6 = M_3 / 6 and b_2 = chi_4/24 + chi_3^2/72
    //     = M_4/24 - M_2^2/8 + M_3^2/72, with (i)^degree carried implicitly.
    for (const auto& p : {tilted_walk(), skew_walk(), periodic_walk()}) {
        auto B = edgeworth_b_index(p, 2);
        CHECK(B[0] == IndexPolynomial(Rational(1)));
        CHECK(B[1] == cumulant_polynomial(p, 3) * Rational(1, 6));
        IndexPolynomial chi3 = cumulant_polynomial(p, 3);
        CHECK(B[2] == cumulant_polynomial(p, 4) * Rational(1, 24) +
                          (chi3 * chi3) * Rational(1, 72));
        IndexPolynomial m2 = even_moment_poly(p, 2), m3 = odd_moment_poly(p, 3);
        CHECK(B[2] == even_moment_poly(p, 4) * Rational(1, 24) -
                          (m2 * m2) * Rational(1, 8) + (m3 * m3) * Rational(1, 72));
    }
}

TEST_CASE("edgeworth_b splits by homogeneous degree") {
    auto b = edgeworth_b(skew_walk(), 2);
    REQUIRE(b.size() == 3);
    REQUIRE(b[1].size() == 1);
    CHECK(b[1][0].degree == 3);
    REQUIRE(b[2].size() == 2);
    CHECK(b[2][0].degree == 4);
    CHECK(b[2][1].degree == 6);
    CHECK(b[1][0].poly == (cumulant_polynomial(skew_walk(), 3) * Rational(1, 6)).canonical());
}

TEST_CASE("P_1 equals the displayed cubic-plus-linear form, exactly") {
    std::mt19937 rng(20240813);
    for (int trial = 0; trial < 20; ++trial) {
        StepDistribution p = random_walk(rng);
        CovarianceData cov = covariance(p, Realization::integer_basis());
        const Rational& k = p.kappa;
        GaussPolynomial L1 = lin(1, cov), L2 = lin(2, cov), L3 = lin(3, cov);
        GaussPolynomial expected =
            (L1 * L1 * L1 - L2 * L2 * L2 + L3 * L3 * L3) * (k / 6) +
            (L3 * cov.g(1, 2) + L1 * cov.g(2, 3) + L2 * cov.g(3, 1)) * (k / 2);
        CHECK(correction_polynomials(p, 1)[0] == expected);
    }
}

TEST_CASE("P_2 constant term is the sum of the two displayed constants") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        StepDistribution p = random_walk(rng);
        CovarianceData cov = covariance(p, Realization::integer_basis());
        auto g = [&](int i, int j) { return cov.g(i, j); };
        auto cube = [](const Rational& r) { return r * r * r; };
        Rational c1 = -1 + (p.alpha_hat * g(1, 1) * g(1, 1) + p.beta_hat * g(2, 2) * g(2, 2) +
                            p.gamma_hat * g(3, 3) * g(3, 3)) /
                               8;
        Rational c2 = Rational(-5, 24) * (cube(g(1, 1)) + cube(g(2, 2)) + cube(g(3, 3))) +
                      Rational(1, 6) * (cube(g(1, 2)) + cube(g(2, 3)) - cube(g(3, 1))) +
                      Rational(1, 4) * (g(1, 1) * g(1, 2) * g(2, 2) + g(2, 2) * g(2, 3) * g(3, 3) -
                                        g(3, 3) * g(3, 1) * g(1, 1));
        Rational c2_scaled = p.kappa * p.kappa * c2;
        CHECK(correction_polynomials(p, 2)[1].constant_term() == c1 + c2_scaled);
    }
}

TEST_CASE("gram quadratic-sum identity evaluates to 8") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        StepDistribution p = random_walk(rng);
        CovarianceData cov = covariance(p, Realization::integer_basis());
        auto g = [&](int i, int j) { return cov.g(i, j); };
        auto sq = [](const Rational& r) { return r * r; };
        Rational lhs =
            3 * (sq(p.alpha_hat) * sq(g(1, 1)) + sq(p.beta_hat) * sq(g(2, 2)) +
                 sq(p.gamma_hat) * sq(g(3, 3))) +
            2 * p.alpha_hat * p.beta_hat * (g(1, 1) * g(2, 2) + 2 * sq(g(1, 2))) +
            2 * p.gamma_hat * p.alpha_hat * (g(1, 1) * g(3, 3) + 2 * sq(g(1, 3))) +
            2 * p.beta_hat * p.gamma_hat * (g(2, 2) * g(3, 3) + 2 * sq(g(2, 3)));
        CHECK(lhs == 8);
    }
}

TEST_CASE("P_j parity: only degrees congruent to j mod 2 appear") {
    for (const auto& p : {tilted_walk(), skew_walk(), periodic_walk()}) {
        auto P = correction_polynomials(p, 4);
        for (int j = 1; j <= 4; ++j)
            for (const auto& [key, coeff] : P[j - 1].terms())
                CHECK((key.first + key.second) % 2 == j % 2);
    }
}

TEST_CASE("symmetric walk: odd corrections vanish identically") {
    auto P = correction_polynomials(simple_walk(), 4);
    CHECK(P[0].is_zero());
    CHECK(P[2].is_zero());
    CHECK(!P[1].is_zero());
}

TEST_CASE("a1 closed form on the named examples") {
    CHECK(a1_closed_form(simple_walk(), 0, 0, A1Basis::StandardCoords) == Rational(-1, 2));
    CHECK(a1_closed_form(simple_walk(), 3, -2, A1Basis::StandardCoords) == Rational(-1, 2));
    // eps = 1/10: -1/2 - 6 eps^2 = -14/25
    CHECK(a1_closed_form(tilted_walk(), 0, 0, A1Basis::StandardCoords) == Rational(-14, 25));
    CHECK(a1_closed_form(tilted_walk(), 1, 1, A1Basis::StandardCoords) == Rational(-14, 25));
    // skew fixture: -719/1331 + (3/121)(2 y1 - 5 y2)
    auto skew_a1 = [](std::int64_t y1, std::int64_t y2) {
        return Rational(-719, 1331) + Rational(3, 121) * (2 * y1 - 5 * y2);
    };
    for (auto [y1, y2] : {std::pair<std::int64_t, std::int64_t>{0, 0}, {1, 0}, {0, 1}, {2, -3}})
        CHECK(a1_closed_form(skew_walk(), y1, y2, A1Basis::StandardCoords) == skew_a1(y1, y2));
    // kappa = 1/3 walk at the origin: -2/3
    CHECK(a1_closed_form(periodic_walk(), 0, 0, A1Basis::StandardCoords) == Rational(-2, 3));
}

TEST_CASE("a1: hat form and gram form agree exactly") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        StepDistribution p = random_walk(rng);
        Rational y1 = coord(rng), y2 = coord(rng);
        CHECK(a1_closed_form(p, y1, y2, A1Basis::StandardCoords) ==
              a1_closed_form(p, y1, y2, A1Basis::GramForm));
    }
}

TEST_CASE("a1 equals P_2(0) plus the linear part of P_1") {
    std::mt19937 rng(112233);
    std::uniform_int_distribution<int> coord(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        StepDistribution p = random_walk(rng);
        auto P = correction_polynomials(p, 2);
        GaussPolynomial lin1 = P[0].homogeneous_part(1);
        Rational y1 = coord(rng), y2 = coord(rng);
        Rational expect = P[1].constant_term() + lin1.eval<Rational>(y1, y2);
        CHECK(a1_closed_form(p, y1, y2, A1Basis::StandardCoords) == expect);
    }
}

TEST_CASE("richardson recovers a pure power series limit") {
    std::vector<double> n = {8, 16, 32, 64};
    std::vector<double> v;
    for (double x : n) v.push_back(3.0 + 5.0 / x + 7.0 / (x * x) - 2.0 / (x * x * x));
    CHECK(richardson(n, v, {1, 2, 3}) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("asymptotic_p approximates the kernel and respects periodicity") {
    StepDistribution p = simple_walk();
    StandardBasis sb = standard_basis(p);
    double approx = asymptotic_p(p, sb, 100, {0, 0}, {3, 2}, 2);
    KernelTable t = KernelTable::delta(p, KernelMode::Float);
    t.evolve(100);
    double exact = t.value_at({3, 2});
    CHECK(std::abs(approx - exact) < 2e-3 * exact);

    StepDistribution q = periodic_walk();
    StandardBasis sq = standard_basis(q);
    CHECK_THROWS_AS(asymptotic_p(q, sq, 4, {0, 0}, {0, 0}, 1), PeriodicityViolated);
    CHECK(asymptotic_p(q, sq, 99, {0, 0}, {0, 0}, 2) > 0.0);
}

TEST_CASE("numeric a1 extraction hits the closed form on the simple walk") {
    double est = extract_a1_numeric(simple_walk(), {0, 0}, {16, 32, 64, 128});
    CHECK(std::abs(est - (-0.5)) < 0.02);
    // off-origin extraction pins the linear-in-y part of a1
    double est_y = extract_a1_numeric(skew_walk(), {1, 0}, {16, 32, 64, 128});
    double closed = to_double(a1_closed_form(skew_walk(), 1, 0, A1Basis::StandardCoords));
    CHECK(std::abs(est_y - closed) < 0.02);
    CHECK_THROWS_AS(extract_a1_numeric(simple_walk(), {0, 0}, {16, 32}), InsufficientGrid);
}

TEST_CASE("a1_residuals enforces the periodic congruence class") {
    CHECK_THROWS_AS(a1_residuals(periodic_walk(), {0, 0}, {3, 6, 10}), PeriodicityViolated);
    CHECK_NOTHROW(a1_residuals(periodic_walk(), {0, 0}, {3, 6, 9}));
}

TEST_CASE("build_expansion bundles coefficients and corrections") {
    ExpansionSeries s = build_expansion(skew_walk(), 3);
    CHECK(s.N == 3);
    CHECK(s.b.size() == 4);
    CHECK(s.P.size() == 3);
    CHECK(s.P[0] == correction_polynomials(skew_walk(), 1)[0]);
}
