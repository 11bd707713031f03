#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fockop/space.hpp"
#include "oracles.hpp"

using namespace fockop;

namespace {

// independent reference for S(nu): radial Simpson of the moment integral
double moment_oracle_d1(const SpaceParams& p, int nu) {
    const double c = normalization_constant(p);
    auto f = [&](double r) {
        return std::pow(r, 2.0 * nu + 2.0 * p.s + 1.0) * std::exp(-p.alpha * std::pow(r, 2.0 * p.m));
    };
    const double rmax = std::pow(80.0 / p.alpha, 1.0 / (2.0 * p.m)) + 6.0;
    return c * 2.0 * std::numbers::pi * oracle::integrate_halfline(f, rmax);
}

}  // namespace

TEST_CASE("SpaceParams validation") {
    CHECK_THROWS_AS(SpaceParams(0, 1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams(1, 0.5, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams(1, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams(1, 1.0, 1.0, -0.1), std::invalid_argument);
    CHECK_NOTHROW(SpaceParams(2, 1.5, 2.0, 0.5));
}

TEST_CASE("normalization constant") {
    CHECK(normalization_constant(SpaceParams(1, 1.0, 1.0, 0.0)) ==
          doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
    CHECK(normalization_constant(SpaceParams(2, 1.0, 2.0, 0.0)) ==
          doctest::Approx(4.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-14));
    // (d=1, m=2, alpha=1, s=1): 2 Gamma(1)/(pi Gamma(1)) = 2/pi
    CHECK(normalization_constant(SpaceParams(1, 2.0, 1.0, 1.0)) ==
          doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("moments: closed forms") {
    CHECK(moment(SpaceParams(1, 1.0, 1.0, 0.0), MultiIndex({2})) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(moment(SpaceParams(2, 1.0, 1.0, 0.0), MultiIndex({1, 1})) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // frozen from the radial quadrature oracle: Gamma(5/2)/sqrt(pi) * 24/24
    CHECK(moment(SpaceParams(1, 2.0, 1.0, 0.0), MultiIndex({4})) ==
          doctest::Approx(0.75).epsilon(1e-13));
    CHECK(moment(SpaceParams(1, 2.0, 1.0, 1.0), MultiIndex({3})) ==
          doctest::Approx(1.3293403881791370205).epsilon(1e-13));
}

TEST_CASE("moment of the zero index is 1 (probability measure)") {
    for (double m : {1.0, 1.5, 2.0}) {
        for (double s : {0.0, 0.5, 2.0}) {
            for (int d : {1, 2, 3}) {
                const SpaceParams p(d, m, 1.3, s);
                std::vector<int> z(static_cast<std::size_t>(d), 0);
                CHECK(moment(p, MultiIndex(z)) == doctest::Approx(1.0).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("Gaussian collapse: m=1, s=0 gives nu!/alpha^{|nu|}") {
    const SpaceParams p(2, 1.0, 2.0, 0.0);
    double fact[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const double expect = fact[a] * fact[b] / std::pow(2.0, a + b);
            CHECK(moment(p, MultiIndex({a, b})) == doctest::Approx(expect).epsilon(1e-13));
        }
    }
}

TEST_CASE("moment matches the independent quadrature oracle, d=1") {
    for (double m : {1.0, 1.5, 2.0}) {
        for (double s : {0.0, 0.5}) {
            const SpaceParams p(1, m, 1.0, s);
            for (int nu = 0; nu <= 10; nu += 2) {
                const double closed = moment(p, MultiIndex({nu}));
                const double quad = moment_oracle_d1(p, nu);
                CHECK(std::abs(closed - quad) <= 1e-10 * closed);
            }
        }
    }
}

TEST_CASE("orthonormal coefficients") {
    CHECK(orthonormal_coefficient(SpaceParams(1, 1.0, 1.0, 0.0), MultiIndex({2})) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(orthonormal_coefficient(SpaceParams(2, 1.7, 0.8, 1.1), MultiIndex({0, 0})) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // 1/sqrt(S) with S = Gamma(5/2) frozen above
    CHECK(orthonormal_coefficient(SpaceParams(1, 2.0, 1.0, 1.0), MultiIndex({3})) ==
          doctest::Approx(0.86732507058407752).epsilon(1e-13));
}

TEST_CASE("moment overflow signals the offending degree") {
    const SpaceParams p(1, 1.0, 1.0, 0.0);
    try {
        moment(p, MultiIndex({400}));
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(std::string(e.what()).find("400") != std::string::npos);
    }
}

TEST_CASE("graded basis ordering and counts") {
    const SpaceParams p1(1, 1.0, 1.0, 0.0);
    auto b1 = graded_basis(p1, 2);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0] == MultiIndex({0}));
    CHECK(b1[1] == MultiIndex({1}));
    CHECK(b1[2] == MultiIndex({2}));

    const SpaceParams p2(2, 1.0, 1.0, 0.0);
    auto b2 = graded_basis(p2, 1);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == MultiIndex({0, 0}));
    CHECK(b2[1] == MultiIndex({1, 0}));
    CHECK(b2[2] == MultiIndex({0, 1}));

    auto b22 = graded_basis(p2, 2);
    CHECK(b22.size() == 6);  // C(2+2, 2)
    CHECK(b22[3] == MultiIndex({2, 0}));
    CHECK(b22[4] == MultiIndex({1, 1}));
    CHECK(b22[5] == MultiIndex({0, 2}));

    // stable across runs, contiguous degree blocks
    auto again = graded_basis(p2, 2);
    for (std::size_t i = 0; i < b22.size(); ++i) CHECK(b22[i] == again[i]);
    const SpaceParams p3(3, 1.0, 1.0, 0.0);
    CHECK(graded_basis(p3, 4).size() == 35);  // C(4+3, 3)
    int last = 0;
    for (const auto& nu : graded_basis(p3, 4)) {
        CHECK(nu.total_degree() >= last);
        last = nu.total_degree();
    }
}
