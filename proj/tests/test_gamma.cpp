#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fockop/common.hpp"
#include "fockop/gamma.hpp"

using namespace fockop;

TEST_CASE("gamma on the real axis") {
    CHECK(gamma_complex(Complex(0.5, 0.0)).real() ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK(gamma_complex(Complex(5.0, 0.0)).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_ratio(7.5, 6.5) == doctest::Approx(6.5).epsilon(1e-14));
}

TEST_CASE("gamma at complex arguments") {
    // Gamma(1+i), standard reference value
    const Complex g = gamma_complex(Complex(1.0, 1.0));
    CHECK(g.real() == doctest::Approx(0.49801566811835604).epsilon(1e-12));
    CHECK(g.imag() == doctest::Approx(-0.15494982830181069).epsilon(1e-12));
}

TEST_CASE("recursion Gamma(z+1) = z Gamma(z)") {
    SplitMix64 rng(42);
    for (int i = 0; i < 25; ++i) {
        const Complex z(rng.uniform(0.2, 8.0), rng.uniform(-4.0, 4.0));
        const Complex lhs = gamma_complex(z + 1.0);
        const Complex rhs = z * gamma_complex(z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("reflection region") {
    // Gamma(-0.5) = -2 sqrt(pi)
    const Complex g = gamma_complex(Complex(-0.5, 0.0));
    CHECK(g.real() == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(gamma_real(-0.5) == doctest::Approx(g.real()).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_real(-3.0), std::domain_error);
}

TEST_CASE("conjugate symmetry") {
    SplitMix64 rng(7);
    for (int i = 0; i < 10; ++i) {
        const Complex z(rng.uniform(0.3, 6.0), rng.uniform(0.1, 5.0));
        const Complex a = gamma_complex(z);
        const Complex b = gamma_complex(std::conj(z));
        CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
    }
}
