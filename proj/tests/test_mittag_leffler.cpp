#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fockop/mittag_leffler.hpp"
#include "fockop/space.hpp"

using namespace fockop;

namespace {

// independent long-double series, direct Gamma evaluation
Complex series_oracle(double beta, double gamma, int order, Complex z, int terms = 400) {
    long double re = 0.0L, im = 0.0L;
    Complex zk(1.0, 0.0);
    for (int k = 0; k < terms; ++k) {
        const long double c =
            expl(lgammal(k + order + 1.0L) - lgammal(k + 1.0L) -
                 lgammal(static_cast<long double>(beta) * (k + order) + gamma));
        re += c * zk.real();
        im += c * zk.imag();
        zk *= z;
    }
    return Complex(static_cast<double>(re), static_cast<double>(im));
}

}  // namespace

TEST_CASE("classical special cases") {
    CHECK(ml_eval(MLParams(1.0, 1.0), Complex(1.0, 0.0)).real() ==
          doctest::Approx(std::numbers::e).epsilon(1e-14));
    // E_{1,2}(z) = (e^z - 1)/z
    CHECK(ml_eval(MLParams(1.0, 2.0), Complex(1.0, 0.0)).real() ==
          doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
    // frozen from the high-precision series oracle
    CHECK(ml_eval(MLParams(0.5, 0.5), Complex(3.0, 0.0)).real() ==
          doctest::Approx(48618.530751582307633).epsilon(1e-12));
}

TEST_CASE("series agrees with the independent oracle at complex arguments") {
    const MLParams prm(2.0 / 3.0, 2.0 / 3.0);
    for (Complex z : {Complex(2.0, 1.0), Complex(-1.5, 0.7), Complex(0.0, 3.0)}) {
        const Complex mine = ml_eval(prm, z);
        const Complex ref = series_oracle(2.0 / 3.0, 2.0 / 3.0, 0, z);
        CHECK(std::abs(mine - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("positivity and monotonicity on the positive axis") {
    const MLParams prm(0.5, 0.75, 1);
    double prev = 0.0;
    for (double x = 0.0; x <= 3.0; x += 0.25) {
        const double v = ml_eval(prm, Complex(x, 0.0)).real();
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("regime switch and cross-regime agreement") {
    // large argument forces the asymptotic regime within the default budget
    const MLParams prm(1.0, 2.0);
    const MLValue big = ml_eval_full(prm, Complex(600.0, 0.0));
    CHECK(big.regime == MLRegime::asymptotic);
    // E_{1,2}(z) = (e^z - 1)/z, and the expansion reproduces it exactly
    CHECK(big.value.real() ==
          doctest::Approx((std::exp(600.0) - 1.0) / 600.0).epsilon(1e-12));
    // E_{1,1} routes through the exact exponential
    CHECK(ml_eval_full(MLParams(1.0, 1.0), Complex(600.0, 0.0)).value.real() ==
          doctest::Approx(std::exp(600.0)).epsilon(1e-14));

    // overlap band: series still converges, asymptotics already accurate
    for (double m : {1.5, 2.0}) {
        const MLParams p(1.0 / m, 1.0 / m);
        for (double tm : {12.0, 16.0, 25.0}) {
            const double t = std::pow(tm, 1.0 / m);
            const MLValue s = ml_eval_full(p, Complex(t, 0.0));
            CHECK(s.regime == MLRegime::series);
            const Complex a = ml_eval_asymptotic(p, Complex(t, 0.0));
            CHECK(std::abs(s.value - a) <= 1e-8 * std::abs(s.value));
        }
    }
}

TEST_CASE("anti-sector arguments use the algebraic expansion") {
    // on the negative axis the function decays algebraically; the series
    // cancels catastrophically there but the algebraic expansion converges
    const MLParams prm(0.5, 0.5);
    const MLValue v = ml_eval_full(prm, Complex(-4000.0, 0.0));
    CHECK(v.regime == MLRegime::asymptotic);
    // E_{1/2,1/2}(-x) ~ x^{-2}/(2 sqrt(pi)) + O(x^{-4})
    const double lead = 1.0 / (4000.0 * 4000.0 * 2.0 * std::sqrt(std::numbers::pi));
    CHECK(v.value.real() == doctest::Approx(lead).epsilon(1e-4));
}

TEST_CASE("no convergent regime raises") {
    // series budget exhausted and the algebraic cap too small to help
    MLOptions opt;
    opt.series_budget = 2;
    opt.correction_terms = 1;
    const MLParams prm(0.5, 0.5);
    CHECK_THROWS_AS(ml_eval(prm, Complex(-3.0, 0.0), opt), NumericalError);
}

TEST_CASE("kernel: Gaussian collapse and normalization") {
    const SpaceParams p(2, 1.0, 1.5, 0.0);
    const std::vector<Complex> x{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    CHECK(kernel_eval(p, x, x).real() == doctest::Approx(std::exp(1.5)).epsilon(1e-13));

    // K(x, 0) = 1 for s = 0
    const SpaceParams q(1, 2.0, 1.0, 0.0);
    const std::vector<Complex> y{Complex(1.3, -0.4)}, zero{Complex(0.0, 0.0)};
    CHECK(kernel_eval(q, y, zero).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(kernel_eval(q, y, zero).imag() == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("kernel value frozen from the series oracle (d=1, m=2)") {
    const SpaceParams p(1, 2.0, 1.0, 0.0);
    const std::vector<Complex> two{Complex(2.0, 0.0)};
    // sqrt(pi) * E_{1/2,1/2}(4)
    CHECK(kernel_eval(p, two, two).real() ==
          doctest::Approx(126001766.52186872150).epsilon(1e-11));
}

TEST_CASE("kernel symmetry and dominance") {
    const SpaceParams p(2, 1.5, 1.0, 0.5);
    SplitMix64 rng(11);
    for (int i = 0; i < 8; ++i) {
        std::vector<Complex> a{Complex(rng.uniform(-1., 1.), rng.uniform(-1., 1.)),
                               Complex(rng.uniform(-1., 1.), rng.uniform(-1., 1.))};
        std::vector<Complex> b{Complex(rng.uniform(-1., 1.), rng.uniform(-1., 1.)),
                               Complex(rng.uniform(-1., 1.), rng.uniform(-1., 1.))};
        const Complex kab = kernel_eval(p, a, b);
        const Complex kba = kernel_eval(p, b, a);
        CHECK(std::abs(kab - std::conj(kba)) <= 1e-12 * (1.0 + std::abs(kab)));

        // positive-coefficient dominance
        Complex inner(0.0, 0.0);
        for (int j = 0; j < 2; ++j) inner += a[static_cast<std::size_t>(j)] * std::conj(b[static_cast<std::size_t>(j)]);
        const Complex dom = ml_eval(MLParams::for_space(p), Complex(std::abs(inner), 0.0));
        CHECK(std::abs(ml_eval(MLParams::for_space(p), inner)) <= dom.real() * (1.0 + 1e-12));
    }
}

TEST_CASE("kernel agrees with the truncated basis expansion") {
    const SpaceParams p(1, 2.0, 1.0, 0.5);
    const std::vector<Complex> xi{Complex(0.9, 0.3)}, zeta{Complex(-0.5, 0.7)};
    const Complex full = kernel_eval(p, xi, zeta);
    Complex partial(0.0, 0.0);
    double prev_err = 1e300;
    for (int D : {8, 16, 32}) {
        partial = Complex(0.0, 0.0);
        for (const auto& nu : graded_basis(p, D)) {
            const double oc = orthonormal_coefficient(p, nu);
            Complex term(1.0, 0.0);
            for (int j = 0; j < p.d; ++j) {
                term *= std::pow(xi[static_cast<std::size_t>(j)], nu[j]) *
                        std::pow(std::conj(zeta[static_cast<std::size_t>(j)]), nu[j]);
            }
            partial += oc * oc * term;
        }
        const double err = std::abs(full - partial);
        CHECK(err < prev_err + 1e-15);
        prev_err = err;
    }
    CHECK(prev_err <= 1e-10 * (1.0 + std::abs(full)));
}

TEST_CASE("asymptotic ratio") {
    // m = 1: the leading term is exactly e^t
    const SpaceParams g(1, 1.0, 1.0, 0.0);
    CHECK(kernel_asymptotic_ratio(g, 10.0) == doctest::Approx(1.0).epsilon(1e-12));

    // m=2: frozen deviation ~1.9e-8 at t^2 = 12; also check against the oracle
    const SpaceParams p(1, 2.0, 1.0, 0.0);
    const double t = std::sqrt(12.0);
    const double ratio = kernel_asymptotic_ratio(p, t);
    CHECK(std::abs(ratio - 1.0) <= 1e-6);
    const double oracle_ratio =
        (series_oracle(0.5, 0.5, 0, Complex(t, 0.0)) / (2.0 * t * std::exp(t * t))).real();
    CHECK(ratio == doctest::Approx(oracle_ratio).epsilon(1e-12));

    // differentiated case (d=2)
    const SpaceParams q(2, 1.5, 1.0, 0.5);
    const double t2 = std::pow(12.0, 1.0 / 1.5);
    CHECK(std::abs(kernel_asymptotic_ratio(q, t2) - 1.0) <= 1e-3);

    CHECK_THROWS_AS(kernel_asymptotic_ratio(p, 1.0), std::domain_error);
}
