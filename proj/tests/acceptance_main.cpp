// Acceptance suite: 12 numbered identity/property checks at desk scale.
// Prints one [PASS]/[FAIL] line per criterion; exit 0 iff everything passes.
// argv[1] (optional): path to the fockop CLI binary, used by the determinism
// check; that check fails with a message when absent.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fockop/gamma.hpp"
#include "fockop/mellin.hpp"
#include "fockop/mittag_leffler.hpp"
#include "fockop/quadrature.hpp"
#include "fockop/space.hpp"
#include "fockop/symbol.hpp"
#include "fockop/toeplitz.hpp"

using namespace fockop;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    const char* label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void finish(bool ok, const std::string& detail) const {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %-32s %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, label,
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++g_failures;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double moment_by_quadrature(const SpaceParams& p, const MultiIndex& nu, int n_r) {
    const double c = normalization_constant(p);
    const double two_pi = 2.0 * std::numbers::pi;
    if (p.d == 1) {
        const RadialRule rule = build_radial_rule(p, n_r);
        double acc = 0.0;
        for (int i = 0; i < rule.size(); ++i) {
            acc += rule.weights[static_cast<std::size_t>(i)] *
                   std::pow(rule.nodes[static_cast<std::size_t>(i)], 2 * nu[0]);
        }
        return c * two_pi * acc;
    }
    const SpaceParams axis(1, p.m, p.alpha, 0.0);
    const RadialRule rule = build_radial_rule(axis, n_r);
    double acc = 0.0;
    for (int i1 = 0; i1 < rule.size(); ++i1) {
        const double r1 = rule.nodes[static_cast<std::size_t>(i1)];
        for (int i2 = 0; i2 < rule.size(); ++i2) {
            const double r2 = rule.nodes[static_cast<std::size_t>(i2)];
            const double rho = r1 * r1 + r2 * r2;
            const double corr = (p.s == 0.0 ? 1.0 : std::pow(rho, p.s)) *
                                std::exp(-(std::pow(rho, p.m) - std::pow(r1, 2.0 * p.m) -
                                           std::pow(r2, 2.0 * p.m)));
            acc += rule.weights[static_cast<std::size_t>(i1)] *
                   rule.weights[static_cast<std::size_t>(i2)] * corr * std::pow(r1, 2 * nu[0]) *
                   std::pow(r2, 2 * nu[1]);
        }
    }
    return c * two_pi * two_pi * acc;
}

// 1. moment identities across the parameter sweep, runtime bound 5 s
void criterion_1() {
    Criterion c{1, "moment identities"};
    double worst = 0.0;
    for (int d : {1, 2}) {
        for (double m : {1.0, 1.5, 2.0}) {
            for (double s : {0.0, 0.5}) {
                const SpaceParams p(d, m, 1.0, s);
                for (const MultiIndex& nu : graded_basis(p, 10)) {
                    const double closed = moment(p, nu);
                    const double quad = moment_by_quadrature(p, nu, 60);
                    worst = std::max(worst, std::abs(closed - quad) / closed);
                }
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
    c.finish(worst <= 1e-10 && secs < 5.0,
             "worst rel err " + fmt(worst) + ", " + fmt(secs) + "s < 5s");
}

// 2. Gaussian collapse of the kernel at m=1, s=0
void criterion_2() {
    Criterion c{2, "Gaussian kernel collapse"};
    SplitMix64 rng(0xacce551);
    double worst = 0.0;
    int used = 0;
    while (used < 20) {
        const int d = (used % 2) ? 2 : 1;
        const double alpha = (used % 3) ? 1.0 : 2.0;
        const SpaceParams p(d, 1.0, alpha, 0.0);
        std::vector<Complex> x, y;
        for (int j = 0; j < d; ++j) {
            x.emplace_back(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
            y.emplace_back(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
        }
        Complex inner(0.0, 0.0);
        for (int j = 0; j < d; ++j) {
            inner += x[static_cast<std::size_t>(j)] * std::conj(y[static_cast<std::size_t>(j)]);
        }
        if (std::abs(inner) * alpha > 10.0) continue;
        ++used;
        const Complex expect = std::exp(alpha * inner);
        const Complex got = kernel_eval(p, x, y);
        worst = std::max(worst, std::abs(got - expect) / std::abs(expect));
    }
    c.finish(worst <= 1e-10, "worst rel err " + fmt(worst) + " over 20 pairs");
}

// 3. reproducing property of the pointwise projection, d=1
void criterion_3() {
    Criterion c{3, "reproducing property"};
    SplitMix64 rng(0xacce553);
    double worst = 0.0;
    // at m > 1 the kernel's angular spectrum decays like 1/Gamma(k/m) rather
    // than 1/k!, so the angular grid must reach further out than the Gaussian
    // case needs
    const QuadSpec quad{60, 128, DEOptions{}};
    for (auto [m, s] :
         std::array<std::pair<double, double>, 3>{{{1.0, 0.0}, {2.0, 0.0}, {1.5, 0.5}}}) {
        const SpaceParams p(1, m, 1.0, s);
        for (int n = 0; n <= 6; ++n) {
            const Symbol u = catalog::monomial(MultiIndex({n}), MultiIndex({0}));
            for (int pt = 0; pt < 10; ++pt) {
                const Complex z0 = std::polar(rng.uniform(0.0, 2.0), rng.uniform(0.0, 6.28));
                const Complex proj = project_pointwise(u, {z0}, p, quad);
                worst = std::max(worst, std::abs(proj - std::pow(z0, n)));
            }
        }
    }
    c.finish(worst <= 1e-8, "worst abs err " + fmt(worst));
}

// 4. Omega normalization and closed forms (quadrature route vs Gamma forms)
void criterion_4() {
    Criterion c{4, "radial eigenvalue closed forms"};
    double worst_one = 0.0, worst_r2 = 0.0, worst_exp = 0.0;
    for (auto [d, m, s] : std::array<std::tuple<int, double, double>, 3>{
             {{1, 1.0, 0.0}, {1, 2.0, 0.5}, {2, 1.5, 0.0}}}) {
        const SpaceParams p(d, m, 1.0, s);
        const Symbol one = catalog::constant(Complex(1.0, 0.0), d);
        const Symbol r2 = catalog::radial_power(2.0, d);
        for (double re = 0.0; re <= 20.0; re += 2.0) {
            const Complex zeta(re, 0.0);
            worst_one = std::max(worst_one, std::abs(omega_quadrature(one, zeta, p) - 1.0));
            const Complex expect =
                gamma_ratio(Complex((d + s + re + 1.0) / m, 0.0), Complex((d + s + re) / m, 0.0));
            worst_r2 = std::max(
                worst_r2, std::abs(omega_quadrature(r2, zeta, p) - expect) / std::abs(expect));
        }
        for (Complex lambda : {Complex(0.2, 0.0), Complex(0.3, 0.1)}) {
            const Symbol e = catalog::exp_radial(lambda, m, d);
            for (double re : {0.0, 4.0, 11.0}) {
                const Complex zeta(re, 0.0);
                const Complex expect =
                    std::exp(-(d + s + zeta) / m * std::log(Complex(1.0, 0.0) - lambda));
                worst_exp = std::max(worst_exp, std::abs(omega_quadrature(e, zeta, p) - expect) /
                                                    std::abs(expect));
            }
        }
    }
    c.finish(worst_one <= 1e-10 && worst_r2 <= 1e-10 && worst_exp <= 1e-9,
             "deviations " + fmt(worst_one) + " / " + fmt(worst_r2) + " / " + fmt(worst_exp));
}

// 5. Mittag-Leffler asymptotics and cross-regime agreement
void criterion_5() {
    Criterion c{5, "Mittag-Leffler asymptotics"};
    double worst_ratio = 0.0, worst_band = 0.0;
    for (auto [m, s, d] : std::array<std::tuple<double, double, int>, 3>{
             {{1.5, 0.0, 1}, {2.0, 0.0, 1}, {2.0, 1.0, 2}}}) {
        const SpaceParams p(d, m, 1.0, s);
        const double t = std::pow(12.0, 1.0 / m);
        worst_ratio = std::max(worst_ratio, std::abs(kernel_asymptotic_ratio(p, t) - 1.0));

        const MLParams prm = MLParams::for_space(p);
        for (double tm : {12.0, 16.0, 20.0, 25.0}) {
            const double tb = std::pow(tm, 1.0 / m);
            const MLValue series = ml_eval_full(prm, Complex(tb, 0.0));
            if (series.regime != MLRegime::series) continue;
            const Complex asym = ml_eval_asymptotic(prm, Complex(tb, 0.0));
            worst_band =
                std::max(worst_band, std::abs(series.value - asym) / std::abs(series.value));
        }
    }
    c.finish(worst_ratio <= 1e-3 && worst_band <= 1e-8,
             "ratio dev " + fmt(worst_ratio) + ", band dev " + fmt(worst_band));
}

// 6. Gamma-quotient Mellin identity
void criterion_6() {
    Criterion c{6, "Gamma-quotient Mellin identity"};
    double worst = 0.0;
    for (auto [a, b, m] : std::array<std::tuple<double, double, double>, 3>{
             {{1.0, 2.0, 1.0}, {1.0, 3.0, 2.0}, {2.0, 5.0, 1.5}}}) {
        for (double z : {0.5, 1.0, 2.0, 4.0}) {
            const Complex numeric = gamma_quotient_mellin(a, b, m, Complex(z, 0.0));
            const double expect = gamma_ratio((a + z) / m, (b + z) / m);
            worst = std::max(worst, std::abs(numeric.real() - expect) / std::abs(expect));
        }
    }
    c.finish(worst <= 1e-8, "worst rel err " + fmt(worst));
}

// 7. scaling law of the G transform under V_t
void criterion_7() {
    Criterion c{7, "G transform scaling law"};
    double worst = 0.0;
    const QuadSpec quad{};
    for (int d : {1, 2}) {
        for (auto [m, s] : std::array<std::pair<double, double>, 2>{{{1.0, 0.0}, {1.5, 0.5}}}) {
            const SpaceParams p(d, m, 1.0, s);
            std::vector<Symbol> gs;
            gs.push_back(catalog::constant(Complex(1.0, 0.0), d));
            gs.push_back(parse_symbol("r^2", d));
            gs.push_back(parse_symbol("z1*conj(z1)", d));
            std::vector<std::vector<Complex>> zs;
            if (d == 1) {
                zs = {{Complex(0.5, 0.0)}, {Complex(1.0, 0.3)}, {Complex(2.0, 0.0)}};
            } else {
                zs = {{Complex(0.5, 0.0), Complex(0.5, 0.0)},
                      {Complex(2.0, 0.0), Complex(1.0, 0.0)},
                      {Complex(0.3, 0.2), Complex(1.1, 0.0)}};
            }
            for (const auto& g : gs) {
                for (double t : {0.5, 2.0}) {
                    const Symbol vt = v_transform(g, t, p);
                    for (const auto& z : zs) {
                        Complex sz(0.0, 0.0);
                        for (const auto& w : z) sz += w;
                        const Complex lhs = g_transform(vt, z, p, quad);
                        const Complex rhs =
                            std::exp(-(2.0 * (p.s + p.d) + 2.0 * sz) * std::log(t)) *
                            g_transform(g, z, p, quad);
                        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
                    }
                }
            }
        }
    }
    c.finish(worst <= 1e-8, "worst rel dev " + fmt(worst));
}

// 8. commutant characterization, both directions, plus the catalog sweep
void criterion_8() {
    Criterion c{8, "commutant characterization"};
    const QuadSpec quad{48, 48, DEOptions{}};
    double worst_inv = 0.0;       // rotation-invariant g: residual must vanish
    double least_noninv = 1e300;  // others: residual and off-block mass stay large
    double least_off = 1e300;
    bool classification_ok = true;
    std::ostringstream mismatch;

    for (int d : {1, 2}) {
        for (auto [m, s] : std::array<std::pair<double, double>, 2>{{{1.0, 0.0}, {2.0, 0.5}}}) {
            const SpaceParams p(d, m, 1.0, s);
            const Symbol f = parse_symbol("r^2", d);

            struct Entry {
                std::string text;
                bool invariant;
            };
            std::vector<Entry> cat{
                {"r^4", true}, {"1", true}, {"z1", false}, {"re(z1)", false}, {"z1^2", false}};
            if (d == 2) {
                cat.push_back({"z1*conj(z2)", true});
                cat.push_back({"z1*conj(z1)", true});
            }

            for (const auto& entry : cat) {
                const Symbol g = parse_symbol(entry.text, d);
                const ResidualReport rep = commutator_residual(f, g, p, 10, quad);
                const double off = offblock_mass(g, p, 10, quad);
                if (entry.invariant) {
                    worst_inv = std::max(worst_inv, rep.frobenius_residual);
                } else {
                    least_noninv = std::min(least_noninv, rep.frobenius_residual);
                    least_off = std::min(least_off, off);
                }
                const bool commutes = rep.frobenius_residual <= 1e-7;
                const bool invariant_numeric = off <= 1e-7;
                if (commutes != invariant_numeric) {
                    classification_ok = false;
                    mismatch << " " << entry.text << "(d=" << d << ")";
                }
            }
        }
    }
    const bool ok =
        worst_inv <= 1e-7 && least_noninv >= 0.05 && least_off >= 0.05 && classification_ok;
    c.finish(ok, "invariant max " + fmt(worst_inv) + ", non-invariant min " + fmt(least_noninv) +
                     ", off-block min " + fmt(least_off) +
                     (classification_ok ? ", classes agree" : ", MISMATCH:" + mismatch.str()));
}

// 9. zero-product surrogate
void criterion_9() {
    Criterion c{9, "zero-product surrogate"};
    const QuadSpec quad{48, 48, DEOptions{}};
    double least = 1e300;
    for (auto [d, m, s] : std::array<std::tuple<int, double, double>, 3>{
             {{1, 1.0, 0.0}, {1, 2.0, 0.5}, {2, 1.0, 0.0}}}) {
        const SpaceParams p(d, m, 1.0, s);
        const Symbol f = parse_symbol("r^2", d);
        for (const char* text : {"z1", "1 + z1*conj(z1)"}) {
            const Symbol g = parse_symbol(text, d);
            const auto [fg, gf] = zero_product_residual(f, g, p, 10, quad);
            least = std::min({least, fg.frobenius_residual, gf.frobenius_residual});
        }
    }
    const SpaceParams p1(1, 1.0, 1.0, 0.0);
    const auto [z1, z2] =
        zero_product_residual(catalog::zero(1), parse_symbol("z1", 1), p1, 10, quad);
    const bool exact_zero = z1.raw_frobenius == 0.0 && z2.raw_frobenius == 0.0;
    c.finish(least >= 0.05 && exact_zero,
             "min residual " + fmt(least) + (exact_zero ? ", zero symbol exact" : ", ZERO LEAK"));
}

// 10. the commutant counterexample, runtime bound 30 s
void criterion_10() {
    Criterion c{10, "commutant counterexample"};
    const SpaceParams p(1, 1.0, 1.0, 0.0);
    const ResidualReport rep = counterexample_check(8, p, 14, QuadSpec{});
    const double off = offblock_mass(catalog::direction_power(1, 8, 1), p, 14, QuadSpec{});
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - c.start).count();
    c.finish(rep.frobenius_residual <= 1e-7 && off >= 0.05 && secs < 30.0,
             "residual " + fmt(rep.frobenius_residual) + ", off-block " + fmt(off) + ", " +
                 fmt(secs) + "s < 30s");
}

// 11. period-scan trichotomy
void criterion_11() {
    Criterion c{11, "period-scan trichotomy"};
    const SpaceParams p(1, 1.5, 1.0, 0.5);
    PeriodScanSpec spec;
    spec.tol = 1e-8;
    const Symbol one = catalog::constant(Complex(1.0, 0.0), 1);
    const Symbol r2 = catalog::radial_power(2.0, 1);
    const auto full = period_scan(one, one, p, -5, 5, spec);
    const auto self = period_scan(r2, r2, p, -5, 5, spec);
    const auto none = period_scan(r2, one, p, -5, 5, spec);
    const bool ok = full.matches.size() == 11 && self.matches.size() == 1 &&
                    self.matches.count(0) == 1 && none.matches.empty();
    c.finish(ok, "full=" + std::to_string(full.matches.size()) +
                     ", self has 0:" + std::to_string(self.matches.count(0)) +
                     ", none=" + std::to_string(none.matches.size()));
}

// 12. CLI determinism: identical flags give byte-identical JSON
void criterion_12(const char* cli_path) {
    Criterion c{12, "CLI determinism"};
    if (cli_path == nullptr) {
        c.finish(false, "fockop binary path not supplied");
        return;
    }
    const std::string cmd =
        std::string(cli_path) + " commute --f \"r^2\" --g \"z1*conj(z2)\" --d 2 --degree 8";
    auto run = [&](const std::string& path) {
        const std::string full = cmd + " > " + path + " 2>/dev/null";
        return std::system(full.c_str());
    };
    const int rc1 = run("/tmp/fockop_det_a.json");
    const int rc2 = run("/tmp/fockop_det_b.json");
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp("/tmp/fockop_det_a.json");
    const std::string b = slurp("/tmp/fockop_det_b.json");
    const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    c.finish(ok, ok ? "byte-identical (" + std::to_string(a.size()) + " bytes)"
                    : "outputs differ or CLI failed");
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12(cli);
    if (g_failures == 0) {
        std::printf("all 12 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
