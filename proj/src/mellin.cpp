#include "fockop/mellin.hpp"

#include <cmath>
#include <cstring>

#include "fockop/gamma.hpp"

namespace fockop {

Complex mellin_transform(const std::function<Complex(double)>& f, Complex zeta,
                         const SupportHint& support, const DEOptions& opt) {
    const double lo = std::max(support.lo, 0.0);
    const double hi = support.hi;
    auto integrand = [&](double x) -> Complex {
        const double lx = std::log(x);
        const double lw = (zeta.real() - 1.0) * lx;
        if (lw < -700.0 || lw > 700.0) {
            // x^{zeta-1} out of double range; f must vanish there for the
            // integral to exist, so treat the product as 0
            return Complex(0.0, 0.0);
        }
        return f(x) * std::exp(Complex(lw, zeta.imag() * lx));
    };
    if (std::isinf(hi)) {
        if (lo == 0.0) return exp_sinh(integrand, opt);
        return exp_sinh([&](double t) { return integrand(lo + t); }, opt);
    }
    if (!(lo < hi)) throw std::invalid_argument("mellin_transform: empty support");
    return tanh_sinh(integrand, lo, hi, opt);
}

Complex mellin_convolve(const std::function<Complex(double)>& f,
                        const std::function<Complex(double)>& g, double x,
                        const SupportHint& support_f, const SupportHint& support_g,
                        const DEOptions& opt) {
    if (!(x > 0.0)) throw std::invalid_argument("mellin_convolve: x must be > 0");
    // y ranges over supp f intersected with {x/y in supp g}
    double lo = std::max(support_f.lo, 0.0);
    double hi = support_f.hi;
    if (support_g.hi > 0.0 && !std::isinf(support_g.hi)) lo = std::max(lo, x / support_g.hi);
    if (support_g.lo > 0.0) hi = std::min(hi, x / support_g.lo);

    auto integrand = [&](double y) { return f(y) * g(x / y) / y; };
    if (std::isinf(hi)) {
        if (lo == 0.0) return exp_sinh(integrand, opt);
        return exp_sinh([&](double t) { return integrand(lo + t); }, opt);
    }
    if (!(lo < hi)) return Complex(0.0, 0.0);
    return tanh_sinh(integrand, lo, hi, opt);
}

double gamma_quotient_kernel(double a, double b, double m, double r) {
    if (!(a < b)) throw std::invalid_argument("gamma_quotient_kernel: requires a < b");
    if (!(m >= 1.0)) throw std::invalid_argument("gamma_quotient_kernel: requires m >= 1");
    if (r <= 0.0 || r >= 1.0) return 0.0;
    const double mu = (b - a) / m - 1.0;
    return 2.0 * m / std::tgamma((b - a) / m) * std::pow(r, 2.0 * a) *
           std::pow(1.0 - std::pow(r, 2.0 * m), mu);
}

Complex gamma_quotient_mellin(double a, double b, double m, Complex z, const DEOptions& opt) {
    if (!(a < b)) throw std::invalid_argument("gamma_quotient_mellin: requires a < b");
    const double mu = (b - a) / m - 1.0;
    const double pref = 2.0 * m / std::tgamma((b - a) / m);
    const Complex expo = 2.0 * a + 2.0 * z - 1.0;  // r^{2a} r^{2z-1}
    return tanh_sinh(
        [&](double r, double /*dist0*/, double dist1) -> Complex {
            // 1 - r^{2m} evaluated from the distance to 1 (stable at r -> 1)
            const double one_minus = -std::expm1(2.0 * m * std::log1p(-dist1));
            const double lr = std::log(r);
            return pref * std::exp(Complex(expo.real() * lr, expo.imag() * lr)) *
                   std::pow(one_minus, mu);
        },
        0.0, 1.0, opt);
}

std::optional<Complex> omega_closed_form(const Symbol& f, Complex zeta, const SpaceParams& p) {
    const auto& pef = f.power_exp_form();
    if (!pef) return std::nullopt;
    if (pef->lambda != Complex(0.0, 0.0) && pef->m_ref != p.m) return std::nullopt;
    const Complex one_minus_lambda = 1.0 - pef->lambda;
    if (one_minus_lambda.real() <= 0.0) return std::nullopt;
    const Complex top = (static_cast<double>(p.d) + p.s + zeta + pef->p) / p.m;
    const Complex bot = (static_cast<double>(p.d) + p.s + zeta) / p.m;
    // principal branch of (1 - lambda)^{-top}
    const Complex power = std::exp(-top * std::log(one_minus_lambda));
    return pef->coef * gamma_ratio(top, bot) * power;
}

namespace {

void require_omega_domain(const Symbol& f, Complex zeta, const SpaceParams& p) {
    if (!f.is_radial()) {
        throw std::invalid_argument("omega: symbol '" + f.description() + "' is not radial");
    }
    if (f.dimension() != p.d) throw std::invalid_argument("omega: dimension mismatch");
    if (p.alpha != 1.0) {
        throw std::invalid_argument("omega: defined against the alpha = 1 measure");
    }
    if (!(zeta.real() > -p.s - p.d)) {
        throw std::domain_error("omega: requires Re zeta > -s-d");
    }
}

}  // namespace

Complex omega_quadrature(const Symbol& f, Complex zeta, const SpaceParams& p,
                         const DEOptions& opt) {
    require_omega_domain(f, zeta, p);
    const double expo_re = 2.0 * (p.d + p.s + zeta.real()) - 1.0;
    const double expo_im = 2.0 * zeta.imag();
    std::vector<Complex> pt(static_cast<std::size_t>(p.d), Complex(0.0, 0.0));
    Complex integral;
    try {
        integral = exp_sinh(
            [&](double r) -> Complex {
                const double lr = std::log(r);
                const double lw = expo_re * lr - std::pow(r, 2.0 * p.m);
                if (lw < -745.0) return Complex(0.0, 0.0);
                pt[0] = Complex(r, 0.0);
                return f.eval(pt.data()) * std::exp(Complex(lw, expo_im * lr));
            },
            opt);
    } catch (const NumericalError& e) {
        throw NumericalError(std::string("omega: radial quadrature diverged (symbol may grow "
                                         "too fast): ") +
                             e.what());
    }
    if (integral == Complex(0.0, 0.0)) return integral;
    const Complex arg = (static_cast<double>(p.d) + p.s + zeta) / p.m;
    return 2.0 * p.m * std::exp(std::log(integral) - lgamma_complex(arg));
}

Complex omega(const Symbol& f, Complex zeta, const SpaceParams& p) {
    require_omega_domain(f, zeta, p);
    if (auto cf = omega_closed_form(f, zeta, p)) return *cf;
    return omega_quadrature(f, zeta, p);
}

OmegaFunction::OmegaFunction(Symbol f, SpaceParams p) : f_(std::move(f)), p_(p) {
    if (!f_.is_radial()) {
        throw std::invalid_argument("OmegaFunction: symbol is not radial");
    }
}

Complex OmegaFunction::operator()(Complex zeta) const {
    std::uint64_t key;
    {
        // order-preserving 64-bit key from the two coordinates
        const float re = static_cast<float>(zeta.real());
        const float im = static_cast<float>(zeta.imag());
        std::uint32_t a, b;
        std::memcpy(&a, &re, 4);
        std::memcpy(&b, &im, 4);
        key = (static_cast<std::uint64_t>(a) << 32) | b;
    }
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end() && it->second.first == zeta) return it->second.second;
    }
    const Complex value = omega(f_, zeta, p_);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        cache_[key] = {zeta, value};  // last write wins on identical keys
    }
    return value;
}

VanishingMomentReport vanishing_moment_test(const std::function<Complex(double)>& u, double a,
                                            int k0, int K, double tol, const DEOptions& opt) {
    if (!(a > 0.0 && a <= 2.0)) {
        throw std::invalid_argument("vanishing_moment_test: a must be in (0, 2]");
    }
    if (k0 < 0 || K < k0) throw std::invalid_argument("vanishing_moment_test: bad k range");
    VanishingMomentReport rep;
    rep.k0 = k0;
    for (int k = k0; k <= K; ++k) {
        const double expo = a * k;
        const Complex mk = exp_sinh(
            [&](double t) -> Complex {
                const double lw = expo * std::log(t) - t;
                if (lw < -745.0) return Complex(0.0, 0.0);
                return u(t) * std::exp(lw);
            },
            opt);
        rep.moments.push_back(mk);
        rep.max_abs = std::max(rep.max_abs, std::abs(mk));
    }
    rep.vanishes = rep.max_abs <= tol;
    return rep;
}

PeriodScanReport period_scan(const Symbol& f1, const Symbol& f2, const SpaceParams& p,
                             int n_lo, int n_hi, const PeriodScanSpec& spec) {
    if (n_lo > n_hi) throw std::invalid_argument("period_scan: empty shift range");
    OmegaFunction o1(f1, p), o2(f2, p);
    std::vector<double> grid;
    for (int i = 0; i < spec.n_points; ++i) {
        grid.push_back(spec.re_lo + (spec.re_hi - spec.re_lo) * i / (spec.n_points - 1));
    }
    PeriodScanReport rep;
    for (int n = n_lo; n <= n_hi; ++n) {
        double worst = 0.0;
        for (double re : grid) {
            const Complex z(re, 0.0);
            const Complex a = o1(z);
            const Complex b = o2(z + static_cast<double>(n));
            const double dev = std::abs(a - b) / std::max(std::abs(b), 1e-300);
            worst = std::max(worst, dev);
        }
        rep.max_rel_deviation[n] = worst;
        if (worst <= spec.tol) rep.matches.insert(n);
    }
    return rep;
}

}  // namespace fockop
