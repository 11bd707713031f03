#include "fockop/mittag_leffler.hpp"

#include <cmath>
#include <numbers>

#include "fockop/gamma.hpp"

namespace fockop {

MLParams::MLParams(double beta_, double gamma_, int order)
    : beta(beta_), gamma(gamma_), derivative_order(order) {
    if (!(beta > 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument("MLParams: beta and gamma must be positive");
    }
    if (order < 0) throw std::invalid_argument("MLParams: derivative order must be >= 0");
}

MLParams MLParams::for_space(const SpaceParams& p) {
    return MLParams(1.0 / p.m, (1.0 + p.s) / p.m, p.d - 1);
}

namespace {

struct SeriesResult {
    Complex value{0.0, 0.0};
    bool converged = false;
    double error_estimate = 1.0;  // accumulator eps times the cancellation ratio
};

SeriesResult ml_series(const MLParams& prm, Complex z, const MLOptions& opt) {
    SeriesResult out;
    const int l = prm.derivative_order;
    if (z == Complex(0.0, 0.0)) {
        const double logc = std::lgamma(l + 1.0) - std::lgamma(prm.beta * l + prm.gamma);
        out.value = Complex(std::exp(logc), 0.0);
        out.converged = true;
        out.error_estimate = 1e-16;
        return out;
    }
    const double log_mod = std::log(std::abs(z));
    const double arg = std::arg(z);

    long double acc_re = 0.0L, acc_im = 0.0L;
    double max_term = 0.0;
    int small_streak = 0;
    bool converged = false;
    for (int k = 0; k <= opt.series_budget; ++k) {
        const double logc = std::lgamma(k + l + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(prm.beta * (k + l) + prm.gamma);
        const double lt = logc + k * log_mod;
        if (lt > 700.0) {
            return out;  // term overflow; series unusable here
        }
        const double mag = std::exp(lt);
        const double ph = k * arg;
        acc_re += static_cast<long double>(mag * std::cos(ph));
        acc_im += static_cast<long double>(mag * std::sin(ph));
        max_term = std::max(max_term, mag);
        const double cur = std::hypot(static_cast<double>(acc_re), static_cast<double>(acc_im));
        if (mag <= opt.series_tol * cur && k > 2) {
            // terms are eventually decreasing once k exceeds the ratio peak
            const double ratio = std::abs(z) / std::pow(prm.beta * (k + l) + prm.gamma, prm.beta);
            if (ratio < 1.0 && ++small_streak >= 3) {
                converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    if (!converged) return out;
    out.value = Complex(static_cast<double>(acc_re), static_cast<double>(acc_im));
    out.converged = true;
    // the long double accumulator carries ~19 digits; cancellation eats
    // max_term/|sum| of them
    const double total = std::abs(out.value);
    out.error_estimate = total > 0.0 ? 1.1e-19 * max_term / total : 1.0;
    return out;
}

// terms c * z^p * e^{z^{1/beta}} closed under differentiation
struct ExpTerm {
    double coef;
    double power;
};

std::vector<ExpTerm> differentiated_leading(const MLParams& prm) {
    const double m = 1.0 / prm.beta;
    std::vector<ExpTerm> terms{{m, (1.0 - prm.gamma) / prm.beta}};
    for (int step = 0; step < prm.derivative_order; ++step) {
        std::vector<ExpTerm> next;
        next.reserve(terms.size() * 2);
        for (const auto& t : terms) {
            if (t.power != 0.0) next.push_back({t.coef * t.power, t.power - 1.0});
            next.push_back({t.coef * m, t.power + m - 1.0});
        }
        // merge equal powers
        std::vector<ExpTerm> merged;
        for (const auto& t : next) {
            bool found = false;
            for (auto& u : merged) {
                if (std::abs(u.power - t.power) < 1e-12) {
                    u.coef += t.coef;
                    found = true;
                    break;
                }
            }
            if (!found) merged.push_back(t);
        }
        terms = std::move(merged);
    }
    return terms;
}

double reciprocal_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;  // pole of Gamma
    return 1.0 / std::tgamma(x);
}

}  // namespace

Complex ml_asymptotic_leading(const MLParams& prm, Complex z) {
    const double m = 1.0 / prm.beta;
    const Complex logz = std::log(z);
    const Complex zm = std::exp(m * logz);
    Complex acc(0.0, 0.0);
    for (const auto& t : differentiated_leading(prm)) {
        acc += t.coef * std::exp(t.power * logz);
    }
    return acc * std::exp(zm);
}

namespace {

struct AsymResult {
    Complex value{0.0, 0.0};
    double error_estimate = 1.0;  // |last algebraic term| / |value|
};

// Full-plane asymptotics: the algebraic series everywhere, plus the
// exponential term only in |arg z| < pi*beta (the Stokes rule; the term is
// already exponentially small as that line is approached).
AsymResult ml_asymptotic_impl(const MLParams& prm, Complex z, int correction_cap) {
    AsymResult out;
    const Complex logz = std::log(z);
    const int l = prm.derivative_order;
    // the algebraic series is summed to its optimal truncation: stop when the
    // terms start growing again or fall below machine scale
    double prev_mag = 1e300;
    double min_mag = 1e300;
    Complex acc(0.0, 0.0);
    int used = 0;
    for (int k = 1; k <= correction_cap; ++k) {
        const double rg = reciprocal_gamma(prm.gamma - prm.beta * k);
        if (rg == 0.0) continue;
        double coef = 1.0;
        for (int j = 0; j < l; ++j) coef *= -(k + j);
        const Complex term = coef * rg * std::exp(-(static_cast<double>(k + l)) * logz);
        const double mag = std::abs(term);
        if (used > 0 && mag > prev_mag) break;  // divergent tail reached
        acc -= term;
        ++used;
        prev_mag = mag;
        min_mag = std::min(min_mag, mag);
        if (mag <= 1e-17 * std::abs(acc)) break;
    }
    out.value = acc;
    const bool in_exponential_region = std::abs(std::arg(z)) < std::numbers::pi * prm.beta;
    if (in_exponential_region) {
        out.value += ml_asymptotic_leading(prm, z);
    }
    if (used == 0) {
        out.error_estimate = in_exponential_region ? 0.0 : 1.0;
    } else {
        out.error_estimate = min_mag / (std::abs(out.value) + 1e-300);
    }
    return out;
}

}  // namespace

Complex ml_eval_asymptotic(const MLParams& prm, Complex z, int correction_terms) {
    return ml_asymptotic_impl(prm, z, correction_terms).value;
}

MLValue ml_eval_full(const MLParams& prm, Complex z, const MLOptions& opt) {
    // E^{(l)}_{1,1} is exactly exp
    if (prm.beta == 1.0 && prm.gamma == 1.0) {
        return {std::exp(z), MLRegime::series};
    }
    // predicted series length: terms decay once (beta k)^beta exceeds |z|
    const double peak = std::pow(std::abs(z), 1.0 / prm.beta) / prm.beta;
    const bool series_feasible = peak + 64.0 < static_cast<double>(opt.series_budget);

    SeriesResult s;
    if (series_feasible) {
        s = ml_series(prm, z, opt);
        if (s.converged && s.error_estimate <= opt.series_tol) {
            return {s.value, MLRegime::series};
        }
    }
    // asymptotic fallback; inside the principal sector the exponential term
    // dominates and the value carries full accuracy, elsewhere the accuracy
    // is whatever the optimally truncated algebraic tail allows
    AsymResult asym;
    bool have_asym = false;
    if (z != Complex(0.0, 0.0)) {
        asym = ml_asymptotic_impl(prm, z, opt.correction_terms);
        have_asym = true;
        const double sector = std::numbers::pi * prm.beta / 2.0 - opt.sector_margin;
        if (std::abs(std::arg(z)) <= sector) return {asym.value, MLRegime::asymptotic};
    }
    // out of the sector: best of the two estimates, within a documented floor
    const double series_est = s.converged ? s.error_estimate : 1.0;
    const double asym_est = have_asym ? asym.error_estimate : 1.0;
    if (series_est <= asym_est && series_est <= 1e-6) return {s.value, MLRegime::series};
    if (asym_est < series_est && asym_est <= 1e-6) return {asym.value, MLRegime::asymptotic};
    throw NumericalError(
        "ml_eval: no regime reaches the requested tolerance (|z|=" +
        std::to_string(std::abs(z)) + ", arg=" + std::to_string(std::arg(z)) + ")");
}

Complex ml_eval(const MLParams& prm, Complex z, const MLOptions& opt) {
    return ml_eval_full(prm, z, opt).value;
}

Complex kernel_eval(const SpaceParams& p, const std::vector<Complex>& xi,
                    const std::vector<Complex>& zeta, const MLOptions& opt) {
    if (static_cast<int>(xi.size()) != p.d || static_cast<int>(zeta.size()) != p.d) {
        throw std::invalid_argument("kernel_eval: point dimension mismatch");
    }
    Complex inner(0.0, 0.0);
    for (int j = 0; j < p.d; ++j) {
        inner += xi[static_cast<std::size_t>(j)] * std::conj(zeta[static_cast<std::size_t>(j)]);
    }
    const double cs = gamma_ratio(p.gamma_arg(0.0), static_cast<double>(p.d));
    const Complex arg = std::pow(p.alpha, 1.0 / p.m) * inner;
    return cs * ml_eval(MLParams::for_space(p), arg, opt);
}

double kernel_asymptotic_ratio(const SpaceParams& p, double t, const MLOptions& opt) {
    if (!(t > 0.0) || std::pow(t, p.m) < 5.0) {
        throw std::domain_error("kernel_asymptotic_ratio: need t^m >= 5");
    }
    const MLParams prm = MLParams::for_space(p);
    const Complex value = ml_eval(prm, Complex(t, 0.0), opt);
    const Complex leading = ml_asymptotic_leading(prm, Complex(t, 0.0));
    return (value / leading).real();
}

}  // namespace fockop
