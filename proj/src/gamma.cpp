#include "fockop/gamma.hpp"

#include <cmath>
#include <numbers>

namespace fockop {

namespace {

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
// Relative accuracy ~1e-13 on the right half plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex lgamma_lanczos(Complex z) {
    // valid for Re z >= 0.5
    Complex sum = kLanczos[0];
    for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    const Complex t = z + (kLanczosG - 0.5);
    constexpr double half_log_2pi = 0.91893853320467274178;
    return half_log_2pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Complex lgamma_complex(Complex z) {
    if (z.imag() == 0.0 && z.real() > 0.0) {
        return Complex(std::lgamma(z.real()), 0.0);
    }
    if (z.real() >= 0.5) return lgamma_lanczos(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_lanczos(1.0 - z);
}

Complex gamma_complex(Complex z) { return std::exp(lgamma_complex(z)); }

Complex gamma_ratio(Complex a, Complex b) {
    return std::exp(lgamma_complex(a) - lgamma_complex(b));
}

double gamma_ratio(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::exp(std::lgamma(a) - std::lgamma(b));
    return gamma_real(a) / gamma_real(b);
}

double gamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        throw std::domain_error("gamma_real: pole at non-positive integer " + std::to_string(x));
    }
    return std::tgamma(x);
}

}  // namespace fockop
