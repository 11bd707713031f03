#ifndef FOCKOP_MITTAG_LEFFLER_HPP
#define FOCKOP_MITTAG_LEFFLER_HPP

#include <vector>

#include "fockop/common.hpp"
#include "fockop/space.hpp"

namespace fockop {

/// Parameters of E^{(order)}_{beta,gamma}. Kernel use has beta = 1/m,
/// gamma = (1+s)/m and order = d-1.
struct MLParams {
    double beta;
    double gamma;
    int derivative_order = 0;

    MLParams(double beta_, double gamma_, int order = 0);
    static MLParams for_space(const SpaceParams& p);
};

enum class MLRegime { series, asymptotic };

struct MLValue {
    Complex value;
    MLRegime regime;
};

struct MLOptions {
    int series_budget = 500;     // term budget before switching regimes
    double series_tol = 1e-12;
    double sector_margin = 0.1;  // rad inside |arg z| <= pi*beta/2
    int correction_terms = 80;   // cap on the algebraic asymptotic terms
};

/// E^{(order)}_{beta,gamma}(z) = sum_k (k+order)!/k! z^k / Gamma(beta(k+order)+gamma),
/// by power series when it converges within budget, otherwise by the
/// asymptotic expansion (valid in |arg z| <= pi*beta/2 - margin). Throws
/// NumericalError when neither regime attains the tolerance.
MLValue ml_eval_full(const MLParams& params, Complex z, const MLOptions& opt = {});
Complex ml_eval(const MLParams& params, Complex z, const MLOptions& opt = {});

/// Asymptotic value: the algebraic series -sum_k z^{-k}/Gamma(gamma-k beta)
/// (differentiated, summed to its optimal truncation within the cap) plus,
/// for |arg z| < pi*beta, the termwise-differentiated exponential term
/// d^l/dz^l [ (1/beta) z^{(1-gamma)/beta} e^{z^{1/beta}} ].
Complex ml_eval_asymptotic(const MLParams& params, Complex z, int correction_terms = 80);

/// Leading exponential part only (no algebraic corrections); the denominator
/// of kernel_asymptotic_ratio.
Complex ml_asymptotic_leading(const MLParams& params, Complex z);

/// Reproducing kernel K_{m,alpha,s}(xi, zeta)
///   = C_s E^{(d-1)}_{1/m,(1+s)/m}(alpha^{1/m} <xi, zeta>),
/// C_s = Gamma((d+s)/m)/Gamma(d), <.,.> the Hermitian inner product on C^d.
Complex kernel_eval(const SpaceParams& p, const std::vector<Complex>& xi,
                    const std::vector<Complex>& zeta, const MLOptions& opt = {});

/// E^{(d-1)}(t) divided by its leading asymptotic term at real t > 0;
/// approaches 1 as t -> infinity. Requires t^m >= 5 (domain_error below).
double kernel_asymptotic_ratio(const SpaceParams& p, double t, const MLOptions& opt = {});

}  // namespace fockop

#endif
