#ifndef FOCKOP_MELLIN_HPP
#define FOCKOP_MELLIN_HPP

#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <vector>

#include "fockop/common.hpp"
#include "fockop/quadrature.hpp"
#include "fockop/space.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// Holomorphy strip a < Re zeta < b of a Mellin transform.
struct MellinStrip {
    double a;
    double b;
};

/// Support hint for functions on (0, infinity); tightens the integration
/// domain and lets indicator-type factors integrate exactly.
struct SupportHint {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

/// M[f](zeta) = int_0^inf f(x) x^{zeta-1} dx. Throws NumericalError when the
/// quadrature fails to stabilize (divergence at this Re zeta).
Complex mellin_transform(const std::function<Complex(double)>& f, Complex zeta,
                         const SupportHint& support = {}, const DEOptions& opt = {});

/// Mellin convolution (f * g)(x) = int_0^inf f(y) g(x/y) dy/y.
Complex mellin_convolve(const std::function<Complex(double)>& f,
                        const std::function<Complex(double)>& g, double x,
                        const SupportHint& support_f = {}, const SupportHint& support_g = {},
                        const DEOptions& opt = {});

/// The explicit kernel of the Gamma-quotient identity: v with
/// M[v](2z) = Gamma((a+z)/m) / Gamma((b+z)/m), supported on (0, 1):
///   v(r) = 2m / Gamma((b-a)/m) * r^{2a} (1 - r^{2m})^{(b-a)/m - 1}.
/// Requires a < b; returns 0 outside (0, 1).
double gamma_quotient_kernel(double a, double b, double m, double r);

/// M[v](2z) computed by endpoint-aware quadrature (the numeric side of the
/// Gamma-quotient identity).
Complex gamma_quotient_mellin(double a, double b, double m, Complex z,
                              const DEOptions& opt = {});

/// Radial eigenvalue function
///   Omega(f, zeta) = (2m / Gamma((d+s+zeta)/m)) *
///                    int_0^inf f(r) r^{2(d+s+zeta)-1} e^{-r^{2m}} dr,
/// holomorphic in Re zeta > -s-d; the Toeplitz eigenvalue of e_nu is
/// Omega(f, |nu|). Defined against the alpha = 1 measure.
/// Catalog symbols of power-exponential shape take the Gamma-quotient closed
/// form; everything else is quadrature.
Complex omega(const Symbol& f, Complex zeta, const SpaceParams& p);

/// Forces the quadrature route (oracle cross-checks).
Complex omega_quadrature(const Symbol& f, Complex zeta, const SpaceParams& p,
                         const DEOptions& opt = {});

/// Closed form when f carries a power-exponential tag, nullopt otherwise.
std::optional<Complex> omega_closed_form(const Symbol& f, Complex zeta, const SpaceParams& p);

/// Omega(f, .) with a thread-safe memo table over zeta.
class OmegaFunction {
public:
    OmegaFunction(Symbol f, SpaceParams p);

    Complex operator()(Complex zeta) const;
    const Symbol& symbol() const { return f_; }

private:
    Symbol f_;
    SpaceParams p_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, std::pair<Complex, Complex>> cache_;
};

struct VanishingMomentReport {
    std::vector<Complex> moments;  // indexed from k0
    int k0 = 0;
    double max_abs = 0.0;
    bool vanishes = false;  // all |moment| <= tol; finite-K surrogate only
};

/// Checks |int_0^inf u(t) e^{-t} t^{a k} dt| <= tol for k0 <= k <= K.
/// A finite-K surrogate: it can refute u = 0 a.e., never prove it.
VanishingMomentReport vanishing_moment_test(const std::function<Complex(double)>& u, double a,
                                            int k0, int K, double tol,
                                            const DEOptions& opt = {});

struct PeriodScanSpec {
    double re_lo = 5.0;
    double re_hi = 15.0;
    int n_points = 21;
    double tol = 1e-8;
};

struct PeriodScanReport {
    std::set<int> matches;
    std::map<int, double> max_rel_deviation;
};

/// Scans integer shifts n in [n_lo, n_hi] for Omega(f1, zeta) =
/// Omega(f2, zeta + n) on a grid of zeta with large real part; deviations are
/// measured relative to |Omega(f2, zeta + n)|. The result is empty, a
/// singleton, or the full range (constants).
PeriodScanReport period_scan(const Symbol& f1, const Symbol& f2, const SpaceParams& p,
                             int n_lo, int n_hi, const PeriodScanSpec& spec = {});

}  // namespace fockop

#endif
