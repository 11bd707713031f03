#ifndef FOCKOP_QUADRATURE_HPP
#define FOCKOP_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "fockop/common.hpp"
#include "fockop/space.hpp"

namespace fockop {

class Symbol;

/// Options for the double-exponential (tanh-sinh / exp-sinh) integrators.
struct DEOptions {
    double rel_tol = 1e-12;
    int max_level = 12;
};

/// Integrand for finite-interval DE integration. Receives the abscissa and
/// its distances to both endpoints (the distances stay accurate when the
/// abscissa itself rounds to an endpoint).
using EndpointAwareFn = std::function<Complex(double x, double dist_a, double dist_b)>;

/// Integral over (a, b) by tanh-sinh quadrature; handles integrable endpoint
/// singularities. Throws NumericalError when the refinement does not
/// stabilize within options.max_level.
Complex tanh_sinh(const EndpointAwareFn& f, double a, double b, const DEOptions& opt = {});
Complex tanh_sinh(const std::function<Complex(double)>& f, double a, double b,
                  const DEOptions& opt = {});

/// Integral over (0, infinity) by exp-sinh quadrature. The integrand must
/// decay at both ends (algebraically at 0, essentially arbitrarily fast at
/// infinity). Nodes are placed in geometric progression, so x^c factors with
/// complex c are handled to full accuracy.
Complex exp_sinh(const std::function<Complex(double)>& f, const DEOptions& opt = {});

/// Gauss rule for the radial weight r^{2d+2s-1} e^{-alpha r^{2m}} on
/// (0, infinity): sum w_i f(r_i) ~ int f(r) r^{2d+2s-1} e^{-alpha r^{2m}} dr.
/// Exact for polynomials in r up to degree 2n-1.
struct RadialRule {
    SpaceParams params;
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// int_0^inf r^{2d+2s+2k-1} e^{-alpha r^{2m}} dr
///   = Gamma((d+s+k)/m) / (2m alpha^{(d+s+k)/m}),  valid for real k > -d-s.
double radial_moment(const SpaceParams& p, double k);

/// Builds the n-point Gauss rule for the radial weight. Recurrence
/// coefficients come from a Stieltjes procedure on a double-exponential
/// discretization of the weight (with full reorthogonalization), the nodes
/// and weights from the Golub-Welsch eigenproblem.
RadialRule build_radial_rule(const SpaceParams& p, int n);

double integrate_radial(const RadialRule& rule, const std::function<double(double)>& f);
Complex integrate_radial_complex(const RadialRule& rule, const std::function<Complex(double)>& f);

/// Equispaced angular rule on [0, 2pi); exact for trigonometric polynomials
/// e^{ik theta} with |k| < n_angles.
struct AngularRule {
    int n_angles;
    std::vector<double> nodes;
    double weight;  // 2pi / n_angles, same for every node

    explicit AngularRule(int n);
};

/// Quadrature sizes shared by the integration front ends.
struct QuadSpec {
    int n_r = 60;
    int n_theta = 64;
    DEOptions de{};
};

/// int_C g dmu_{m,alpha,s} for d = 1, by radial Gauss x angular trapezoid.
/// Throws NumericalError naming the node if g evaluates to NaN.
Complex integrate_c1(const SpaceParams& p, const Symbol& g, int n_r, int n_theta);

/// int_{C^2} g dmu for d = 2: tensor product of per-coordinate mapped Gauss
/// nodes with the non-separable joint weight evaluated pointwise. Symbols
/// that only depend on the coordinate moduli skip the angular loops.
Complex integrate_c2(const SpaceParams& p, const Symbol& g, int n_r, int n_theta);

}  // namespace fockop

#endif
