#ifndef FOCKOP_TOEPLITZ_HPP
#define FOCKOP_TOEPLITZ_HPP

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockop/common.hpp"
#include "fockop/mellin.hpp"
#include "fockop/quadrature.hpp"
#include "fockop/space.hpp"
#include "fockop/symbol.hpp"

namespace fockop {

/// Truncation of a Toeplitz operator to the span of e_nu, |nu| <= D, in the
/// graded_basis order: matrix(i, j) = <T_g e_{basis[j]}, e_{basis[i]}>.
struct TruncatedOperator {
    SpaceParams params;
    int degree;
    std::vector<MultiIndex> basis;
    Eigen::MatrixXcd matrix;
    std::string symbol_desc;
    std::optional<int> degree_window;  // |total degree shift| bound of the symbol

    int size() const { return static_cast<int>(basis.size()); }
};

/// Residual norms on the interior block (total degree <= interior_degree,
/// chosen so matrix truncation cannot corrupt the reported entries).
/// frobenius_residual and max_entry_residual are normalized by `normalizer`
/// (product of the factors' operator norms on the same block; 1 for raw
/// reports); raw values are kept alongside.
struct ResidualReport {
    double frobenius_residual = 0.0;
    double max_entry_residual = 0.0;
    double raw_frobenius = 0.0;
    double raw_max_entry = 0.0;
    double normalizer = 1.0;
    int degree = 0;
    int interior_degree = 0;
    int n_r = 0;
    int n_theta = 0;
    bool window_capped = false;  // an unbounded degree window was capped (truncation caveat)
    std::map<int, double> band_mass;  // Frobenius mass per total-degree offset
};

/// Matrix of T_g: entries int g z^kappa conj(z)^nu dmu / sqrt(S(kappa)S(nu))
/// over all |kappa|, |nu| <= D. Radial symbols delegate to diagonal_radial
/// (valid in any d); general symbols require d <= 2.
TruncatedOperator build_matrix(const Symbol& g, const SpaceParams& p, int D,
                               const QuadSpec& quad = {});

/// Forces the quadrature route even for radial symbols (oracle cross-checks
/// and off-block measurements); d <= 2.
TruncatedOperator build_matrix_quadrature(const Symbol& g, const SpaceParams& p, int D,
                                          const QuadSpec& quad = {});

/// Diagonal truncation of a radial symbol: entries Omega(f, |nu|); any d.
TruncatedOperator diagonal_radial(const Symbol& f, const SpaceParams& p, int D);

/// Pointwise Bergman-type projection P u(z) = int K(z, xi) u(xi) dmu(xi).
Complex project_pointwise(const Symbol& u, const std::vector<Complex>& z, const SpaceParams& p,
                          const QuadSpec& quad = {});

/// Residual of T_f T_g - T_g T_f on the interior block.
ResidualReport commutator_residual(const Symbol& f, const Symbol& g, const SpaceParams& p,
                                   int D, const QuadSpec& quad = {});

/// Frobenius norm of the T_g entries coupling different total degrees
/// (always measured on the quadrature-built matrix). Vanishes exactly when g
/// is rotation invariant.
double offblock_mass(const Symbol& g, const SpaceParams& p, int D, const QuadSpec& quad = {});

/// Residuals of T_f T_g and T_g T_f on the interior block; f radial.
std::pair<ResidualReport, ResidualReport> zero_product_residual(const Symbol& f,
                                                                const Symbol& g,
                                                                const SpaceParams& p, int D,
                                                                const QuadSpec& quad = {});

/// max over |l| <= D_l of |[Omega(f1, |k|+|l|) - Omega(f2, |n|+|l|)] *
/// G(g z^k conj(z)^n)(l)|, the obstruction family of the intertwining
/// equation T_g T_{f1} = T_{f2} T_g. Raw values (normalizer 1); band_mass
/// holds the per-degree maxima.
ResidualReport equation_residual(const Symbol& f1, const Symbol& f2, const Symbol& g,
                                 const MultiIndex& k, const MultiIndex& n, const SpaceParams& p,
                                 int D_l, const QuadSpec& quad = {});

/// The commutant counterexample: f = exp(lambda |z|^{2m}) with
/// lambda = 1 - e^{-2 pi i m / N} (so T_f is diagonal with entries
/// c^{d+s+|kappa|}, c = e^{2 pi i/N}) against g = z_1^N / |z|^N. Requires
/// N > 6m and D >= N. The commutator residual is ~0 although g is not
/// rotation invariant.
ResidualReport counterexample_check(int N, const SpaceParams& p, int D,
                                    const QuadSpec& quad = {});

}  // namespace fockop

#endif
