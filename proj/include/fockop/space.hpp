#ifndef FOCKOP_SPACE_HPP
#define FOCKOP_SPACE_HPP

#include <string>
#include <vector>

#include "fockop/common.hpp"

namespace fockop {

/// Parameters (d, m, alpha, s) of the generalized Fock space F^2_{m,alpha,s}
/// on C^d, whose probability measure has density
///   c_{m,alpha,s} |z|^{2s} exp(-alpha |z|^{2m})
/// with respect to Lebesgue volume.
struct SpaceParams {
    int d;
    double m;
    double alpha;
    double s;

    SpaceParams(int d_, double m_, double alpha_, double s_);

    /// (d + s + k) / m, the argument pattern of every Gamma factor below.
    double gamma_arg(double k) const { return (d + s + k) / m; }

    std::string describe() const;
};

/// Multi-index nu in N^d labelling the monomial z^nu.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    int total_degree() const;
    /// log(nu!) = sum log(nu_i!)
    double log_factorial() const;

    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
    std::string to_string() const;

private:
    std::vector<int> entries_;
};

/// Normalization constant c_{m,alpha,s} = m alpha^{(d+s)/m} / pi^d *
/// Gamma(d)/Gamma((d+s)/m); makes the measure a probability measure.
double normalization_constant(const SpaceParams& p);

/// Squared norm of the monomial z^nu,
///   S_{alpha,s}(nu) = C_s^{-1} nu! Gamma((d+s+|nu|)/m) /
///                     (Gamma(d+|nu|) alpha^{|nu|/m}),
/// with C_s = Gamma((d+s)/m)/Gamma(d). Throws NumericalError when the value
/// exceeds double range (message names the offending degree).
double moment(const SpaceParams& p, const MultiIndex& nu);

/// log of the moment; finite far beyond the overflow range of moment().
double log_moment(const SpaceParams& p, const MultiIndex& nu);

/// S_{alpha,s}(nu)^{-1/2}, the coefficient normalizing z^nu to unit norm.
double orthonormal_coefficient(const SpaceParams& p, const MultiIndex& nu);

/// All multi-indices with total degree <= D, ordered by (total degree, then
/// lexicographically with earlier coordinates carrying higher degree first):
/// d=2, D=1 gives (0,0), (1,0), (0,1). This ordering is shared by every
/// matrix builder so that equal-degree blocks are contiguous.
std::vector<MultiIndex> graded_basis(const SpaceParams& p, int D);

}  // namespace fockop

#endif
