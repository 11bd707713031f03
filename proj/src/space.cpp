#include "fockop/space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fockop {

SpaceParams::SpaceParams(int d_, double m_, double alpha_, double s_)
    : d(d_), m(m_), alpha(alpha_), s(s_) {
    if (d < 1) throw std::invalid_argument("SpaceParams: d must be >= 1");
    if (!(m >= 1.0)) throw std::invalid_argument("SpaceParams: m must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("SpaceParams: alpha must be > 0");
    if (!(s >= 0.0)) throw std::invalid_argument("SpaceParams: s must be >= 0");
}

std::string SpaceParams::describe() const {
    std::ostringstream os;
    os << "(d=" << d << ", m=" << m << ", alpha=" << alpha << ", s=" << s << ")";
    return os.str();
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("MultiIndex: empty index");
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
    }
}

int MultiIndex::total_degree() const {
    int t = 0;
    for (int e : entries_) t += e;
    return t;
}

double MultiIndex::log_factorial() const {
    double t = 0.0;
    for (int e : entries_) t += std::lgamma(static_cast<double>(e) + 1.0);
    return t;
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

double normalization_constant(const SpaceParams& p) {
    const double log_c = std::log(p.m) + (p.d + p.s) / p.m * std::log(p.alpha) -
                         p.d * std::log(std::numbers::pi) + std::lgamma(p.d) -
                         std::lgamma(p.gamma_arg(0.0));
    return std::exp(log_c);
}

double log_moment(const SpaceParams& p, const MultiIndex& nu) {
    if (nu.size() != p.d) throw std::invalid_argument("moment: multi-index length != d");
    const double k = nu.total_degree();
    return nu.log_factorial() + std::lgamma(p.gamma_arg(k)) - std::lgamma(p.d + k) +
           std::lgamma(p.d) - std::lgamma(p.gamma_arg(0.0)) - (k / p.m) * std::log(p.alpha);
}

double moment(const SpaceParams& p, const MultiIndex& nu) {
    const double lm = log_moment(p, nu);
    if (lm > 709.0) {
        throw NumericalError("moment: value overflows double at degree " +
                             std::to_string(nu.total_degree()) + " for " + p.describe());
    }
    // The Gamma-quotient part is evaluated in log space; the factorial is kept
    // exact when it fits so that the Gaussian case (m=1, s=0, alpha=1) returns
    // nu! without roundoff.
    const double log_quot = lm - nu.log_factorial();
    if (nu.total_degree() <= 170) {
        double fact = 1.0;
        for (int i = 0; i < nu.size(); ++i) {
            for (int j = 2; j <= nu[i]; ++j) fact *= static_cast<double>(j);
        }
        return fact * std::exp(log_quot);
    }
    return std::exp(lm);
}

double orthonormal_coefficient(const SpaceParams& p, const MultiIndex& nu) {
    const double lm = log_moment(p, nu);
    if (std::abs(lm) > 1400.0) {
        throw NumericalError("orthonormal_coefficient: out of double range at degree " +
                             std::to_string(nu.total_degree()));
    }
    return std::exp(-0.5 * lm);
}

namespace {

void enumerate_degree(int d, int degree, std::vector<int>& current,
                      std::vector<MultiIndex>& out) {
    if (d == 1) {
        current.push_back(degree);
        out.emplace_back(current);
        current.pop_back();
        return;
    }
    // earlier coordinates take higher degree first: (1,0) precedes (0,1)
    for (int e = degree; e >= 0; --e) {
        current.push_back(e);
        enumerate_degree(d - 1, degree - e, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> graded_basis(const SpaceParams& p, int D) {
    if (D < 0) throw std::invalid_argument("graded_basis: D must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> current;
    for (int degree = 0; degree <= D; ++degree) {
        enumerate_degree(p.d, degree, current, out);
    }
    return out;
}

}  // namespace fockop
