#ifndef FOCKOP_COMMON_HPP
#define FOCKOP_COMMON_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace fockop {

using Complex = std::complex<double>;

/// Signals a numerical failure (quadrature divergence, series that does not
/// converge within budget, value out of floating-point range). Distinct from
/// argument validation errors, which use std::invalid_argument/domain_error.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic 64-bit generator (splitmix64). Used wherever "random" sample
// points are needed; avoids libstdc++ distribution differences so results are
// bit-stable across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

// Runs fn(i) for i in [0, n). Thread count is capped by the FOCKOP_THREADS
// environment variable (absent = hardware default). Tasks must write to
// disjoint locations; scheduling carries no reduction order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

int max_threads();

}  // namespace fockop

#endif
