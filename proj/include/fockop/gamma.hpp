#ifndef FOCKOP_GAMMA_HPP
#define FOCKOP_GAMMA_HPP

#include "fockop/common.hpp"

namespace fockop {

/// log Gamma(z) for complex z (principal value up to multiples of 2*pi*i,
/// which cancel under exp). Real arguments are routed to std::lgamma.
Complex lgamma_complex(Complex z);

/// Gamma(z) for complex z.
Complex gamma_complex(Complex z);

/// Gamma(a)/Gamma(b) computed as exp(lgamma(a) - lgamma(b)); avoids overflow
/// for large arguments.
Complex gamma_ratio(Complex a, Complex b);
double gamma_ratio(double a, double b);

/// Gamma(x) on the real line including negative non-integer x; throws
/// std::domain_error at poles.
double gamma_real(double x);

}  // namespace fockop

#endif
