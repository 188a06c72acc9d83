#pragma once

#include <cstddef>
#include <vector>

#include "expspline/types.hpp"

namespace expspline {

/// Euler Gamma function on C minus the nonpositive integers.
/// Lanczos approximation (15-term, g = 607/128) with the reflection formula
/// for Re z < 0.5; relative error below 1e-13 for |Re z|, |Im z| <= 20.
Cplx gamma(Cplx z);

/// log Gamma on the principal branch region Re z >= 0.5 (used internally
/// where Gamma itself would overflow).
Cplx log_gamma_right(Cplx z);

/// Generalized binomial coefficient binom(z, k) = Gamma(z+1) / (k! Gamma(z-k+1)),
/// computed by the product recurrence binom(z,k) = binom(z,k-1) (z-k+1)/k.
Cplx binomial(Cplx z, unsigned k);

/// binom(z, k) for k = 0..max_k in one pass.
std::vector<Cplx> binomial_sequence(Cplx z, std::size_t max_k);

/// Truncated power x_+^e: exp(e ln x) for x > 0, identically 0 for x <= 0.
Cplx truncated_power(double x, Cplx exponent);

/// Kummer's confluent hypergeometric M(a, b; x) by direct series summation.
/// The series stops once |term| < 1e-15 |sum| holds for three consecutive
/// terms; arguments with Re x < 0 are routed through the Kummer
/// transformation M(a,b;x) = e^x M(b-a, b; -x) to avoid cancellation.
/// Throws std::domain_error if b is a nonpositive integer, numeric_error if
/// the term budget (10000) is exhausted.
Cplx kummer_m(Cplx a, Cplx b, Cplx x);

/// Terminating Gauss hypergeometric 2F1(-k, b, c; x): the exact finite sum
/// of k+1 terms. Throws std::domain_error when a Pochhammer factor of c
/// vanishes inside the summation range.
Cplx gauss_2f1_terminating(unsigned k, Cplx b, Cplx c, Cplx x);

} // namespace expspline
