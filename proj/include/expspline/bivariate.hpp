#pragma once

#include <cstddef>

#include "expspline/spline_core.hpp"
#include "expspline/types.hpp"

namespace expspline {

/// Fourier transform of the two-parameter spline:
/// Omega(w, a)^z Omega(w, b)^zeta.
Cplx bivariate_fourier(const BivariateSpec& spec, double omega);

/// Time-domain value of E_{(z,zeta)}^{(a,b)} by the Kummer-function closed form
///
///   (1/Gamma(z+zeta)) sum_k [sum_l binom(z,l) binom(zeta,k-l) e^{-l(a-b)}]
///       (-1)^k e^{-bx} M(z, z+zeta; -(a-b)(x-k)) (x-k)_+^{z+zeta-1}.
///
/// The a = b case collapses analytically (Vandermonde, M(.,.;0) = 1) to the
/// one-parameter spline E_{z+zeta}^a and is routed there.
Cplx bivariate_time_kummer(const BivariateSpec& spec, double x, std::size_t terms);

/// Same value with the bracket replaced by
/// binom(zeta,k) 2F1(-k, -z, 1-k+zeta; e^{-(a-b)}). When the Pochhammer
/// denominators degenerate (integer zeta below k), falls back to the
/// double-binomial bracket; *degenerate_flag reports the fallback.
Cplx bivariate_time_2f1(const BivariateSpec& spec, double x, std::size_t terms,
                        bool* degenerate_flag = nullptr);

/// Sampled grid of either form.
SampledFunction sample_bivariate(const BivariateSpec& spec, double x0, double dx, std::size_t n,
                                 bool use_2f1 = false);

} // namespace expspline
