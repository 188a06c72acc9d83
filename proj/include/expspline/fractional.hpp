#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "expspline/analysis.hpp"
#include "expspline/spline_core.hpp"
#include "expspline/types.hpp"

namespace expspline {

/// Coefficients c_l of the delta train (D + aI)^z E_z^a = sum_l c_l delta(. - l),
/// c_l = binom(z,l) (-1)^l e^{-l a}, with a certified bound on the dropped tail.
struct DeltaTrain {
    Cplx z;
    double a = 0.0;
    std::vector<Cplx> coefficients;
    double tail_bound = 0.0;

    Cplx coefficient_sum() const;
    nlohmann::json to_json() const;
};

DeltaTrain delta_train(Cplx z, double a, std::size_t terms);
DeltaTrain delta_train(const SplineSpec& spec, std::size_t terms);

/// Backward exponential difference of complex order:
/// sum_{l=0}^{L} binom(z,l) (-1)^l e^{-l a} f(. - l), sampled. Integer shifts
/// must land on grid points (1/dx integer); samples left of the grid are
/// taken as zero. The order may sit anywhere the binomial weights make sense
/// (z = 1 gives the elementary difference f - e^{-a} f(. - 1)).
SampledFunction exp_difference(Cplx z, double a, const SampledFunction& f, std::size_t L);
SampledFunction exp_difference(const SplineSpec& spec, const SampledFunction& f, std::size_t L);

/// Fourier multiplier (a + i omega)^z of the operator (D + aI)^z, principal
/// branch (Re(a + i omega) >= 0, so no branch crossing). At (a, omega) = (0, 0)
/// the continuous continuation is 0 for Re z > 0 and 1 for z = 0.
Cplx fractional_derivative_symbol(Cplx z, double a, double omega);

/// Apply (D + aI)^z to sampled data via the DFT: zero-pad to 4x length,
/// multiply by the symbol on signed bin frequencies, transform back.
/// Requires the data to have decayed below 1e-8 at the right edge.
SampledFunction apply_fractional(Cplx z_op, double a, const SampledFunction& f);

/// Fourier-domain residual of (D + aI)^z E_z^a = sum c_l delta(. - l):
/// max over the grid of |(a+iw)^z Omega(w,a)^z - sum_{l<=L} c_l e^{-iwl}|.
/// Passes when the residual stays below tol plus the certified binomial tail.
BoundCheckResult verify_delta_identity(const SplineSpec& spec, std::size_t L,
                                       const std::vector<double>& omega_grid, double tol);

/// Convolution kernel K_z(x) = x_+^{z-1} / Gamma(z), Re z > 0.
Cplx kernel_kz(Cplx z, double x);

} // namespace expspline
