#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "expspline/analysis.hpp"
#include "expspline/spline_core.hpp"
#include "expspline/types.hpp"

namespace expspline {

/// Low-pass filter mask of the two-scale relation. weights[k] =
/// 2^{-z} binom(z,k) e^{-a k}, so that
///
///   sum_k weights[k] e^{-i omega k} = G(omega) = ((1 + e^{-(a+i omega)})/2)^z
///
/// and the refinement relation reads E_z^{2a}(x) = 2 sum_k weights[k] E_z^a(2x - k).
/// tail_bound certifies sum_{k > L} |weights[k]|.
struct FilterCoefficients {
    std::vector<Cplx> weights;
    double a = 0.0;
    Cplx z;
    double tail_bound = 0.0;

    nlohmann::json to_json() const;
};

/// Wavelet built on E_z^a with its two-scale filter.
struct WaveletSpec {
    SplineSpec base;
    FilterCoefficients filter;
};

/// Periodization convention for the wavelet autocorrelation: unit shifts sum
/// |theta^(omega + k)|^2 over integers (period 1, the default); the angular
/// convention shifts by 2 pi k.
enum class Periodization { unit_shift, angular_two_pi };

/// Two-scale symbol G(omega) = ((1 + e^{-(a + i omega)})/2)^z linking
/// E^_z^{2a}(2 omega) = G(omega) E^_z^a(omega).
Cplx scale_symbol(const SplineSpec& spec, double omega);

/// Binomial mask of the two-scale symbol, truncated once the certified tail
/// drops below tol * 2^{Re z}.
FilterCoefficients lowpass_filter(const SplineSpec& spec, double tol);

WaveletSpec make_wavelet(const SplineSpec& spec, double tol = 1e-12);

/// Max over [x_min, x_max] (step) of |E_z^{2a}(x) - 2 sum_k w_k E_z^a(2x-k)|.
BoundCheckResult check_two_scale(const SplineSpec& spec, double x_min, double x_max, double step,
                                 double tol);

/// Conjugate-mirror wavelet symbol theta^(2 omega) = e^{-i omega}
/// conj(G(omega + pi)) E^_z^a(omega). Reduces to the classical spline
/// pre-wavelet at a = 0, integer z.
Cplx mother_wavelet_symbol(const WaveletSpec& w, double omega);

struct AutocorrelationValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// R_z^a(omega): periodization of |theta^|^2 under the chosen convention,
/// truncated at k_max with a certified envelope tail bound.
AutocorrelationValue autocorrelation(const WaveletSpec& w, double omega, std::size_t k_max,
                                     Periodization conv = Periodization::unit_shift);

/// Orthonormalized symbol psi^ = theta^ / sqrt(R). Throws numeric_error when
/// R falls below the degeneracy threshold 1e-10.
Cplx orthonormalized_wavelet_symbol(const WaveletSpec& w, double omega,
                                    Periodization conv = Periodization::unit_shift,
                                    std::size_t k_max = 3000);

} // namespace expspline
