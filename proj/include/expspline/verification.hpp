#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "expspline/analysis.hpp"
#include "expspline/multiresolution.hpp"
#include "expspline/types.hpp"

namespace expspline {

/// The spec matrix every sweep-style suite runs over:
/// Re z in {1.2, 2, 2.5, 4} x Im z in {0, 1, -1} x a in {0, 0.5, 1, 3}.
const std::vector<SplineSpec>& test_matrix();

std::string spec_label(const SplineSpec& spec);

/// DFT of time samples on [0, X) at step dx versus the Fourier transform on
/// the matched (signed) bin frequencies; reports the max abs deviation.
BoundCheckResult fourier_consistency_check(const SplineSpec& spec, double x_max = 40.0,
                                           double dx = 1.0 / 64.0, double tol = 1e-5);

/// Trapezoid integral of samples on [0, X] versus the partition constant
/// ((1 - e^{-a})/a)^z.
BoundCheckResult partition_check(const SplineSpec& spec, double x_max = 60.0,
                                 double dx = 1.0 / 128.0, double tol = 1e-4);

/// Orthonormality of the wavelet translates by quadrature: for k = 0, 1, 2,
/// <psi, psi(. - k)> is evaluated as the Fourier-side integral of
/// |psi^(w)|^2 against the modulation matching the periodization convention,
/// over [-W, W] with step h. Reports max_k |Q_k - delta_k0|.
BoundCheckResult wavelet_orthonormality_check(const SplineSpec& spec, double tol = 1e-6,
                                              double half_width = 1200.0, double step = 1.0 / 64.0,
                                              Periodization conv = Periodization::unit_shift);

std::vector<BoundCheckResult> suite_inequalities();
std::vector<BoundCheckResult> suite_fourier_consistency();
std::vector<BoundCheckResult> suite_two_scale();
std::vector<BoundCheckResult> suite_riesz();
std::vector<BoundCheckResult> suite_wavelet();
std::vector<BoundCheckResult> suite_delta_identity();
std::vector<BoundCheckResult> suite_bivariate();

/// Per-suite verification outcome, serialized by the CLI.
struct VerificationReport {
    std::string suite;
    std::vector<BoundCheckResult> checks;
    double wall_time_s = 0.0;
    nlohmann::json config_echo;

    bool all_passed() const;
    nlohmann::json to_json() const;
};

/// Known suite names: inequalities, fourier-consistency, two-scale, riesz,
/// wavelet, delta-identity, bivariate, all.
VerificationReport run_suite(const std::string& name);

} // namespace expspline
