#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "expspline/spline_core.hpp"
#include "expspline/types.hpp"

namespace expspline {

/// Outcome of one pointwise bound/identity verification.
struct BoundCheckResult {
    std::string name;
    std::size_t grid_size = 0;
    double max_violation = 0.0; // max over the grid of (lhs - rhs)_+ style excess
    bool passed = false;

    nlohmann::json to_json() const {
        return {{"name", name}, {"grid_size", grid_size}, {"max_violation", max_violation},
                {"passed", passed}};
    }
};

/// Default slack for exact inequalities/identities checked in floating point.
constexpr double kExactSlack = 1e-12;

BoundCheckResult make_check(const std::string& name, std::size_t grid_size, double max_violation,
                            double slack = kExactSlack);

/// (1 - cos x)/x^2 <= 1/2 <= (cosh x - 1)/x^2, with the limit value 1/2 at 0.
BoundCheckResult check_cos_cosh_lemma(const std::vector<double>& x_grid);

/// e^{-a/2} |Omega(w)| <= |Omega(w, a)| <= 1 + |Omega(w)| for a > 0.
BoundCheckResult check_omega_sandwich(double a, const std::vector<double>& omega_grid);

/// e^{-a Re z / 2 - 2 pi |Im z|} |B_z^| <= |E_z^a^| <= 1 + 2^{Re z} e^{2 pi |Im z|} |B_z^|.
BoundCheckResult check_spline_sandwich(const SplineSpec& spec, const std::vector<double>& omega_grid);

/// Modulus factorization |E_z^a^| = |E_{Re z}^a^| e^{-Im z Arg Omega(w,a)}.
/// (The sign on Im z is forced by |w^z| = |w|^{Re z} e^{-Im z Arg w}.)
BoundCheckResult check_spectrum_factorization(const SplineSpec& spec,
                                              const std::vector<double>& omega_grid);

struct CircleAsymptoticsResult {
    BoundCheckResult identity;   // exact algebraic identity residual
    BoundCheckResult envelope;   // deviation bounded by C (e^{-2a} + e^{-a}) / a^2
    double fitted_c = 0.0;
    std::vector<double> deviations; // max deviation per a value, in input order
};

/// Exact circle identity of (f - 1/2a)^2 + g^2 plus the large-a envelope with
/// a fitted constant.
CircleAsymptoticsResult check_circle_asymptotics(const std::vector<double>& a_values);

struct RieszSum {
    double value = 0.0;      // truncated sum_{|k| <= k_max} |E^(w + 2 pi k)|^2
    double tail_bound = 0.0; // certified envelope bound on the omitted tail
};

/// Periodized squared modulus of the Fourier transform. The truncated value
/// is a lower bound (all terms >= 0); value + tail_bound is a certified upper
/// bound via |E^(u)| <= (1 + |Omega(u)|)^{Re z} e^{2 pi |Im z|}, |Omega| <= 2/|u|.
RieszSum riesz_sum(const SplineSpec& spec, double omega, std::size_t k_max);

/// Smallest k_max whose certified tail bound falls below tol (capped).
std::size_t riesz_k_max(const SplineSpec& spec, double tol, std::size_t cap = 200000);

} // namespace expspline
