#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "expspline/types.hpp"

namespace expspline {

/// Uniformly sampled complex-valued function: values[k] lives at x0 + k dx.
/// The interchange format between time-domain, Fourier-domain and oracle
/// computations.
struct SampledFunction {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<Cplx> values;

    SampledFunction() = default;
    SampledFunction(double x0_, double dx_, std::vector<Cplx> v);

    std::size_t size() const { return values.size(); }
    double grid(std::size_t k) const { return x0 + static_cast<double>(k) * dx; }

    /// Trapezoid integral over the sampled range.
    Cplx integrate() const;

    /// CSV with header "x,re,im", 17 significant digits.
    void write_csv(std::ostream& os) const;

    /// JSON shape {x0, dx, values: [[re, im], ...]}; round-trips bit-exactly.
    nlohmann::json to_json() const;
    static SampledFunction from_json(const nlohmann::json& j);
};

/// Truncation of the time-domain series on [0, x_max]. Terms beyond
/// ceil(x_max) are identically zero by the support of (x - l)_+, so the
/// recorded tail bound is exact (zero) rather than an estimate.
struct TruncationPlan {
    std::size_t terms = 1;
    double tail_bound = 0.0;
};

/// Omega(omega, a) = (1 - e^{-(a + i omega)}) / (a + i omega), the elementary
/// Fourier symbol. Continuous continuation 1 at the removable singularity;
/// a Taylor series is used for |a + i omega| < 1e-4.
Cplx omega_symbol(double omega, double a);

/// Closed-form real and imaginary parts (f, g) of Omega(omega, a), a > 0.
std::pair<double, double> omega_real_imag(double omega, double a);

/// Fourier transform Omega(omega, a)^z on the principal branch. The symbol
/// never meets the negative real axis for a >= 0, so the branch is globally
/// consistent; this is asserted at runtime (|Arg Omega| < pi - 1e-9).
Cplx fourier_transform(const SplineSpec& spec, double omega);

/// Number of series terms needed on [0, x_max]; exact by compact support of
/// each term.
TruncationPlan plan_truncation(const SplineSpec& spec, double x_max, double tol);

/// Time-domain value E_z^a(x) from the series
/// (1/Gamma(z)) sum_l binom(z,l) (-1)^l e^{-l a} e_+^{-a(x-l)} (x-l)_+^{z-1}.
Cplx evaluate_time(const SplineSpec& spec, double x);

/// Series evaluator with cached binomial weights; sample() uses this, and the
/// difference/bivariate modules reuse the weight cache.
class TimeEvaluator {
public:
    explicit TimeEvaluator(const SplineSpec& spec);
    Cplx operator()(double x) const;
    const SplineSpec& spec() const { return spec_; }

private:
    void ensure_terms(std::size_t l) const;
    SplineSpec spec_;
    Cplx inv_gamma_z_;
    mutable std::vector<Cplx> weights_; // binom(z,l) (-1)^l e^{-l a}
};

/// values[k] = E_z^a(x0 + k dx).
SampledFunction sample(const SplineSpec& spec, double x0, double dx, std::size_t n);

/// Discrete convolution scaled by dx (trapezoid-consistent when the inputs
/// carry trapezoid-consistent samples). Output origin f.x0 + g.x0, length
/// |f| + |g| - 1. Throws std::invalid_argument on mismatched dx.
SampledFunction convolve_oracle(const SampledFunction& f, const SampledFunction& g);

} // namespace expspline
