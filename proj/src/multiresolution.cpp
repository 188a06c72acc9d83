#include "expspline/multiresolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "expspline/special_functions.hpp"

namespace expspline {

namespace {

// Envelope bound on sum_{k > K} |binom(z,k)| e^{-a k} anchored at the term
// magnitude at K: geometric for a > 0, integral comparison of k^{-Re z - 1}
// for a = 0 (asymptotic envelope, 1.5x safety factor).
double binomial_tail_envelope(double term_at_k, std::size_t k, Cplx z, double a) {
    if (term_at_k == 0.0) return 0.0;
    if (a > 0.0) return 1.5 * term_at_k * std::exp(-a) / (1.0 - std::exp(-a));
    return 1.5 * term_at_k * static_cast<double>(k) / z.real();
}

// Certified sum_{k > L} |binom(z,k)| e^{-a k}: exact partial sum out to M,
// envelope beyond.
double binomial_tail_bound(Cplx z, double a, std::size_t L, std::size_t M = 20000) {
    if (M < L + 2) M = L + 2;
    Cplx b = 1.0;
    double partial = 0.0;
    double last = 0.0;
    for (std::size_t k = 1; k <= M; ++k) {
        b *= (z - static_cast<double>(k) + 1.0) / static_cast<double>(k);
        last = std::abs(b) * std::exp(-a * static_cast<double>(k));
        if (k > L) partial += last;
        if (k > L && last < 1e-300) return partial;
    }
    return partial + binomial_tail_envelope(last, M, z, a);
}

} // namespace

nlohmann::json FilterCoefficients::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (const Cplx& c : weights) w.push_back({c.real(), c.imag()});
    return {{"z", {z.real(), z.imag()}}, {"a", a}, {"weights", std::move(w)},
            {"tail_bound", tail_bound}};
}

Cplx scale_symbol(const SplineSpec& spec, double omega) {
    const Cplx base = (1.0 + std::exp(-Cplx(spec.a, omega))) / 2.0;
    if (std::abs(base) == 0.0) return 0.0; // a = 0, omega odd multiple of pi, integer z limits
    return std::pow(base, spec.order());
}

FilterCoefficients lowpass_filter(const SplineSpec& spec, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("lowpass_filter: tol must be > 0");
    const Cplx z = spec.order();
    const double target = tol * std::pow(2.0, z.real());
    const Cplx two_pow = std::exp(-z * std::log(2.0)); // 2^{-z}
    FilterCoefficients fc;
    fc.a = spec.a;
    fc.z = z;
    Cplx b = 1.0;
    fc.weights.push_back(two_pow);
    std::size_t L = 0;
    constexpr std::size_t kCap = 100000;
    for (std::size_t k = 1; k < kCap; ++k) {
        b *= (z - static_cast<double>(k) + 1.0) / static_cast<double>(k);
        const double term = std::abs(b) * std::exp(-spec.a * static_cast<double>(k));
        fc.weights.push_back(two_pow * b * std::exp(-spec.a * static_cast<double>(k)));
        L = k;
        if (k >= 4 && binomial_tail_envelope(term, k, z, spec.a) < target) break;
    }
    fc.tail_bound = std::abs(two_pow) * binomial_tail_bound(z, spec.a, L, L + 20000);
    return fc;
}

WaveletSpec make_wavelet(const SplineSpec& spec, double tol) {
    return WaveletSpec{spec, lowpass_filter(spec, tol)};
}

BoundCheckResult check_two_scale(const SplineSpec& spec, double x_min, double x_max, double step,
                                 double tol) {
    const SplineSpec doubled(spec.z, 2.0 * spec.a);
    TimeEvaluator coarse(doubled);
    TimeEvaluator fine(spec);
    const std::size_t terms = static_cast<std::size_t>(std::ceil(2.0 * x_max)) + 1;
    const auto binom = binomial_sequence(spec.order(), terms);
    const Cplx two_pow = std::exp((1.0 - spec.order()) * std::log(2.0)); // 2^{1-z}
    double worst = 0.0;
    std::size_t n = 0;
    for (double x = x_min; x <= x_max + 0.5 * step; x += step) {
        Cplx rhs = 0.0;
        for (std::size_t k = 0; k <= terms; ++k) {
            const double y = 2.0 * x - static_cast<double>(k);
            if (y <= 0.0) break; // later k only shift further right of support
            rhs += binom[k] * std::exp(-spec.a * static_cast<double>(k)) * fine(y);
        }
        rhs *= two_pow;
        worst = std::max(worst, std::abs(coarse(x) - rhs));
        ++n;
    }
    return make_check("two-scale", n, worst, tol);
}

Cplx mother_wavelet_symbol(const WaveletSpec& w, double omega) {
    const double half = omega / 2.0;
    return std::exp(Cplx(0.0, -half)) * std::conj(scale_symbol(w.base, half + M_PI)) *
           fourier_transform(w.base, half);
}

AutocorrelationValue autocorrelation(const WaveletSpec& w, double omega, std::size_t k_max,
                                     Periodization conv) {
    const double period = conv == Periodization::unit_shift ? 1.0 : 2.0 * M_PI;
    AutocorrelationValue out;
    for (long k = -static_cast<long>(k_max); k <= static_cast<long>(k_max); ++k) {
        const double u = omega + period * static_cast<double>(k);
        const double m = std::abs(mother_wavelet_symbol(w, u));
        out.value += m * m;
    }
    // |theta^(u)| <= Gmax (4/|u|)^{Re z} e^{pi |Im z|} with Gmax <= e^{pi |Im z|};
    // |u| >= period (k_max - |omega|/period) on the omitted shifts.
    const double s = w.base.order().real();
    const double modal = std::exp(2.0 * M_PI * std::abs(w.base.order().imag()));
    const double reach = period * (static_cast<double>(k_max) - std::abs(omega) / period - 1.0);
    if (reach > 4.0) {
        out.tail_bound = 2.0 * modal * modal * std::pow(4.0, 2.0 * s) *
                         std::pow(reach, 1.0 - 2.0 * s) / ((2.0 * s - 1.0) * period);
    } else {
        out.tail_bound = std::numeric_limits<double>::infinity();
    }
    return out;
}

Cplx orthonormalized_wavelet_symbol(const WaveletSpec& w, double omega, Periodization conv,
                                    std::size_t k_max) {
    constexpr double kDegenerate = 1e-10;
    const AutocorrelationValue r = autocorrelation(w, omega, k_max, conv);
    if (!(r.value > kDegenerate))
        throw numeric_error("orthonormalized_wavelet_symbol: R degenerate at omega = " +
                            std::to_string(omega));
    return mother_wavelet_symbol(w, omega) / std::sqrt(r.value);
}

} // namespace expspline
