#include "expspline/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace expspline {

namespace {

double omega_abs(double w) { return std::abs(omega_symbol(w, 0.0)); }

// Certified bound on sum_{|k| > K} |E^_z^a(w + 2 pi k)|^2:
// |E^(u)| <= (2/|u|)^{Re z} e^{pi |Im z|}  (numerator <= 2, |Arg Omega| < pi)
// and |w + 2 pi k| >= 2 pi (|k| - ceil(|w|/2pi) - 1), then integral comparison.
double riesz_tail_envelope(const SplineSpec& spec, double omega, std::size_t k_max) {
    const double s = spec.order().real();
    const double modal = std::exp(2.0 * M_PI * std::abs(spec.order().imag()));
    const double shift = std::ceil(std::abs(omega) / (2.0 * M_PI));
    const double km = static_cast<double>(k_max) - shift;
    if (km < 2.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::pow(2.0, 2.0 * s) * modal * std::pow(2.0 * M_PI, -2.0 * s) *
           std::pow(km - 1.0, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
}

} // namespace

BoundCheckResult make_check(const std::string& name, std::size_t grid_size, double max_violation,
                            double slack) {
    BoundCheckResult r;
    r.name = name;
    r.grid_size = grid_size;
    r.max_violation = max_violation;
    r.passed = max_violation <= slack;
    return r;
}

BoundCheckResult check_cos_cosh_lemma(const std::vector<double>& x_grid) {
    double worst = 0.0;
    for (double x : x_grid) {
        double lo, hi;
        if (std::abs(x) < 1e-6) {
            lo = 0.5 - x * x / 24.0; // Taylor limits near the removable point
            hi = 0.5 + x * x / 24.0;
        } else {
            lo = (1.0 - std::cos(x)) / (x * x);
            hi = (std::cosh(x) - 1.0) / (x * x);
        }
        worst = std::max(worst, lo - 0.5);
        worst = std::max(worst, 0.5 - hi);
    }
    return make_check("cos-cosh-lemma", x_grid.size(), worst);
}

BoundCheckResult check_omega_sandwich(double a, const std::vector<double>& omega_grid) {
    if (!(a > 0.0)) throw std::domain_error("check_omega_sandwich: a must be > 0");
    const double lo_factor = std::exp(-a / 2.0);
    double worst = 0.0;
    for (double w : omega_grid) {
        const double base = omega_abs(w);
        const double val = std::abs(omega_symbol(w, a));
        worst = std::max(worst, lo_factor * base - val);
        worst = std::max(worst, val - (1.0 + base));
    }
    return make_check("omega-sandwich(a=" + std::to_string(a) + ")", omega_grid.size(), worst);
}

BoundCheckResult check_spline_sandwich(const SplineSpec& spec, const std::vector<double>& omega_grid) {
    if (!(spec.a > 0.0)) throw std::domain_error("check_spline_sandwich: a must be > 0");
    const double rez = spec.order().real();
    const double imz = spec.order().imag();
    const double lo = std::exp(-spec.a * rez / 2.0 - 2.0 * M_PI * std::abs(imz));
    const double hi = std::pow(2.0, rez) * std::exp(2.0 * M_PI * std::abs(imz));
    const SplineSpec b_spec(spec.z, 0.0);
    double worst = 0.0;
    for (double w : omega_grid) {
        const double bz = std::abs(fourier_transform(b_spec, w));
        const double ez = std::abs(fourier_transform(spec, w));
        worst = std::max(worst, lo * bz - ez);
        worst = std::max(worst, ez - (1.0 + hi * bz));
    }
    return make_check("spline-sandwich", omega_grid.size(), worst);
}

BoundCheckResult check_spectrum_factorization(const SplineSpec& spec,
                                              const std::vector<double>& omega_grid) {
    const SplineSpec real_spec(Cplx(spec.order().real(), 0.0), spec.a);
    const double imz = spec.order().imag();
    double worst = 0.0;
    for (double w : omega_grid) {
        const Cplx om = omega_symbol(w, spec.a);
        if (std::abs(om) == 0.0) continue;
        const double lhs = std::abs(fourier_transform(spec, w));
        const double rhs = std::abs(fourier_transform(real_spec, w)) * std::exp(-imz * std::arg(om));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return make_check("spectrum-factorization", omega_grid.size(), worst);
}

CircleAsymptoticsResult check_circle_asymptotics(const std::vector<double>& a_values) {
    CircleAsymptoticsResult res;
    double worst_identity = 0.0;
    double worst_c = 0.0;
    std::size_t n_pts = 0;
    for (double a : a_values) {
        if (!(a > 0.0)) throw std::domain_error("check_circle_asymptotics: a must be > 0");
        double dev = 0.0;
        for (long i = -200000; i <= 200000; ++i) {
            const double w = static_cast<double>(i) * 1e-3;
            auto [f, g] = omega_real_imag(w, a);
            const double lhs = (f - 1.0 / (2.0 * a)) * (f - 1.0 / (2.0 * a)) + g * g;
            const double circle = 1.0 / (4.0 * a * a);
            const double correction = std::exp(-a) *
                (-w * std::sin(w) / a + std::exp(-a) - std::cos(w)) / (a * a + w * w);
            worst_identity = std::max(worst_identity, std::abs(lhs - circle - correction));
            dev = std::max(dev, std::abs(lhs - circle));
            ++n_pts;
        }
        res.deviations.push_back(dev);
        const double envelope = (std::exp(-2.0 * a) + std::exp(-a)) / (a * a);
        worst_c = std::max(worst_c, dev / envelope);
    }
    res.identity = make_check("circle-identity", n_pts, worst_identity, 1e-13);
    res.fitted_c = worst_c;
    // envelope check passes when the fitted constant stays bounded across the sweep
    res.envelope = make_check("circle-envelope", n_pts, worst_c, 100.0);
    return res;
}

RieszSum riesz_sum(const SplineSpec& spec, double omega, std::size_t k_max) {
    const double rez = spec.order().real();
    const double imz = spec.order().imag();
    RieszSum out;
    // |E^(u)|^2 = e^{2(Re z ln|Omega| - Im z Arg Omega)}
    for (long k = -static_cast<long>(k_max); k <= static_cast<long>(k_max); ++k) {
        const double u = omega + 2.0 * M_PI * static_cast<double>(k);
        const Cplx om = omega_symbol(u, spec.a);
        const double r = std::abs(om);
        if (r == 0.0) continue;
        out.value += std::exp(2.0 * (rez * std::log(r) - imz * std::arg(om)));
    }
    out.tail_bound = riesz_tail_envelope(spec, omega, k_max);
    return out;
}

std::size_t riesz_k_max(const SplineSpec& spec, double tol, std::size_t cap) {
    std::size_t lo = 4, hi = cap;
    if (riesz_tail_envelope(spec, 2.0 * M_PI, cap) > tol) return cap;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (riesz_tail_envelope(spec, 2.0 * M_PI, mid) <= tol)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

} // namespace expspline
