#include "expspline/fractional.hpp"

#include <algorithm>
#include <cmath>

#include "expspline/fft.hpp"
#include "expspline/special_functions.hpp"

namespace expspline {

namespace {

// Same certified envelope as the filter construction: geometric for a > 0,
// k^{-Re z - 1} integral comparison for a = 0.
double coefficient_tail_bound(Cplx z, double a, std::size_t L, std::size_t M) {
    Cplx b = 1.0;
    double partial = 0.0, last = 0.0;
    for (std::size_t k = 1; k <= M; ++k) {
        b *= (z - static_cast<double>(k) + 1.0) / static_cast<double>(k);
        last = std::abs(b) * std::exp(-a * static_cast<double>(k));
        if (k > L) partial += last;
        if (k > L && last < 1e-300) return partial;
    }
    if (last == 0.0) return partial;
    const double envelope = a > 0.0 ? 1.5 * last * std::exp(-a) / (1.0 - std::exp(-a))
                                    : 1.5 * last * static_cast<double>(M) / z.real();
    return partial + envelope;
}

} // namespace

Cplx DeltaTrain::coefficient_sum() const {
    Cplx s = 0.0;
    for (const Cplx& c : coefficients) s += c;
    return s;
}

nlohmann::json DeltaTrain::to_json() const {
    nlohmann::json c = nlohmann::json::array();
    for (const Cplx& v : coefficients) c.push_back({v.real(), v.imag()});
    return {{"z", {z.real(), z.imag()}}, {"a", a}, {"coefficients", std::move(c)},
            {"tail_bound", tail_bound}};
}

DeltaTrain delta_train(Cplx z, double a, std::size_t terms) {
    if (!(a >= 0.0)) throw std::domain_error("delta_train: a must be >= 0");
    DeltaTrain t;
    t.z = z;
    t.a = a;
    t.coefficients.resize(terms + 1);
    Cplx b = 1.0;
    t.coefficients[0] = 1.0;
    for (std::size_t k = 1; k <= terms; ++k) {
        b *= (z - static_cast<double>(k) + 1.0) / static_cast<double>(k);
        t.coefficients[k] = b * (k % 2 ? -1.0 : 1.0) * std::exp(-a * static_cast<double>(k));
    }
    t.tail_bound = coefficient_tail_bound(z, a, terms, terms + 20000);
    return t;
}

DeltaTrain delta_train(const SplineSpec& spec, std::size_t terms) {
    return delta_train(spec.order(), spec.a, terms);
}

SampledFunction exp_difference(Cplx z, double a, const SampledFunction& f, std::size_t L) {
    const double inv_dx = 1.0 / f.dx;
    const double rounded = std::round(inv_dx);
    if (std::abs(inv_dx - rounded) > 1e-9 * inv_dx)
        throw std::invalid_argument("exp_difference: 1/dx must be an integer so unit shifts stay on-grid");
    const std::size_t stride = static_cast<std::size_t>(rounded);
    const DeltaTrain t = delta_train(z, a, L);
    std::vector<Cplx> out(f.size(), Cplx(0.0));
    for (std::size_t l = 0; l <= L; ++l) {
        const Cplx c = t.coefficients[l];
        if (c == Cplx(0.0)) continue;
        const std::size_t shift = l * stride;
        for (std::size_t k = shift; k < f.size(); ++k) out[k] += c * f.values[k - shift];
    }
    return SampledFunction(f.x0, f.dx, std::move(out));
}

SampledFunction exp_difference(const SplineSpec& spec, const SampledFunction& f, std::size_t L) {
    return exp_difference(spec.order(), spec.a, f, L);
}

Cplx fractional_derivative_symbol(Cplx z, double a, double omega) {
    if (!(a >= 0.0)) throw std::domain_error("fractional_derivative_symbol: a must be >= 0");
    if (a == 0.0 && omega == 0.0) {
        if (z == Cplx(0.0)) return 1.0;
        if (z.real() > 0.0) return 0.0;
        throw std::domain_error("fractional_derivative_symbol: pole at (a, omega) = (0, 0) for Re z < 0");
    }
    return std::pow(Cplx(a, omega), z);
}

SampledFunction apply_fractional(Cplx z_op, double a, const SampledFunction& f) {
    const double edge = std::abs(f.values.back());
    if (edge > 1e-8)
        throw std::invalid_argument("apply_fractional: right edge has not decayed (|f| = " +
                                    std::to_string(edge) + ")");
    const std::size_t n = f.size();
    const std::size_t m = 4 * n; // padding against circular wrap-around
    std::vector<Cplx> buf(m, Cplx(0.0));
    std::copy(f.values.begin(), f.values.end(), buf.begin());
    buf = dft(buf, -1);
    const double dw = 2.0 * M_PI / (static_cast<double>(m) * f.dx);
    for (std::size_t j = 0; j < m; ++j) {
        const double w = (j <= m / 2 ? static_cast<double>(j)
                                     : static_cast<double>(j) - static_cast<double>(m)) * dw;
        if (a == 0.0 && w == 0.0 && z_op.real() < 0.0) {
            // fractional integral of zero-mean data: the DC bin must vanish
            if (std::abs(buf[j]) * f.dx > 1e-6)
                throw std::invalid_argument("apply_fractional: fractional integral needs zero mean at a = 0");
            buf[j] = 0.0;
            continue;
        }
        buf[j] *= fractional_derivative_symbol(z_op, a, w);
    }
    buf = idft(buf);
    buf.resize(n);
    // phase reference: the multiplier acts as if the grid started at x = 0,
    // which holds because the DFT indexes samples relative to x0; restore x0.
    return SampledFunction(f.x0, f.dx, std::move(buf));
}

BoundCheckResult verify_delta_identity(const SplineSpec& spec, std::size_t L,
                                       const std::vector<double>& omega_grid, double tol) {
    const DeltaTrain t = delta_train(spec, L);
    const Cplx z = spec.order();
    double worst = 0.0;
    for (double w : omega_grid) {
        const Cplx lhs = fractional_derivative_symbol(z, spec.a, w) * fourier_transform(spec, w);
        Cplx rhs = 0.0;
        const Cplx e(std::cos(w), -std::sin(w)); // e^{-i w}
        Cplx ph = 1.0;
        for (std::size_t l = 0; l < t.coefficients.size(); ++l) {
            rhs += t.coefficients[l] * ph;
            ph *= e;
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return make_check("delta-identity", omega_grid.size(), worst, tol + t.tail_bound);
}

Cplx kernel_kz(Cplx z, double x) {
    if (!(z.real() > 0.0)) throw std::domain_error("kernel_kz: Re z must be > 0");
    if (x <= 0.0) return 0.0;
    return truncated_power(x, z - 1.0) / gamma(z);
}

} // namespace expspline
