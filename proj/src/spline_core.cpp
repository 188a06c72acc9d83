#include "expspline/spline_core.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "expspline/special_functions.hpp"

namespace expspline {

SampledFunction::SampledFunction(double x0_, double dx_, std::vector<Cplx> v)
    : x0(x0_), dx(dx_), values(std::move(v)) {
    if (!(dx > 0.0)) throw std::invalid_argument("SampledFunction: dx must be > 0");
    if (values.empty()) throw std::invalid_argument("SampledFunction: values must be non-empty");
    for (const Cplx& c : values)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("SampledFunction: values must be finite");
}

Cplx SampledFunction::integrate() const {
    if (values.size() < 2) return 0.0;
    Cplx s = 0.5 * (values.front() + values.back());
    for (std::size_t k = 1; k + 1 < values.size(); ++k) s += values[k];
    return s * dx;
}

void SampledFunction::write_csv(std::ostream& os) const {
    os << "x,re,im\n";
    char buf[96];
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid(k), values[k].real(),
                      values[k].imag());
        os << buf;
    }
}

nlohmann::json SampledFunction::to_json() const {
    nlohmann::json vals = nlohmann::json::array();
    for (const Cplx& c : values) vals.push_back({c.real(), c.imag()});
    return {{"x0", x0}, {"dx", dx}, {"values", std::move(vals)}};
}

SampledFunction SampledFunction::from_json(const nlohmann::json& j) {
    std::vector<Cplx> vals;
    vals.reserve(j.at("values").size());
    for (const auto& p : j.at("values")) vals.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return SampledFunction(j.at("x0").get<double>(), j.at("dx").get<double>(), std::move(vals));
}

Cplx omega_symbol(double omega, double a) {
    if (!(a >= 0.0)) throw std::domain_error("omega_symbol: a must be >= 0");
    const Cplx w(a, omega);
    const double r = std::abs(w);
    if (r < 1e-4) {
        // (1 - e^{-w})/w = sum_{n>=0} (-w)^n / (n+1)!
        Cplx term = 1.0, sum = 1.0;
        for (int n = 1; n <= 10; ++n) {
            term *= -w / static_cast<double>(n + 1);
            sum += term;
        }
        return sum;
    }
    return (1.0 - std::exp(-w)) / w;
}

std::pair<double, double> omega_real_imag(double omega, double a) {
    if (!(a > 0.0)) throw std::domain_error("omega_real_imag: a must be > 0");
    const double ea = std::exp(-a);
    const double den = a * a + omega * omega;
    const double f = (ea * omega * std::sin(omega) - ea * a * std::cos(omega) + a) / den;
    const double g = (a * ea * std::sin(omega) + ea * omega * std::cos(omega) - omega) / den;
    return {f, g};
}

Cplx fourier_transform(const SplineSpec& spec, double omega) {
    const Cplx om = omega_symbol(omega, spec.a);
    const double r = std::abs(om);
    // Near its zeros (a = 0, omega in 2 pi Z) the symbol approaches the
    // negative real axis through 0; the continuous continuation of Omega^z
    // there is 0, and |Omega|^{Re z} makes the branch choice irrelevant.
    if (r < 1e-9) return 0.0;
    if (!(std::abs(std::arg(om)) < M_PI - 1e-9))
        throw numeric_error("fourier_transform: symbol reached the branch cut at omega = " +
                            std::to_string(omega));
    return std::pow(om, spec.order());
}

TruncationPlan plan_truncation(const SplineSpec&, double x_max, double tol) {
    if (!(x_max > 0.0) || !(tol > 0.0))
        throw std::invalid_argument("plan_truncation: x_max and tol must be > 0");
    TruncationPlan plan;
    plan.terms = static_cast<std::size_t>(std::floor(x_max)) + 1; // terms l = 0..floor(x)
    plan.tail_bound = 0.0; // (x - l)_+ kills every term with l > x
    return plan;
}

TimeEvaluator::TimeEvaluator(const SplineSpec& spec)
    : spec_(spec), inv_gamma_z_(1.0 / gamma(spec.order())) {
    weights_.push_back(1.0);
}

void TimeEvaluator::ensure_terms(std::size_t l) const {
    const Cplx z = spec_.order();
    const double ea = std::exp(-spec_.a);
    while (weights_.size() <= l) {
        const double k = static_cast<double>(weights_.size());
        // binom(z,k)(-1)^k e^{-ka} from the previous weight
        weights_.push_back(weights_.back() * (z - k + 1.0) / k * (-ea));
    }
}

Cplx TimeEvaluator::operator()(double x) const {
    if (x <= 0.0) return 0.0;
    const std::size_t lmax = static_cast<std::size_t>(x);
    ensure_terms(lmax);
    const Cplx zm1 = spec_.order() - 1.0;
    Cplx s = 0.0;
    for (std::size_t l = 0; l <= lmax; ++l) {
        const double u = x - static_cast<double>(l);
        if (u <= 0.0) continue;
        s += weights_[l] * std::exp(-spec_.a * u + zm1 * std::log(u));
    }
    return s * inv_gamma_z_;
}

Cplx evaluate_time(const SplineSpec& spec, double x) { return TimeEvaluator(spec)(x); }

SampledFunction sample(const SplineSpec& spec, double x0, double dx, std::size_t n) {
    if (!(dx > 0.0) || n < 1) throw std::invalid_argument("sample: need dx > 0 and n >= 1");
    TimeEvaluator eval(spec);
    std::vector<Cplx> vals(n);
    for (std::size_t k = 0; k < n; ++k) vals[k] = eval(x0 + static_cast<double>(k) * dx);
    return SampledFunction(x0, dx, std::move(vals));
}

SampledFunction convolve_oracle(const SampledFunction& f, const SampledFunction& g) {
    if (f.dx != g.dx) throw std::invalid_argument("convolve_oracle: grids must share dx");
    const std::size_t n = f.size(), m = g.size();
    std::vector<Cplx> out(n + m - 1, Cplx(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const Cplx fi = f.values[i];
        if (fi == Cplx(0.0)) continue;
        for (std::size_t j = 0; j < m; ++j) out[i + j] += fi * g.values[j];
    }
    for (Cplx& v : out) v *= f.dx;
    return SampledFunction(f.x0 + g.x0, f.dx, std::move(out));
}

} // namespace expspline
