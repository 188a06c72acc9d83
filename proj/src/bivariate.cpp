#include "expspline/bivariate.hpp"

#include <cmath>

#include "expspline/special_functions.hpp"

namespace expspline {

namespace {

constexpr double kSameParameterEps = 1e-14;

} // namespace

Cplx bivariate_fourier(const BivariateSpec& spec, double omega) {
    return fourier_transform(SplineSpec(spec.z, spec.a), omega) *
           fourier_transform(SplineSpec(spec.zeta, spec.b), omega);
}

Cplx bivariate_time_kummer(const BivariateSpec& spec, double x, std::size_t terms) {
    if (x <= 0.0) return 0.0;
    const Cplx z = spec.z.value(), zeta = spec.zeta.value();
    if (std::abs(spec.a - spec.b) < kSameParameterEps)
        return evaluate_time(SplineSpec(z + zeta, spec.a), x);
    const double d = spec.a - spec.b;
    const double w = std::exp(-d);
    const std::size_t kmax = std::min(terms, static_cast<std::size_t>(x) + 1);
    const auto bz = binomial_sequence(z, kmax);
    const auto bzeta = binomial_sequence(zeta, kmax);
    const Cplx zzm1 = z + zeta - 1.0;
    Cplx sum = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k) {
        const double u = x - static_cast<double>(k);
        if (u <= 0.0) break;
        Cplx bracket = 0.0;
        double wl = 1.0;
        for (std::size_t l = 0; l <= k; ++l) {
            bracket += bz[l] * bzeta[k - l] * wl;
            wl *= w;
        }
        const Cplx term = bracket * (k % 2 ? -1.0 : 1.0) *
                          kummer_m(z, z + zeta, Cplx(-d * u)) * std::exp(zzm1 * std::log(u));
        sum += term;
    }
    return sum * std::exp(-spec.b * x) / gamma(z + zeta);
}

Cplx bivariate_time_2f1(const BivariateSpec& spec, double x, std::size_t terms,
                        bool* degenerate_flag) {
    if (degenerate_flag) *degenerate_flag = false;
    if (x <= 0.0) return 0.0;
    const Cplx z = spec.z.value(), zeta = spec.zeta.value();
    if (std::abs(spec.a - spec.b) < kSameParameterEps)
        return evaluate_time(SplineSpec(z + zeta, spec.a), x);
    const double d = spec.a - spec.b;
    const Cplx w = std::exp(Cplx(-d));
    const std::size_t kmax = std::min(terms, static_cast<std::size_t>(x) + 1);
    const auto bz = binomial_sequence(z, kmax);
    const auto bzeta = binomial_sequence(zeta, kmax);
    const Cplx zzm1 = z + zeta - 1.0;
    Cplx sum = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k) {
        const double u = x - static_cast<double>(k);
        if (u <= 0.0) break;
        Cplx bracket;
        bool fell_back = false;
        try {
            bracket = bzeta[k] * gauss_2f1_terminating(static_cast<unsigned>(k), -z,
                                                       1.0 - static_cast<double>(k) + zeta, w);
        } catch (const std::domain_error&) {
            fell_back = true;
        }
        if (!fell_back && !(std::isfinite(bracket.real()) && std::isfinite(bracket.imag())))
            fell_back = true;
        if (fell_back) {
            if (degenerate_flag) *degenerate_flag = true;
            bracket = 0.0;
            Cplx wl = 1.0;
            for (std::size_t l = 0; l <= k; ++l) {
                bracket += bz[l] * bzeta[k - l] * wl;
                wl *= w;
            }
        }
        sum += bracket * (k % 2 ? -1.0 : 1.0) *
               kummer_m(z, z + zeta, Cplx(-d * u)) * std::exp(zzm1 * std::log(u));
    }
    return sum * std::exp(-spec.b * x) / gamma(z + zeta);
}

SampledFunction sample_bivariate(const BivariateSpec& spec, double x0, double dx, std::size_t n,
                                 bool use_2f1) {
    if (!(dx > 0.0) || n < 1) throw std::invalid_argument("sample_bivariate: need dx > 0 and n >= 1");
    const std::size_t terms = static_cast<std::size_t>(std::ceil(x0 + dx * static_cast<double>(n))) + 1;
    std::vector<Cplx> vals(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = x0 + static_cast<double>(k) * dx;
        vals[k] = use_2f1 ? bivariate_time_2f1(spec, x, terms) : bivariate_time_kummer(spec, x, terms);
    }
    return SampledFunction(x0, dx, std::move(vals));
}

} // namespace expspline
