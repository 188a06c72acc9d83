#include "expspline/special_functions.hpp"

#include <cmath>
#include <limits>

namespace expspline {

namespace {

// Lanczos coefficients, g = 607/128 (Godfrey's 15-term set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5};

bool is_nonpositive_integer(Cplx z) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    return r <= 0.0 && r == std::floor(r);
}

Cplx lanczos_sum(Cplx z) {
    // z already shifted so the series is evaluated at z (i.e. argument - 1).
    Cplx s = kLanczos[0];
    for (int k = 1; k < 15; ++k) s += kLanczos[k] / (z + static_cast<double>(k));
    return s;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110;

} // namespace

Cplx gamma(Cplx z) {
    if (is_nonpositive_integer(z))
        throw std::domain_error("gamma: pole at z = " + std::to_string(z.real()));
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        Cplx s = std::sin(M_PI * z);
        if (s == Cplx(0.0, 0.0))
            throw std::domain_error("gamma: pole encountered via reflection");
        return M_PI / (s * gamma(1.0 - z));
    }
    Cplx zm1 = z - 1.0;
    Cplx t = zm1 + kLanczosG + 0.5;
    return kSqrtTwoPi * std::pow(t, zm1 + 0.5) * std::exp(-t) * lanczos_sum(zm1);
}

Cplx log_gamma_right(Cplx z) {
    if (z.real() < 0.5)
        throw std::domain_error("log_gamma_right requires Re z >= 0.5");
    Cplx zm1 = z - 1.0;
    Cplx t = zm1 + kLanczosG + 0.5;
    return 0.5 * std::log(kTwoPi) + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

Cplx binomial(Cplx z, unsigned k) {
    Cplx b = 1.0;
    for (unsigned j = 1; j <= k; ++j) b *= (z - static_cast<double>(j) + 1.0) / static_cast<double>(j);
    return b;
}

std::vector<Cplx> binomial_sequence(Cplx z, std::size_t max_k) {
    std::vector<Cplx> out(max_k + 1);
    out[0] = 1.0;
    for (std::size_t k = 1; k <= max_k; ++k)
        out[k] = out[k - 1] * (z - static_cast<double>(k) + 1.0) / static_cast<double>(k);
    return out;
}

Cplx truncated_power(double x, Cplx exponent) {
    if (x <= 0.0) return 0.0;
    return std::exp(exponent * std::log(x));
}

Cplx kummer_m(Cplx a, Cplx b, Cplx x) {
    if (is_nonpositive_integer(b))
        throw std::domain_error("kummer_m: b is a nonpositive integer");
    if (x.real() < 0.0) {
        // Kummer transformation keeps the series terms single-signed in
        // magnitude and avoids the e^{-|x|}-scale cancellation.
        return std::exp(x) * kummer_m(b - a, b, -x);
    }
    constexpr int kBudget = 10000;
    Cplx term = 1.0, sum = 1.0;
    int settled = 0;
    for (int n = 0; n < kBudget; ++n) {
        term *= (a + static_cast<double>(n)) * x /
                ((b + static_cast<double>(n)) * static_cast<double>(n + 1));
        sum += term;
        if (std::abs(term) < 1e-15 * std::abs(sum)) {
            if (++settled >= 3) return sum;
        } else {
            settled = 0;
        }
    }
    throw numeric_error("kummer_m: series did not converge within 10000 terms (|x| = " +
                        std::to_string(std::abs(x)) + ")");
}

Cplx gauss_2f1_terminating(unsigned k, Cplx b, Cplx c, Cplx x) {
    Cplx term = 1.0, sum = 1.0;
    for (unsigned n = 0; n < k; ++n) {
        Cplx cn = c + static_cast<double>(n);
        if (std::abs(cn) == 0.0)
            throw std::domain_error("gauss_2f1_terminating: Pochhammer zero in denominator at n = " +
                                    std::to_string(n));
        term *= (static_cast<double>(n) - static_cast<double>(k)) * (b + static_cast<double>(n)) * x /
                (cn * static_cast<double>(n + 1));
        sum += term;
    }
    return sum;
}

} // namespace expspline
