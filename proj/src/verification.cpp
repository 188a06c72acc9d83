#include "expspline/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "expspline/bivariate.hpp"
#include "expspline/fft.hpp"
#include "expspline/fractional.hpp"
#include "expspline/special_functions.hpp"

namespace expspline {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

std::vector<double> seeded_random_grid(double lo, double hi, std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> g(n);
    for (double& v : g) v = dist(rng);
    return g;
}

} // namespace

const std::vector<SplineSpec>& test_matrix() {
    static const std::vector<SplineSpec> matrix = [] {
        std::vector<SplineSpec> m;
        for (double rez : {1.2, 2.0, 2.5, 4.0})
            for (double imz : {0.0, 1.0, -1.0})
                for (double a : {0.0, 0.5, 1.0, 3.0}) m.emplace_back(Cplx(rez, imz), a);
        return m;
    }();
    return matrix;
}

std::string spec_label(const SplineSpec& spec) {
    const Cplx z = spec.order();
    std::string s = "z=" + fmt_double(z.real());
    if (z.imag() > 0)
        s += "+" + fmt_double(z.imag()) + "i";
    else if (z.imag() < 0)
        s += fmt_double(z.imag()) + "i";
    s += ",a=" + fmt_double(spec.a);
    return s;
}

BoundCheckResult fourier_consistency_check(const SplineSpec& spec, double x_max, double dx,
                                           double tol) {
    const std::size_t n = static_cast<std::size_t>(std::llround(x_max / dx));
    SampledFunction f = sample(spec, 0.0, dx, n);
    std::vector<Cplx> bins = dft(f.values, -1);
    const double dw = 2.0 * M_PI / (static_cast<double>(n) * dx);
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w = (j <= n / 2 ? static_cast<double>(j)
                                     : static_cast<double>(j) - static_cast<double>(n)) * dw;
        worst = std::max(worst, std::abs(bins[j] * dx - fourier_transform(spec, w)));
    }
    return make_check("fourier-consistency(" + spec_label(spec) + ")", n, worst, tol);
}

BoundCheckResult partition_check(const SplineSpec& spec, double x_max, double dx, double tol) {
    const std::size_t n = static_cast<std::size_t>(std::llround(x_max / dx)) + 1;
    SampledFunction f = sample(spec, 0.0, dx, n);
    const Cplx expect = fourier_transform(spec, 0.0);
    const double err = std::abs(f.integrate() - expect);
    return make_check("partition(" + spec_label(spec) + ")", n, err, tol);
}

BoundCheckResult wavelet_orthonormality_check(const SplineSpec& spec, double tol, double half_width,
                                              double step, Periodization conv) {
    const WaveletSpec w = make_wavelet(spec, 1e-8);
    const double period = conv == Periodization::unit_shift ? 1.0 : 2.0 * M_PI;
    // psi^ = theta^ / sqrt(R(w mod period)); R sampled once per residue class.
    const std::size_t n_res = static_cast<std::size_t>(std::llround(period / step));
    if (std::abs(n_res * step - period) > 1e-12)
        throw std::invalid_argument("wavelet_orthonormality_check: step must divide the period");
    std::vector<double> r_table(n_res);
    for (std::size_t i = 0; i < n_res; ++i) {
        const double residue = (static_cast<double>(i) + 0.5) * step;
        r_table[i] = autocorrelation(w, residue, 3000, conv).value;
        if (!(r_table[i] > 1e-10))
            throw numeric_error("wavelet_orthonormality_check: degenerate R");
    }
    const long n_nodes = 2 * static_cast<long>(std::llround(half_width / step));
    const double mod_freq = 2.0 * M_PI / period; // modulation matching translation by 1
    Cplx q0 = 0.0, q1 = 0.0, q2 = 0.0;
    for (long j = 0; j < n_nodes; ++j) {
        const double omega = -half_width + (static_cast<double>(j) + 0.5) * step;
        const double m = std::abs(mother_wavelet_symbol(w, omega));
        const double p2 = m * m / r_table[static_cast<std::size_t>(j) % n_res];
        const double ph = mod_freq * omega;
        q0 += p2;
        q1 += p2 * Cplx(std::cos(ph), std::sin(ph));
        q2 += p2 * Cplx(std::cos(2 * ph), std::sin(2 * ph));
    }
    const double norm = step / period;
    double worst = std::abs(q0 * norm - 1.0);
    worst = std::max(worst, std::abs(q1 * norm));
    worst = std::max(worst, std::abs(q2 * norm));
    return make_check("wavelet-orthonormality(" + spec_label(spec) + ")",
                      static_cast<std::size_t>(n_nodes), worst, tol);
}

std::vector<BoundCheckResult> suite_inequalities() {
    std::vector<BoundCheckResult> out;
    out.push_back(check_cos_cosh_lemma(seeded_random_grid(-50.0, 50.0, 100000, 20240701u)));
    for (double a : {0.1, 1.0, 10.0})
        out.push_back(check_omega_sandwich(a, uniform_grid(-100.0, 100.0, 100000)));
    const auto sweep = uniform_grid(-100.0, 100.0, 100000);
    for (double rez : {1.2, 2.0, 2.5, 4.0})
        for (double imz : {0.0, 1.0, -1.0})
            for (double a : {0.1, 1.0, 10.0}) {
                const SplineSpec spec(Cplx(rez, imz), a);
                BoundCheckResult r = check_spline_sandwich(spec, sweep);
                r.name = "spline-sandwich(" + spec_label(spec) + ")";
                out.push_back(std::move(r));
            }
    for (const SplineSpec& spec : test_matrix()) {
        if (spec.order().imag() == 0.0) continue;
        BoundCheckResult r = check_spectrum_factorization(spec, uniform_grid(-60.0, 60.0, 20001));
        r.name = "spectrum-factorization(" + spec_label(spec) + ")";
        out.push_back(std::move(r));
    }
    CircleAsymptoticsResult circ = check_circle_asymptotics({10.0, 20.0, 30.0});
    out.push_back(circ.identity);
    out.push_back(circ.envelope);
    return out;
}

std::vector<BoundCheckResult> suite_fourier_consistency() {
    std::vector<BoundCheckResult> out;
    for (const SplineSpec& spec : test_matrix()) out.push_back(fourier_consistency_check(spec));
    return out;
}

std::vector<BoundCheckResult> suite_two_scale() {
    std::vector<BoundCheckResult> out;
    for (const SplineSpec& spec : test_matrix()) {
        BoundCheckResult r = check_two_scale(spec, 0.0, 12.0, 1.0 / 32.0, 1e-8);
        r.name = "two-scale(" + spec_label(spec) + ")";
        out.push_back(std::move(r));
        // nested-spaces identity with the truncated filter symbol
        const FilterCoefficients fc = lowpass_filter(spec, 1e-6);
        double worst = 0.0;
        double emax = 0.0;
        for (int i = -800; i <= 800; ++i) {
            const double w = static_cast<double>(i) * 0.01 * M_PI;
            Cplx h0 = 0.0, ph = 1.0;
            const Cplx e(std::cos(w), -std::sin(w));
            for (const Cplx& wk : fc.weights) {
                h0 += wk * ph;
                ph *= e;
            }
            const Cplx lhs = fourier_transform(SplineSpec(spec.z, 2.0 * spec.a), 2.0 * w);
            const Cplx rhs = fourier_transform(spec, w);
            emax = std::max(emax, std::abs(rhs));
            worst = std::max(worst, std::abs(lhs - h0 * rhs));
        }
        out.push_back(make_check("two-scale-symbol(" + spec_label(spec) + ")", 1601, worst,
                                 1e-10 + 2.0 * fc.tail_bound * emax));
    }
    return out;
}

std::vector<BoundCheckResult> suite_riesz() {
    std::vector<BoundCheckResult> out;
    constexpr std::size_t kGrid = 4096;
    for (const SplineSpec& spec : test_matrix()) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        RieszSum last{};
        for (std::size_t i = 0; i < kGrid; ++i) {
            const double w = 2.0 * M_PI * static_cast<double>(i) / kGrid;
            last = riesz_sum(spec, w, 150);
            lo = std::min(lo, last.value);
            hi = std::max(hi, last.value + last.tail_bound);
        }
        // A > 1e-8 (truncated sum is already a lower bound), B finite.
        const double violation = std::max(1e-8 - lo, hi > 0 && std::isfinite(hi) ? 0.0 : 1.0);
        BoundCheckResult r = make_check("riesz-bounds(" + spec_label(spec) + ")", kGrid, violation, 0.0);
        out.push_back(std::move(r));
    }
    // 2 pi periodicity at matched truncation windows
    double worst = 0.0;
    for (const SplineSpec& spec : {SplineSpec(Cplx(2.5, 1.0), 1.0), SplineSpec(Cplx(1.2, -1.0), 0.5)}) {
        for (double w : {0.3, 1.1, 2.9, 5.4}) {
            const double r1 = riesz_sum(spec, w, 30000).value;
            const double r2 = riesz_sum(spec, w + 2.0 * M_PI, 30000).value;
            worst = std::max(worst, std::abs(r1 - r2));
        }
    }
    out.push_back(make_check("riesz-periodicity", 8, worst, 1e-10));
    return out;
}

std::vector<BoundCheckResult> suite_wavelet() {
    std::vector<BoundCheckResult> out;
    // vanishing moment at a = 0
    {
        const WaveletSpec w = make_wavelet(SplineSpec(Cplx(2.0, 0.0), 0.0), 1e-8);
        out.push_back(make_check("wavelet-vanishing-moment(z=2,a=0)", 1,
                                 std::abs(mother_wavelet_symbol(w, 0.0)), 1e-12));
    }
    // finite energy: Riemann sum of |theta^|^2 over [-40 pi, 40 pi]
    {
        const WaveletSpec w = make_wavelet(SplineSpec(Cplx(2.5, 1.0), 1.0), 1e-8);
        double energy = 0.0;
        const double h = 0.01;
        for (double u = -40.0 * M_PI; u <= 40.0 * M_PI; u += h) {
            const double m = std::abs(mother_wavelet_symbol(w, u));
            energy += m * m * h;
        }
        out.push_back(make_check("wavelet-energy-finite(z=2.5,a=1)", 25133,
                                 std::isfinite(energy) && energy > 0 ? 0.0 : 1.0, 0.0));
    }
    // autocorrelation positivity on a 1024 grid
    {
        const WaveletSpec w = make_wavelet(SplineSpec(Cplx(2.5, 0.0), 1.0), 1e-8);
        double lo = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < 1024; ++i)
            lo = std::min(lo, autocorrelation(w, static_cast<double>(i) / 1024.0, 2000).value);
        out.push_back(make_check("autocorrelation-positive(z=2.5,a=1)", 1024,
                                 lo > 0.0 ? 0.0 : 1.0, 0.0));
    }
    out.push_back(wavelet_orthonormality_check(SplineSpec(Cplx(2.0, 0.0), 0.0)));
    out.push_back(wavelet_orthonormality_check(SplineSpec(Cplx(2.5, 0.0), 1.0)));
    return out;
}

std::vector<BoundCheckResult> suite_delta_identity() {
    std::vector<BoundCheckResult> out;
    const auto grid = uniform_grid(-3.0 * M_PI, 3.0 * M_PI, 2001);
    double worst_c = 0.0;
    for (const SplineSpec& spec : test_matrix()) {
        BoundCheckResult r = verify_delta_identity(spec, 200, grid, 1e-6);
        r.name = "delta-identity(" + spec_label(spec) + ")";
        out.push_back(std::move(r));
        const DeltaTrain t = delta_train(spec, 200);
        worst_c = std::max(worst_c,
                           std::abs(t.coefficient_sum()) / std::exp(std::abs(spec.order() - 1.0)));
    }
    // |sum c_l| <= c e^{|z-1|}: the fitted constant must stay bounded
    out.push_back(make_check("delta-coefficient-bound(fitted c)", test_matrix().size(), worst_c, 10.0));
    return out;
}

std::vector<BoundCheckResult> suite_bivariate() {
    std::vector<BoundCheckResult> out;
    const std::vector<BivariateSpec> specs = {BivariateSpec(Cplx(2.0, 0.5), Cplx(1.5, 0.0), 1.0, 0.3),
                                              BivariateSpec(Cplx(2.0, 0.0), Cplx(2.0, 0.0), 1.0, 1.0)};
    const double dx = 1.0 / 128.0;
    for (const BivariateSpec& bs : specs) {
        const std::string label = "z=" + fmt_double(bs.z.value().real()) +
                                  (bs.z.value().imag() != 0 ? "+" + fmt_double(bs.z.value().imag()) + "i" : "") +
                                  ",zeta=" + fmt_double(bs.zeta.value().real()) + ",a=" + fmt_double(bs.a) +
                                  ",b=" + fmt_double(bs.b);
        // the two closed forms agree
        {
            double worst = 0.0;
            for (double x = 0.0625; x <= 8.0; x += 0.0625) {
                const Cplx k = bivariate_time_kummer(bs, x, 16);
                const Cplx f = bivariate_time_2f1(bs, x, 16);
                worst = std::max(worst, std::abs(k - f));
            }
            out.push_back(make_check("bivariate-forms-agree(" + label + ")", 128, worst, 1e-10));
        }
        // convolution oracle on a midpoint grid (keeps samples off the knots)
        {
            const std::size_t n = static_cast<std::size_t>(20.0 / dx);
            SampledFunction f = sample(SplineSpec(bs.z, bs.a), dx / 2.0, dx, n);
            SampledFunction g = sample(SplineSpec(bs.zeta, bs.b), dx / 2.0, dx, n);
            SampledFunction conv = convolve_oracle(f, g);
            double worst = 0.0;
            for (std::size_t k = 0; k < conv.size(); ++k) {
                const double x = conv.grid(k);
                if (x > 8.0) break;
                worst = std::max(worst, std::abs(conv.values[k] - bivariate_time_kummer(bs, x, 16)));
            }
            out.push_back(make_check("bivariate-convolution(" + label + ")", 1024, worst, 1e-4));
        }
        // collapse to the univariate spline when a = b
        if (std::abs(bs.a - bs.b) < 1e-14) {
            const SplineSpec uni(bs.z.value() + bs.zeta.value(), bs.a);
            double worst = 0.0;
            for (double x = 0.125; x <= 8.0; x += 0.125)
                worst = std::max(worst, std::abs(bivariate_time_kummer(bs, x, 16) - evaluate_time(uni, x)));
            out.push_back(make_check("bivariate-collapse(" + label + ")", 64, worst, 1e-8));
        }
        // commutativity E_{(z,zeta)}^{(a,b)} = E_{(zeta,z)}^{(b,a)}
        {
            const BivariateSpec swapped(bs.zeta, bs.z, bs.b, bs.a);
            double worst = 0.0;
            for (double x = 0.25; x <= 8.0; x += 0.25)
                worst = std::max(worst, std::abs(bivariate_time_kummer(bs, x, 16) -
                                                 bivariate_time_kummer(swapped, x, 16)));
            out.push_back(make_check("bivariate-commutativity(" + label + ")", 32, worst, 1e-8));
        }
        // Fourier cross-check via the DFT
        {
            const double dxf = 1.0 / 64.0;
            const std::size_t n = static_cast<std::size_t>(std::llround(40.0 / dxf));
            SampledFunction s = sample_bivariate(bs, 0.0, dxf, n);
            std::vector<Cplx> bins = dft(s.values, -1);
            const double dw = 2.0 * M_PI / (static_cast<double>(n) * dxf);
            double worst = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double w = (j <= n / 2 ? static_cast<double>(j)
                                             : static_cast<double>(j) - static_cast<double>(n)) * dw;
                worst = std::max(worst, std::abs(bins[j] * dxf - bivariate_fourier(bs, w)));
            }
            out.push_back(make_check("bivariate-fourier(" + label + ")", n, worst, 1e-4));
        }
        // integral equals the symbol at zero
        {
            const std::size_t n = static_cast<std::size_t>(std::llround(60.0 / dx)) + 1;
            SampledFunction s = sample_bivariate(bs, 0.0, dx, n);
            const double err = std::abs(s.integrate() - bivariate_fourier(bs, 0.0));
            out.push_back(make_check("bivariate-integral(" + label + ")", n, err, 1e-4));
        }
    }
    return out;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheckResult& c) { return c.passed; });
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    return {{"suite", suite}, {"checks", std::move(arr)}, {"wall_time_s", wall_time_s},
            {"config_echo", config_echo}, {"passed", all_passed()}};
}

VerificationReport run_suite(const std::string& name) {
    using Runner = std::vector<BoundCheckResult> (*)();
    static const std::vector<std::pair<std::string, Runner>> suites = {
        {"inequalities", &suite_inequalities},
        {"fourier-consistency", &suite_fourier_consistency},
        {"two-scale", &suite_two_scale},
        {"riesz", &suite_riesz},
        {"wavelet", &suite_wavelet},
        {"delta-identity", &suite_delta_identity},
        {"bivariate", &suite_bivariate},
    };
    VerificationReport report;
    report.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    bool found = false;
    for (const auto& [sname, runner] : suites) {
        if (name == "all" || name == sname) {
            found = true;
            auto checks = runner();
            report.checks.insert(report.checks.end(), checks.begin(), checks.end());
        }
    }
    if (!found) throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace expspline
