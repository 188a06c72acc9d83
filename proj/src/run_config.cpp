#include "expspline/run_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expspline/bivariate.hpp"
#include "expspline/multiresolution.hpp"
#include "expspline/spline_core.hpp"
#include "expspline/verification.hpp"

namespace expspline {

namespace {

double parse_double_strict(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw std::invalid_argument("malformed number '" + s + "'");
    return v;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Cplx json_complex(const nlohmann::json& j) {
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_array() && j.size() == 2) return Cplx(j.at(0).get<double>(), j.at(1).get<double>());
    if (j.is_number()) return Cplx(j.get<double>(), 0.0);
    throw std::invalid_argument("complex value must be \"re+imi\", [re, im] or a number");
}

void write_output(const RunConfig& config, const std::string& text) {
    if (config.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(config.out, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file '" + config.out + "'");
    os << text;
}

SplineSpec primary_spec(const RunConfig& config) {
    if (!config.z) throw std::invalid_argument("missing --z");
    return SplineSpec(*config.z, config.a);
}

int run_sample(const RunConfig& config) {
    const SplineSpec spec = primary_spec(config);
    SampledFunction f = sample(spec, config.x0, config.dx, config.n);
    if (config.format == OutputFormat::csv) {
        std::ostringstream os;
        f.write_csv(os);
        write_output(config, os.str());
    } else {
        write_output(config, f.to_json().dump(2) + "\n");
    }
    return 0;
}

int run_fourier(const RunConfig& config) {
    const SplineSpec spec = primary_spec(config);
    std::ostringstream os;
    if (config.format == OutputFormat::csv) {
        os << "omega,re,im,abs\n";
        for (std::size_t k = 0; k < config.n; ++k) {
            const double w = config.x0 + static_cast<double>(k) * config.dx;
            const Cplx v = fourier_transform(spec, w);
            os << fmt17(w) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << ','
               << fmt17(std::abs(v)) << '\n';
        }
    } else {
        nlohmann::json vals = nlohmann::json::array();
        for (std::size_t k = 0; k < config.n; ++k) {
            const double w = config.x0 + static_cast<double>(k) * config.dx;
            const Cplx v = fourier_transform(spec, w);
            vals.push_back({v.real(), v.imag()});
        }
        nlohmann::json j = {{"omega0", config.x0}, {"domega", config.dx}, {"values", std::move(vals)}};
        os << j.dump(2) << '\n';
    }
    write_output(config, os.str());
    return 0;
}

int run_filter(const RunConfig& config) {
    const SplineSpec spec = primary_spec(config);
    const FilterCoefficients fc = lowpass_filter(spec, config.tol);
    write_output(config, fc.to_json().dump(2) + "\n");
    return 0;
}

int run_bivariate(const RunConfig& config) {
    if (!config.z || !config.zeta) throw std::invalid_argument("bivariate needs --z and --zeta");
    const BivariateSpec spec(*config.z, *config.zeta, config.a, config.b);
    const std::size_t terms =
        static_cast<std::size_t>(std::ceil(config.x0 + config.dx * static_cast<double>(config.n))) + 1;
    std::ostringstream os;
    if (config.format == OutputFormat::csv) {
        os << "x,kummer_re,kummer_im,f21_re,f21_im,abs_diff\n";
        for (std::size_t k = 0; k < config.n; ++k) {
            const double x = config.x0 + static_cast<double>(k) * config.dx;
            const Cplx km = bivariate_time_kummer(spec, x, terms);
            const Cplx f21 = bivariate_time_2f1(spec, x, terms);
            os << fmt17(x) << ',' << fmt17(km.real()) << ',' << fmt17(km.imag()) << ','
               << fmt17(f21.real()) << ',' << fmt17(f21.imag()) << ',' << fmt17(std::abs(km - f21))
               << '\n';
        }
    } else {
        nlohmann::json kvals = nlohmann::json::array(), fvals = nlohmann::json::array();
        double worst = 0.0;
        for (std::size_t k = 0; k < config.n; ++k) {
            const double x = config.x0 + static_cast<double>(k) * config.dx;
            const Cplx km = bivariate_time_kummer(spec, x, terms);
            const Cplx f21 = bivariate_time_2f1(spec, x, terms);
            kvals.push_back({km.real(), km.imag()});
            fvals.push_back({f21.real(), f21.imag()});
            worst = std::max(worst, std::abs(km - f21));
        }
        nlohmann::json j = {{"spec",
                             {{"z", {spec.z.value().real(), spec.z.value().imag()}},
                              {"zeta", {spec.zeta.value().real(), spec.zeta.value().imag()}},
                              {"a", spec.a},
                              {"b", spec.b}}},
                            {"x0", config.x0},
                            {"dx", config.dx},
                            {"kummer", std::move(kvals)},
                            {"f21", std::move(fvals)},
                            {"max_abs_diff", worst}};
        os << j.dump(2) << '\n';
    }
    write_output(config, os.str());
    return 0;
}

int run_verify(const RunConfig& config) {
    VerificationReport report = run_suite(config.suite);
    report.config_echo = config.to_json();
    for (const BoundCheckResult& c : report.checks) std::cout << c.to_json().dump() << '\n';
    const std::string text = report.to_json().dump(2) + "\n";
    if (!config.out.empty()) write_output(config, text);
    std::cout << (report.all_passed() ? "PASS" : "FAIL") << " suite=" << config.suite << " checks="
              << report.checks.size() << " wall_time_s=" << report.wall_time_s << '\n';
    return report.all_passed() ? 0 : 2;
}

} // namespace

Cplx parse_complex(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    std::string s = text;
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        // split off the trailing signed imaginary coefficient
        std::size_t split = std::string::npos;
        for (std::size_t p = s.size(); p-- > 1;) {
            if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
                split = p;
                break;
            }
        }
        std::string im = split == std::string::npos ? s : s.substr(split);
        std::string re = split == std::string::npos ? "" : s.substr(0, split);
        if (im.empty() || im == "+") im = "1";
        if (im == "-") im = "-1";
        return Cplx(re.empty() ? 0.0 : parse_double_strict(re), parse_double_strict(im));
    }
    return Cplx(parse_double_strict(s), 0.0);
}

Command parse_command(const std::string& name) {
    if (name == "sample") return Command::sample;
    if (name == "fourier") return Command::fourier;
    if (name == "filter") return Command::filter;
    if (name == "bivariate") return Command::bivariate;
    if (name == "verify") return Command::verify;
    throw std::invalid_argument("unknown command '" + name + "'");
}

nlohmann::json RunConfig::to_json() const {
    static const char* names[] = {"sample", "fourier", "filter", "bivariate", "verify"};
    nlohmann::json j = {{"command", names[static_cast<int>(command)]},
                        {"a", a},
                        {"b", b},
                        {"x0", x0},
                        {"dx", dx},
                        {"n", n},
                        {"tol", tol},
                        {"out", out},
                        {"format", format == OutputFormat::csv ? "csv" : "json"},
                        {"suite", suite}};
    if (z) j["z"] = {z->real(), z->imag()};
    if (zeta) j["zeta"] = {zeta->real(), zeta->imag()};
    return j;
}

void RunConfig::apply_json(const nlohmann::json& j) {
    if (j.contains("command")) command = parse_command(j.at("command").get<std::string>());
    if (j.contains("z")) z = json_complex(j.at("z"));
    if (j.contains("zeta")) zeta = json_complex(j.at("zeta"));
    if (j.contains("a")) a = j.at("a").get<double>();
    if (j.contains("b")) b = j.at("b").get<double>();
    if (j.contains("x0")) x0 = j.at("x0").get<double>();
    if (j.contains("omega0")) x0 = j.at("omega0").get<double>();
    if (j.contains("dx")) dx = j.at("dx").get<double>();
    if (j.contains("domega")) dx = j.at("domega").get<double>();
    if (j.contains("n")) n = j.at("n").get<std::size_t>();
    if (j.contains("tol")) tol = j.at("tol").get<double>();
    if (j.contains("out")) out = j.at("out").get<std::string>();
    if (j.contains("format")) {
        const std::string f = j.at("format").get<std::string>();
        if (f == "csv")
            format = OutputFormat::csv;
        else if (f == "json")
            format = OutputFormat::json;
        else
            throw std::invalid_argument("format must be csv or json");
    }
    if (j.contains("suite")) suite = j.at("suite").get<std::string>();
}

int run(const RunConfig& config) {
    switch (config.command) {
        case Command::sample: return run_sample(config);
        case Command::fourier: return run_fourier(config);
        case Command::filter: return run_filter(config);
        case Command::bivariate: return run_bivariate(config);
        case Command::verify: return run_verify(config);
    }
    throw std::invalid_argument("unhandled command");
}

} // namespace expspline
