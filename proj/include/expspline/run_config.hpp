#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "expspline/types.hpp"

namespace expspline {

/// Parse a complex scalar written as "re+imi" (e.g. "2.5+1i", "-1.2-0.5i",
/// "3", "1i"). Throws std::invalid_argument on malformed input.
Cplx parse_complex(const std::string& text);

enum class Command { sample, fourier, filter, bivariate, verify };

enum class OutputFormat { csv, json };

/// Fully resolved invocation. Flags override config-file values; validation
/// of module preconditions happens before any computation.
struct RunConfig {
    Command command = Command::verify;
    std::optional<Cplx> z;
    std::optional<Cplx> zeta;
    double a = 0.0;
    double b = 0.0;
    double x0 = 0.0;      // grid origin (or omega0 for symbol sweeps)
    double dx = 1.0 / 64; // grid step (or domega)
    std::size_t n = 2561;
    double tol = 1e-6;
    std::string out;     // output path; empty = stdout
    OutputFormat format = OutputFormat::csv;
    std::string suite = "all";

    nlohmann::json to_json() const;

    /// Merge values from a JSON config object (only keys present are applied).
    void apply_json(const nlohmann::json& j);
};

Command parse_command(const std::string& name);

/// Execute one command. Returns the process exit code:
/// 0 ok, 2 verification failure (report still written).
/// Config/usage errors throw std::invalid_argument / std::domain_error
/// (exit 1); numeric failures throw numeric_error (exit 3).
int run(const RunConfig& config);

} // namespace expspline
