#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kkbec/io.hpp"
#include "kkbec/oracle_check.hpp"
#include "kkbec/quadrature.hpp"

namespace kkbec::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailure = 2,
    kIoFailure = 3,
    kQuadratureFailure = 4,
    kOracleMismatch = 5,
};

enum class OutputFormat { csv, json };

/// Thresholds applied to validity_constraint(j = 1) by the CLI.
inline constexpr double kConstraintWarn = 0.25;
inline constexpr double kConstraintReject = 1.0;

struct CommandOptions {
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = kDefaultOracleSeed;
    bool svg = false;
    /// Normalized mode: m = n = U = 1, Omega = -ratio, U' = ratio if mono-metric.
    std::optional<double> omega_ratio;
    std::optional<Regime> regime;

    double eta_min = 1e-2;
    double eta_max = 10.0;
    int eta_points = 61;

    std::vector<double> s_values;  ///< overrides the s range when non-empty
    double s_min = 2.0;
    double s_max = 40.0;
    int s_points = 39;
    int delta = 1;
    int j_tr = 2;
    bool unweighted_truncation = false;
    QuadConfig quad;

    int oracle_sets = 100;
    int oracle_momenta = 20;
};

struct CommandResult {
    int exit_code = kOk;
    std::string output;       ///< CSV or JSON, byte-stable for identical inputs
    std::string svg;          ///< empty unless requested
    std::string diagnostics;  ///< human-readable, for stderr
};

/// Applies the normalized-mode override, if any.
ParameterDocument effective_document(const ParameterDocument& doc, const CommandOptions& options);

CommandResult cmd_tower(const ParameterDocument& doc, const CommandOptions& options);
CommandResult cmd_dispersion(const ParameterDocument& doc, const CommandOptions& options);
CommandResult cmd_correlation(const ParameterDocument& doc, const CommandOptions& options);
CommandResult cmd_oracle_check(const ParameterDocument& doc, const CommandOptions& options);
CommandResult cmd_validate(const ParameterDocument& doc, const CommandOptions& options);

/// Dispatches on the subcommand name; unknown names give kValidationFailure.
CommandResult run_command(const std::string& name, const ParameterDocument& doc,
                          const CommandOptions& options);

/// n points spaced evenly in log10 between lo and hi (inclusive).
std::vector<double> log_grid(double lo, double hi, int n);
std::vector<double> linear_grid(double lo, double hi, int n);

}  // namespace kkbec::cli
