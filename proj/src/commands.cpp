#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "kkbec/cli.hpp"
#include "kkbec/correlation.hpp"
#include "kkbec/errors.hpp"
#include "kkbec/kernels.hpp"
#include "kkbec/spectrum.hpp"

namespace kkbec::cli {

namespace {

using nlohmann::json;

constexpr double kOracleTolerance = 1e-9;

CommandResult failure(int code, std::string message) {
    CommandResult r;
    r.exit_code = code;
    r.diagnostics = std::move(message) + "\n";
    return r;
}

std::string describe(const ValidationReport& report) {
    std::ostringstream os;
    for (const Violation& v : report.violations) {
        os << to_string(v.severity) << ": " << v.constraint << " (" << v.detail << ")\n";
    }
    return os.str();
}

// Structural validation shared by the table commands.
std::optional<CommandResult> reject_invalid(const ParameterDocument& doc, const CommandOptions& options) {
    const ValidationReport report = validate(doc.params, options.regime.value_or(Regime::unrestricted));
    if (report.has_errors()) {
        return failure(kValidationFailure, "invalid parameters\n" + describe(report));
    }
    return std::nullopt;
}

std::string render(const Table& table, const CommandOptions& options, const std::string& command) {
    return options.format == OutputFormat::json ? to_json(table, command) : to_csv(table);
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]) || (i > 0 && !(v[i] > v[i - 1]))) {
            return false;
        }
    }
    return !v.empty();
}

Cell number_or_blank(double v) { return std::isnan(v) ? Cell{Blank{}} : Cell{v}; }

}  // namespace

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out;
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < n; ++i) {
        out.push_back(i == n - 1 ? hi : std::pow(10.0, a + (b - a) * i / (n - 1)));
    }
    if (n > 0) {
        out.front() = lo;
    }
    return out;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(n == 1 ? lo : (i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1)));
    }
    return out;
}

ParameterDocument effective_document(const ParameterDocument& doc, const CommandOptions& options) {
    if (!options.omega_ratio) {
        return doc;
    }
    ParameterDocument out = doc;
    const ModelParams normalized =
        normalized_params(doc.params.species_count, *options.omega_ratio, doc.mono_metric);
    out.params.atom_mass = normalized.atom_mass;
    out.params.density = normalized.density;
    out.params.self_interaction = normalized.self_interaction;
    out.params.cross_interaction = normalized.cross_interaction;
    out.params.rabi = normalized.rabi;
    return out;
}

CommandResult cmd_tower(const ParameterDocument& input, const CommandOptions& options) {
    const ParameterDocument doc = effective_document(input, options);
    if (auto bad = reject_invalid(doc, options)) {
        return *bad;
    }
    std::vector<TowerEntry> tower;
    try {
        tower = kk_tower(doc.params);
    } catch (const PreconditionError& e) {
        return failure(kValidationFailure, e.what());
    }
    std::sort(tower.begin(), tower.end(),
              [](const TowerEntry& a, const TowerEntry& b) { return a.mode.j < b.mode.j; });

    Table table{{"j", "n", "alpha", "Erj_sq_exact", "Erj_sq_continuum", "csj_sq", "p5",
                 "constraint_value", "degeneracy"},
                {}};
    Curve exact{"Erj_sq_exact", {}, {}};
    Curve continuum{"Erj_sq_continuum", {}, {}};
    for (const TowerEntry& e : tower) {
        table.rows.push_back({Cell{static_cast<long long>(e.mode.j)},
                              Cell{static_cast<long long>(e.mode.kk_label)}, Cell{e.mode.alpha},
                              Cell{e.rest_energy_sq}, Cell{e.continuum_mass_sq},
                              Cell{e.sound_speed_sq}, Cell{e.p5}, Cell{e.constraint_value},
                              Cell{static_cast<long long>(e.degeneracy)}});
        exact.x.push_back(e.mode.j);
        exact.y.push_back(e.rest_energy_sq);
        continuum.x.push_back(e.mode.j);
        continuum.y.push_back(e.continuum_mass_sq);
    }
    CommandResult r;
    r.output = render(table, options, "tower");
    if (options.svg) {
        r.svg = to_svg({exact, continuum}, false, false);
    }
    return r;
}

CommandResult cmd_dispersion(const ParameterDocument& input, const CommandOptions& options) {
    const ParameterDocument doc = effective_document(input, options);
    if (auto bad = reject_invalid(doc, options)) {
        return *bad;
    }
    if (!(options.eta_min > 0.0) || !(options.eta_max > options.eta_min) || options.eta_points < 2) {
        return failure(kValidationFailure, "eta grid must be positive and strictly increasing");
    }
    const std::vector<double> etas = log_grid(options.eta_min, options.eta_max, options.eta_points);
    std::vector<DispersionRow> rows;
    try {
        rows = dispersion_grid_parallel(doc.params, etas);
    } catch (const PreconditionError& e) {
        return failure(kValidationFailure, e.what());
    }

    Table table{{"j", "eta", "p", "E", "E_over_csp"}, {}};
    std::vector<Curve> curves(doc.params.species_count);
    for (const DispersionRow& row : rows) {
        table.rows.push_back({Cell{static_cast<long long>(row.j)}, Cell{row.eta}, Cell{row.momentum},
                              Cell{row.energy}, number_or_blank(row.energy_over_csp)});
        Curve& c = curves[row.j];
        c.name = "j=" + std::to_string(row.j);
        c.x.push_back(row.eta);
        c.y.push_back(row.energy);
    }
    CommandResult r;
    r.output = render(table, options, "dispersion");
    if (options.svg) {
        r.svg = to_svg(curves, true, true);
    }
    return r;
}

CommandResult cmd_correlation(const ParameterDocument& input, const CommandOptions& options) {
    const ParameterDocument doc = effective_document(input, options);
    if (auto bad = reject_invalid(doc, options)) {
        return *bad;
    }
    if (!check_mono_metricity(doc.params, kMonoMetricTolerance)) {
        return failure(kValidationFailure, "correlators require the mono-metric condition nU' = -Omega");
    }
    const std::vector<double> s_values = options.s_values.empty()
                                             ? linear_grid(options.s_min, options.s_max, options.s_points)
                                             : options.s_values;
    if (!strictly_increasing(s_values) || !(s_values.front() > 0.0)) {
        return failure(kValidationFailure, "s grid must be positive and strictly increasing");
    }
    const int N = doc.params.species_count;
    if (options.delta < 0 || options.delta >= N || options.j_tr < 0 || options.j_tr > (N - 1) / 2) {
        return failure(kValidationFailure, "delta must lie in [0, N-1] and j_tr in [0, (N-1)/2]");
    }
    if (!(options.quad.rel_tol > 0.0)) {
        return failure(kValidationFailure, "quadrature tolerance must be positive");
    }

    CorrelationGrid grid;
    grid.s_values = s_values;
    grid.delta = options.delta;
    grid.j_tr = options.j_tr;
    grid.cosine_weights = !options.unweighted_truncation;
    grid.quad = options.quad;

    std::vector<CorrelationRow> rows;
    try {
        rows = correlation_grid_parallel(doc.params, grid);
    } catch (const Error& e) {
        return failure(kValidationFailure, e.what());
    }

    Table table{{"s", "delta", "D_analytic", "D_numeric", "D_numeric_err", "D_truncated"}, {}};
    Curve analytic{"D_analytic", {}, {}}, numeric{"D_numeric", {}, {}}, truncated{"D_truncated", {}, {}};
    CommandResult r;
    for (const CorrelationRow& row : rows) {
        table.rows.push_back({Cell{row.s}, Cell{static_cast<long long>(row.delta)}, Cell{row.analytic},
                              Cell{row.numeric}, Cell{row.numeric_error}, Cell{row.truncated}});
        analytic.x.push_back(row.s);
        analytic.y.push_back(row.analytic);
        numeric.x.push_back(row.s);
        numeric.y.push_back(row.numeric);
        truncated.x.push_back(row.s);
        truncated.y.push_back(row.truncated);
        if (row.failed) {
            r.exit_code = kQuadratureFailure;
            r.diagnostics += "quadrature failed at s = " + format_double(row.s) + "\n";
        }
    }
    r.output = render(table, options, "correlation");
    if (options.svg) {
        r.svg = to_svg({analytic, numeric, truncated}, false, true);
    }
    return r;
}

CommandResult cmd_oracle_check(const ParameterDocument& input, const CommandOptions& options) {
    const ParameterDocument doc = effective_document(input, options);
    if (auto bad = reject_invalid(doc, options)) {
        return *bad;
    }
    if (options.oracle_sets < 0 || options.oracle_momenta < 1) {
        return failure(kValidationFailure, "oracle suite sizes must be positive");
    }
    std::vector<OracleCase> cases =
        default_oracle_suite(options.seed, options.oracle_sets, options.oracle_momenta);
    const auto own = momentum_sweep("config", doc.params, options.oracle_momenta);
    cases.insert(cases.end(), own.begin(), own.end());

    std::vector<OracleComparison> results;
    try {
        results = oracle_sweep_parallel(cases);
    } catch (const Error& e) {
        return failure(kOracleMismatch, std::string("oracle failed: ") + e.what());
    }

    double max_err = 0.0;
    std::string worst;
    json unstable = json::array();
    json mismatched = json::array();
    for (const OracleComparison& c : results) {
        if (worst.empty() || c.rel_err > max_err) {
            max_err = c.rel_err;
            worst = c.input.label;
        }
        if (!c.oracle_stable) {
            unstable.push_back(c.input.label);
        }
        if (!c.stability_agrees()) {
            mismatched.push_back(c.input.label);
        }
    }
    const bool passed = max_err <= kOracleTolerance && mismatched.empty();

    json report;
    report["cases"] = results.size();
    report["max_rel_err"] = max_err;
    report["worst_case"] = worst;
    report["tolerance"] = kOracleTolerance;
    report["seed"] = options.seed;
    report["unstable_cases"] = unstable;
    report["stability_mismatches"] = mismatched;
    report["passed"] = passed;

    CommandResult r;
    r.output = report.dump(1) + "\n";
    if (!passed) {
        r.exit_code = kOracleMismatch;
        r.diagnostics = "oracle mismatch: max_rel_err = " + format_double(max_err) + " at " + worst + "\n";
    }
    return r;
}

CommandResult cmd_validate(const ParameterDocument& input, const CommandOptions& options) {
    const ParameterDocument doc = effective_document(input, options);
    const Regime regime = options.regime.value_or(Regime::relativistic);
    ValidationReport report = validate(doc.params, regime);

    json out;
    out["regime"] = to_string(regime);
    out["constraint_j1"] = nullptr;
    if (regime == Regime::relativistic && !report.has_errors() &&
        sound_speed_sq(doc.params, 0) > 0.0) {
        const double c1 = validity_constraint(doc.params, 1);
        out["constraint_j1"] = c1;
        out["constraint_warn_threshold"] = kConstraintWarn;
        out["constraint_reject_threshold"] = kConstraintReject;
        int continuum_modes = 0;
        for (int j = 0; j < doc.params.species_count; ++j) {
            continuum_modes += validity_constraint(doc.params, j) <= kConstraintWarn ? 1 : 0;
        }
        out["modes_below_warn_threshold"] = continuum_modes;
        if (c1 > kConstraintReject) {
            report.violations.push_back({"p5/(sqrt(2) m c_s) << 1 at j = 1", Severity::error,
                                         "value " + format_double(c1) + " > " + format_double(kConstraintReject)});
        } else if (c1 > kConstraintWarn) {
            report.violations.push_back({"p5/(sqrt(2) m c_s) << 1 at j = 1", Severity::warning,
                                         "value " + format_double(c1) + " > " + format_double(kConstraintWarn)});
        }
    }
    json violations = json::array();
    for (const Violation& v : report.violations) {
        violations.push_back({{"constraint", v.constraint}, {"severity", to_string(v.severity)}, {"detail", v.detail}});
    }
    out["violations"] = violations;
    out["valid"] = !report.has_errors();

    CommandResult r;
    r.output = out.dump(1) + "\n";
    std::ostringstream human;
    human << (report.has_errors() ? "INVALID" : "OK") << " (" << to_string(regime) << " regime)\n";
    if (out["constraint_j1"].is_number()) {
        human << "validity constraint at j = 1: " << format_double(out["constraint_j1"].get<double>())
              << " (warn above " << kConstraintWarn << ", reject above " << kConstraintReject << ")\n";
    }
    human << describe(report);
    r.diagnostics = human.str();
    r.exit_code = report.has_errors() ? kValidationFailure : kOk;
    return r;
}

CommandResult run_command(const std::string& name, const ParameterDocument& doc,
                          const CommandOptions& options) {
    if (name == "tower") return cmd_tower(doc, options);
    if (name == "dispersion") return cmd_dispersion(doc, options);
    if (name == "correlation") return cmd_correlation(doc, options);
    if (name == "oracle-check") return cmd_oracle_check(doc, options);
    if (name == "validate") return cmd_validate(doc, options);
    return failure(kValidationFailure, "unknown command: " + name);
}

}  // namespace kkbec::cli
