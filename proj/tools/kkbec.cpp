// kkbec: tower | dispersion | correlation | oracle-check | validate

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kkbec/cli.hpp"
#include "kkbec/io.hpp"

namespace {

using namespace kkbec;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return static_cast<bool>(in) || in.eof();
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kaluza-Klein tower of a ring-coupled multi-component condensate"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    cli::CommandOptions opts;
    std::string regime;

    const std::map<std::string, Regime> regimes = {{"relativistic", Regime::relativistic},
                                                   {"nonrelativistic", Regime::nonrelativistic},
                                                   {"unrestricted", Regime::unrestricted}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON parameter document")->required();
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", opts.seed, "seed for randomized suites");
        sub->add_flag("--svg", opts.svg, "also write <out>.svg with one polyline per curve");
        sub->add_option("--omega-ratio", opts.omega_ratio,
                        "normalized mode: m = n = U = 1, Omega = -ratio (U' = ratio if mono_metric)");
        sub->add_option("--regime", regime, "relativistic, nonrelativistic or unrestricted")
            ->check(CLI::IsMember({"relativistic", "nonrelativistic", "unrestricted"}));
    };

    auto* tower = app.add_subcommand("tower", "rest-mass tower, exact and continuum");
    common(tower);

    auto* dispersion = app.add_subcommand("dispersion", "E_j(p) on a log eta = p xi grid");
    common(dispersion);
    dispersion->add_option("--eta-min", opts.eta_min);
    dispersion->add_option("--eta-max", opts.eta_max);
    dispersion->add_option("--eta-points", opts.eta_points);

    auto* correlation = app.add_subcommand("correlation", "analytic, numeric and truncated correlators");
    common(correlation);
    correlation->add_option("--s", opts.s_values, "explicit s values (overrides the range)")->delimiter(',');
    correlation->add_option("--s-min", opts.s_min);
    correlation->add_option("--s-max", opts.s_max);
    correlation->add_option("--s-points", opts.s_points);
    correlation->add_option("--delta", opts.delta, "synthetic-site separation");
    correlation->add_option("--jtr", opts.j_tr, "truncation |n| <= jtr");
    correlation->add_option("--rel-tol", opts.quad.rel_tol, "quadrature relative tolerance");
    correlation->add_flag("--unweighted", opts.unweighted_truncation,
                          "truncated sum without the cos(2 pi n delta / N) weights");

    auto* oracle = app.add_subcommand("oracle-check", "closed forms vs dense BdG diagonalization");
    common(oracle);
    oracle->add_option("--sets", opts.oracle_sets, "random parameter sets");
    oracle->add_option("--momenta", opts.oracle_momenta, "momentum points per set");

    auto* validate_cmd = app.add_subcommand("validate", "regime and validity checks");
    common(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kValidationFailure;
    }

    opts.format = format == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;
    if (!regime.empty()) {
        opts.regime = regimes.at(regime);
    }

    std::string text;
    if (!read_file(config_path, text)) {
        std::cerr << "cannot read config " << config_path << "\n";
        return cli::kIoFailure;
    }
    ParameterDocument doc;
    try {
        doc = parse_parameter_document(text);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kValidationFailure;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const cli::CommandResult result = cli::run_command(name, doc, opts);
    std::cerr << result.diagnostics;

    if (out_path.empty()) {
        std::cout << result.output;
        if (opts.svg) {
            std::cerr << "--svg needs --out; skipped\n";
        }
    } else {
        if (!write_file(out_path, result.output)) {
            std::cerr << "cannot write " << out_path << "\n";
            return cli::kIoFailure;
        }
        if (opts.svg && !result.svg.empty() && !write_file(out_path + ".svg", result.svg)) {
            std::cerr << "cannot write " << out_path << ".svg\n";
            return cli::kIoFailure;
        }
    }
    return result.exit_code;
}
