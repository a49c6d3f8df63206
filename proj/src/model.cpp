#include "kkbec/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kkbec/errors.hpp"

namespace kkbec {

namespace {

constexpr double kRelativeFloor = 1e-300;

std::string describe(const char* name, double value) {
    std::ostringstream os;
    os.precision(17);
    os << name << " = " << value;
    return os.str();
}

void add(ValidationReport& report, std::string constraint, Severity severity, std::string detail) {
    report.violations.push_back({std::move(constraint), severity, std::move(detail)});
}

}  // namespace

ModelParams normalized_params(int species_count, double omega_ratio, bool mono_metric) {
    ModelParams p;
    p.species_count = species_count;
    p.atom_mass = 1.0;
    p.density = 1.0;
    p.self_interaction = 1.0;
    p.rabi = -omega_ratio;
    p.cross_interaction = mono_metric ? omega_ratio : 0.0;
    return p;
}

ModeIndex ModeIndex::make(int species_count, int j) {
    if (species_count < 1 || j < 0 || j >= species_count) {
        throw PreconditionError("mode index j = " + std::to_string(j) + " outside [0, " +
                                std::to_string(species_count - 1) + "]");
    }
    const int half = (species_count - 1) / 2;
    ModeIndex m;
    m.j = j;
    m.alpha = 2.0 * std::numbers::pi * j / species_count;
    m.kk_label = j <= half ? j : j - species_count;
    return m;
}

int folded_index(int species_count, int j) {
    if (j < 0 || j >= species_count) {
        throw PreconditionError("mode index j = " + std::to_string(j) + " outside [0, " +
                                std::to_string(species_count - 1) + "]");
    }
    return std::min(j, species_count - j);
}

double cos_alpha(int species_count, int j) {
    const int k = folded_index(species_count, j);
    return std::cos(2.0 * std::numbers::pi * k / species_count);
}

double one_minus_cos_alpha(int species_count, int j) {
    const int k = folded_index(species_count, j);
    const double half = std::sin(std::numbers::pi * k / species_count);
    return 2.0 * half * half;
}

bool ValidationReport::has_errors() const {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.severity == Severity::error; });
}

ValidationReport validate(const ModelParams& params, Regime regime) {
    ValidationReport report;
    const int N = params.species_count;
    if (N % 2 == 0) {
        add(report, "N must be odd", Severity::error, "N = " + std::to_string(N));
    }
    if (N < 3) {
        add(report, "N must be >= 3", Severity::error, "N = " + std::to_string(N));
    }

    const struct {
        const char* name;
        double value;
    } positives[] = {
        {"m", params.atom_mass},
        {"n", params.density},
        {"U", params.self_interaction},
    };
    for (const auto& [name, value] : positives) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            add(report, std::string(name) + " must be positive and finite", Severity::error,
                describe(name, value));
        }
    }
    if (!std::isfinite(params.cross_interaction)) {
        add(report, "U' must be finite", Severity::error, describe("U'", params.cross_interaction));
    }
    if (!std::isfinite(params.rabi)) {
        add(report, "Omega must be finite", Severity::error, describe("Omega", params.rabi));
    }
    if (params.system_length && !(*params.system_length > 0.0)) {
        add(report, "L must be positive", Severity::error, describe("L", *params.system_length));
    }
    if (report.has_errors()) {
        return report;
    }

    const double nU = params.nU();
    const double omega = params.rabi;
    const double abs_omega = std::abs(omega);

    switch (regime) {
    case Regime::relativistic: {
        if (!(omega < 0.0)) {
            add(report, "Omega must be negative", Severity::error,
                describe("Omega", omega) + " (positive Omega gives tachyonic gaps)");
        }
        if (!(nU - 2.0 * omega > 0.0)) {
            add(report, "nU - 2 Omega must be positive", Severity::error,
                describe("nU - 2 Omega", nU - 2.0 * omega));
        }
        if (abs_omega > kMuchLessThreshold * nU) {
            add(report, "|Omega| << nU", Severity::warning,
                describe("|Omega|/nU", abs_omega / nU));
        }
        if (params.system_length) {
            const double L = *params.system_length;
            const double bound = 1.0 / (2.0 * params.atom_mass * L * L);
            if (!(abs_omega > bound)) {
                add(report, "|Omega| > 1/(2 m L^2)", Severity::error,
                    describe("|Omega|", abs_omega) + ", " + describe("1/(2 m L^2)", bound));
            }
        }
        if (!check_mono_metricity(params, kMonoMetricTolerance)) {
            add(report, "nU' = -Omega (mono-metricity)", Severity::warning,
                describe("nU' + Omega", params.nUprime() + omega) +
                    "; modes propagate on different sound cones");
        }
        break;
    }
    case Regime::nonrelativistic: {
        const double largest = std::max(nU, std::abs(params.nUprime()));
        if (!(kMuchLessThreshold * abs_omega > largest)) {
            add(report, "|Omega| >> nU, |nU'|", Severity::warning,
                describe("max(nU, |nU'|)/|Omega|", largest / abs_omega));
        }
        break;
    }
    case Regime::unrestricted:
        break;
    }
    return report;
}

bool check_mono_metricity(const ModelParams& params, double tolerance) {
    if (tolerance < 0.0) {
        throw PreconditionError("mono-metricity tolerance must be non-negative");
    }
    const double nUp = params.nUprime();
    const double scale = std::max({std::abs(nUp), std::abs(params.rabi), kRelativeFloor});
    return std::abs(nUp + params.rabi) <= tolerance * scale;
}

DerivedScales derive_scales(const ModelParams& params, bool mono_metric) {
    const double m = params.atom_mass;
    const double nU = params.nU();
    const double omega = params.rabi;
    if (mono_metric && !check_mono_metricity(params, kMonoMetricTolerance)) {
        throw PreconditionError("mono-metric scales requested but nU' + Omega = " +
                                std::to_string(params.nUprime() + omega));
    }
    if (omega == 0.0) {
        throw PreconditionError("Omega = 0 leaves the lattice spacing undefined");
    }
    // Mono-metric: (nU - 2 Omega)/m. Otherwise the j = 0 mode: (nU + 2nU')/m.
    const double cs_sq = mono_metric ? (nU - 2.0 * omega) / m : (nU + 2.0 * params.nUprime()) / m;
    if (!(cs_sq > 0.0)) {
        throw PreconditionError("no stable sound cone: c_s^2 = " + std::to_string(cs_sq));
    }

    DerivedScales s;
    s.sound_speed = std::sqrt(cs_sq);
    s.healing_length = 1.0 / (std::numbers::sqrt2 * m * s.sound_speed);
    s.lattice_spacing = 1.0 / std::sqrt(2.0 * m * std::abs(omega));
    s.length_ratio = s.lattice_spacing / s.healing_length;
    s.synthetic_radius = params.species_count * s.lattice_spacing / (2.0 * std::numbers::pi);
    s.cutoff_energy = m * cs_sq;
    s.chemical_potential = nU + 2.0 * params.nUprime() + 2.0 * omega;
    return s;
}

std::string to_string(Regime regime) {
    switch (regime) {
    case Regime::relativistic: return "relativistic";
    case Regime::nonrelativistic: return "nonrelativistic";
    case Regime::unrestricted: return "unrestricted";
    }
    return "unknown";
}

std::string to_string(Severity severity) {
    return severity == Severity::error ? "error" : "warning";
}

}  // namespace kkbec
