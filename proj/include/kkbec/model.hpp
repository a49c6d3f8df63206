#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kkbec {

// Natural units with hbar = 1 throughout.

/// Microscopic parameters of the ring-coupled N-component condensate.
struct ModelParams {
    int species_count = 9;          ///< N, odd and >= 3
    double atom_mass = 1.0;         ///< m
    double density = 1.0;           ///< n, uniform mean field psi_i = sqrt(n)
    double self_interaction = 1.0;  ///< U
    double cross_interaction = 0.0; ///< U', nearest-neighbour density coupling
    double rabi = -0.1;             ///< Omega, signed
    std::optional<double> system_length;  ///< L, only used by the validity bound

    double nU() const { return density * self_interaction; }
    double nUprime() const { return density * cross_interaction; }
};

/// Normalized parameters m = n = U = 1 with Omega = -ratio and, if mono_metric, U' = ratio.
ModelParams normalized_params(int species_count, double omega_ratio, bool mono_metric = true);

struct DerivedScales {
    double sound_speed;         ///< c_s
    double healing_length;      ///< xi = 1 / (sqrt(2) m c_s)
    double lattice_spacing;     ///< a = (2 m |Omega|)^(-1/2)
    double length_ratio;        ///< R_l = a / xi
    double synthetic_radius;    ///< r = N a / (2 pi)
    double cutoff_energy;       ///< m c_s^2
    double chemical_potential;  ///< mu = nU + 2nU' + 2 Omega, makes j = 0 gapless
};

/// Internal Fourier mode of the ring together with its Kaluza-Klein label.
struct ModeIndex {
    int j;
    double alpha;  ///< 2 pi j / N
    int kk_label;  ///< j for j <= (N-1)/2, j - N above

    static ModeIndex make(int species_count, int j);
};

/// Index in {0, ..., (N-1)/2} with the same cos(alpha) as j. Used so that the
/// degenerate partners j and N-j evaluate bit-identical closed forms.
int folded_index(int species_count, int j);
double cos_alpha(int species_count, int j);
/// 1 - cos(alpha_j), computed as 2 sin^2(alpha_j / 2).
double one_minus_cos_alpha(int species_count, int j);

enum class Regime { relativistic, nonrelativistic, unrestricted };
enum class Severity { warning, error };

struct Violation {
    std::string constraint;
    Severity severity;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool empty() const { return violations.empty(); }
    bool has_errors() const;
};

/// Ratio above which "Omega << nU" (or its inverse) is reported as a warning.
inline constexpr double kMuchLessThreshold = 0.25;

/// Checks the structural and regime constraints. Never throws on finite or
/// non-finite input; every failed constraint becomes a Violation.
ValidationReport validate(const ModelParams& params, Regime regime);

/// true iff |nU' + Omega| <= tolerance * max(|nU'|, |Omega|, floor).
bool check_mono_metricity(const ModelParams& params, double tolerance);

/// Tolerance used wherever the library itself has to decide mono-metricity.
inline constexpr double kMonoMetricTolerance = 1e-12;

/// Derived length and energy scales. With mono_metric the sound speed is the
/// common value sqrt((nU - 2 Omega) / m); otherwise it is the j = 0 value.
/// Throws PreconditionError if mono_metric is requested but nU' != -Omega, if
/// Omega == 0, or if the sound speed squared is not positive.
DerivedScales derive_scales(const ModelParams& params, bool mono_metric);

std::string to_string(Regime regime);
std::string to_string(Severity severity);

}  // namespace kkbec
