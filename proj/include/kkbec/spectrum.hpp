#pragma once

#include <vector>

#include "kkbec/model.hpp"

namespace kkbec {

// Closed-form quasiparticle spectrum of the ring-coupled condensate. Mode
// arguments j run over {0, ..., N-1}; the partners j and N-j evaluate to
// bit-identical values.

struct DispersionSample {
    ModeIndex mode;
    double momentum;
    double energy;
};

struct TowerEntry {
    ModeIndex mode;
    double rest_energy_sq;       ///< exact gap E_rj^2
    double continuum_mass_sq;    ///< c_s^2 p5^2
    double kk_reference_mass_sq; ///< c_s^2 (n / r)^2, the compact-dimension tower
    double p5;
    double sound_speed_sq;       ///< c_sj^2
    int degeneracy;              ///< 1 for j = 0, else 2
    double constraint_value;     ///< p5 / (sqrt(2) m c_s)
};

struct BogoliubovAmplitudes {
    double u;
    double v;  ///< minus-sign branch
};

/// Squared rest energy (gap) of mode j for arbitrary couplings. Negative values
/// signal tachyonic modes and are returned unchanged.
double rest_energy_sq(const ModelParams& params, int j);

/// Gap under the mono-metric substitution nU' = -Omega:
/// -4 Omega [nU (1 - cos a) - Omega sin^2 a].
double rest_energy_sq_mono_metric(const ModelParams& params, int j);

/// c_sj^2 = (nU - 2 Omega + 2 (nU' + Omega) cos a_j) / m. May be negative.
double sound_speed_sq(const ModelParams& params, int j);

/// E_j^2 = E_rj^2 + c_sj^2 p^2 + (p^2/2m)^2, without any sign check.
double dispersion_sq(const ModelParams& params, int j, double p);

/// Positive-branch energy. Throws StabilityError when the radicand is negative.
double dispersion(const ModelParams& params, int j, double p);

/// u, v = +-sqrt((1/2N) ((m c_sj^2 + p^2/2m) / E_j +- 1)).
/// Throws DegenerateModeError if E_j == 0 and StabilityError if E_j^2 < 0.
BogoliubovAmplitudes bogoliubov_amplitudes(const ModelParams& params, int j, double p);

/// Discrete synthetic momentum 2 pi n / (N a) with n the signed KK label.
double p5(const ModelParams& params, int j);

/// Continuum-limit mass c_s^2 p5^2 with c_s the j = 0 sound speed.
double continuum_mass_sq(const ModelParams& params, int j);

/// p5 / (sqrt(2) m c_s) = 2 pi |n| xi / (N a); must be << 1 for the analogy.
double validity_constraint(const ModelParams& params, int j);

/// All N modes sorted by |n|, positive label first within a pair.
std::vector<TowerEntry> kk_tower(const ModelParams& params);

/// p^2/2m + 2 Omega (1 - cos a_j) + n (U + U' cos a_j), evaluated as written.
double nonrel_dispersion(const ModelParams& params, int j, double p);

}  // namespace kkbec
