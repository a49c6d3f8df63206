#include "kkbec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "kkbec/errors.hpp"

namespace kkbec {

namespace {

// The j = 0 sound speed squared; equals (nU - 2 Omega)/m under mono-metricity.
double reference_sound_speed_sq(const ModelParams& params) {
    return sound_speed_sq(params, 0);
}

double lattice_spacing(const ModelParams& params) {
    if (params.rabi == 0.0) {
        throw PreconditionError("Omega = 0 leaves the lattice spacing undefined");
    }
    return 1.0 / std::sqrt(2.0 * params.atom_mass * std::abs(params.rabi));
}

}  // namespace

double rest_energy_sq(const ModelParams& params, int j) {
    // Factorized form of
    //   4 [W^2 - nU W + (nU W - 2 nU' W - 2 W^2) c + (2 nU' W + W^2) c^2]
    //   = -4 W (1 - c) [nU - W + (2 nU' + W) c],
    // which vanishes identically at c = 1.
    const int N = params.species_count;
    const double c = cos_alpha(N, j);
    const double w = params.rabi;
    return -4.0 * w * one_minus_cos_alpha(N, j) *
           (params.nU() - w + (2.0 * params.nUprime() + w) * c);
}

double rest_energy_sq_mono_metric(const ModelParams& params, int j) {
    const int N = params.species_count;
    const double s = std::sin(2.0 * std::numbers::pi * folded_index(N, j) / N);
    const double w = params.rabi;
    return -4.0 * w * (params.nU() * one_minus_cos_alpha(N, j) - w * s * s);
}

double sound_speed_sq(const ModelParams& params, int j) {
    const double c = cos_alpha(params.species_count, j);
    const double w = params.rabi;
    return (params.nU() - 2.0 * w + 2.0 * (params.nUprime() + w) * c) / params.atom_mass;
}

double dispersion_sq(const ModelParams& params, int j, double p) {
    const double kinetic = p * p / (2.0 * params.atom_mass);
    return rest_energy_sq(params, j) + sound_speed_sq(params, j) * p * p + kinetic * kinetic;
}

double dispersion(const ModelParams& params, int j, double p) {
    const double e_sq = dispersion_sq(params, j, p);
    if (e_sq < 0.0) {
        throw StabilityError("tachyonic mode j = " + std::to_string(j) + " at p = " +
                                 std::to_string(p),
                             e_sq);
    }
    return std::sqrt(e_sq);
}

BogoliubovAmplitudes bogoliubov_amplitudes(const ModelParams& params, int j, double p) {
    const double energy = dispersion(params, j, p);
    if (energy == 0.0) {
        throw DegenerateModeError("zero-energy mode j = " + std::to_string(j) + " at p = " +
                                  std::to_string(p));
    }
    const double diag = params.atom_mass * sound_speed_sq(params, j) + p * p / (2.0 * params.atom_mass);
    const double ratio = diag / energy;
    const double norm = 1.0 / (2.0 * params.species_count);
    return {std::sqrt(norm * (ratio + 1.0)), -std::sqrt(norm * std::max(ratio - 1.0, 0.0))};
}

double p5(const ModelParams& params, int j) {
    const int N = params.species_count;
    const ModeIndex mode = ModeIndex::make(N, j);
    return 2.0 * std::numbers::pi * mode.kk_label / (N * lattice_spacing(params));
}

double continuum_mass_sq(const ModelParams& params, int j) {
    const double q = p5(params, j);
    return reference_sound_speed_sq(params) * q * q;
}

double validity_constraint(const ModelParams& params, int j) {
    const double cs = std::sqrt(reference_sound_speed_sq(params));
    return std::abs(p5(params, j)) / (std::numbers::sqrt2 * params.atom_mass * cs);
}

std::vector<TowerEntry> kk_tower(const ModelParams& params) {
    const int N = params.species_count;
    const double cs_sq = reference_sound_speed_sq(params);
    const double radius = N * lattice_spacing(params) / (2.0 * std::numbers::pi);

    std::vector<TowerEntry> tower;
    tower.reserve(N);
    for (int j = 0; j < N; ++j) {
        TowerEntry e;
        e.mode = ModeIndex::make(N, j);
        e.rest_energy_sq = rest_energy_sq(params, j);
        e.p5 = p5(params, j);
        e.continuum_mass_sq = cs_sq * e.p5 * e.p5;
        const double n_over_r = e.mode.kk_label / radius;
        e.kk_reference_mass_sq = cs_sq * n_over_r * n_over_r;
        e.sound_speed_sq = sound_speed_sq(params, j);
        e.degeneracy = j == 0 ? 1 : 2;
        e.constraint_value = validity_constraint(params, j);
        tower.push_back(e);
    }
    std::stable_sort(tower.begin(), tower.end(), [](const TowerEntry& a, const TowerEntry& b) {
        const int la = std::abs(a.mode.kk_label);
        const int lb = std::abs(b.mode.kk_label);
        if (la != lb) {
            return la < lb;
        }
        return a.mode.kk_label > b.mode.kk_label;
    });
    return tower;
}

double nonrel_dispersion(const ModelParams& params, int j, double p) {
    const int N = params.species_count;
    const double c = cos_alpha(N, j);
    return p * p / (2.0 * params.atom_mass) + 2.0 * params.rabi * one_minus_cos_alpha(N, j) +
           params.density * (params.self_interaction + params.cross_interaction * c);
}

}  // namespace kkbec
