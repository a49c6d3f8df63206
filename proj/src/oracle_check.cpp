#include "kkbec/oracle_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kkbec/bdg_oracle.hpp"
#include "kkbec/rng.hpp"
#include "kkbec/spectrum.hpp"

namespace kkbec {

OracleComparison compare_with_oracle(const OracleCase& c) {
    OracleComparison out;
    out.input = c;
    const int N = c.params.species_count;
    for (int j = 0; j < N; ++j) {
        out.closed_energy_sq.push_back(dispersion_sq(c.params, j, c.momentum));
    }
    const OracleSpectrum oracle = oracle_energies(build_bdg(c.params, c.momentum));
    out.oracle_energy_sq = oracle.energy_sq;
    std::sort(out.closed_energy_sq.begin(), out.closed_energy_sq.end());
    std::sort(out.oracle_energy_sq.begin(), out.oracle_energy_sq.end());

    out.oracle_stable = oracle.stable;
    out.closed_stable = out.closed_energy_sq.front() >= -kOracleStabilityTolerance;

    double worst = 0.0;
    if (out.closed_energy_sq.front() >= 0.0) {
        for (std::size_t i = 0; i < out.closed_energy_sq.size(); ++i) {
            const double closed = std::sqrt(out.closed_energy_sq[i]);
            const double numeric = std::sqrt(std::max(out.oracle_energy_sq[i], 0.0));
            double err;
            if (closed == 0.0) {
                // Exact zero mode: the oracle only has to resolve it as zero.
                err = std::abs(out.oracle_energy_sq[i]) <= kOracleStabilityTolerance
                          ? 0.0
                          : std::numeric_limits<double>::infinity();
            } else {
                err = std::abs(numeric - closed) / closed;
            }
            worst = std::max(worst, err);
        }
    } else {
        double scale = 0.0;
        for (double e : out.closed_energy_sq) {
            scale = std::max(scale, std::abs(e));
        }
        for (std::size_t i = 0; i < out.closed_energy_sq.size(); ++i) {
            worst = std::max(worst,
                             std::abs(out.oracle_energy_sq[i] - out.closed_energy_sq[i]) / scale);
        }
    }
    out.rel_err = worst;
    return out;
}

std::vector<OracleCase> momentum_sweep(const std::string& label, const ModelParams& params,
                                       int momentum_points) {
    double cs_sq = 0.0;
    for (int j = 0; j < params.species_count; ++j) {
        cs_sq = std::max(cs_sq, sound_speed_sq(params, j));
    }
    const double xi = cs_sq > 0.0 ? 1.0 / (std::sqrt(2.0 * cs_sq) * params.atom_mass) : 1.0;
    std::vector<OracleCase> out;
    out.reserve(momentum_points);
    for (int k = 0; k < momentum_points; ++k) {
        const double t = momentum_points > 1 ? static_cast<double>(k) / (momentum_points - 1) : 0.0;
        const double eta = std::pow(10.0, -2.0 + 3.0 * t);
        out.push_back({label + "-" + std::to_string(k), params, eta / xi});
    }
    return out;
}

std::vector<OracleCase> default_oracle_suite(std::uint64_t seed, int parameter_sets,
                                             int momentum_points) {
    constexpr int kSpecies[] = {3, 5, 7, 9, 11};
    CounterRng rng(seed);
    std::vector<OracleCase> suite;
    suite.reserve(static_cast<std::size_t>(parameter_sets) * momentum_points + 2);

    for (int set = 0; set < parameter_sets; ++set) {
        ModelParams p;
        p.species_count = kSpecies[rng.next_u64() % 5];
        p.self_interaction = rng.uniform(0.5, 2.0);
        p.cross_interaction = rng.uniform(-0.5, 0.5);
        p.rabi = rng.uniform(-0.5, -0.01);
        p.density = rng.uniform(0.5, 2.0);
        p.atom_mass = rng.uniform(0.5, 2.0);

        const auto sweep = momentum_sweep("random-" + std::to_string(set), p, momentum_points);
        suite.insert(suite.end(), sweep.begin(), sweep.end());
    }

    ModelParams hand;
    hand.species_count = 3;
    hand.cross_interaction = 0.1;
    hand.rabi = -0.1;
    suite.push_back({"hand-N3-p0", hand, 0.0});

    ModelParams tachyonic;
    tachyonic.species_count = 9;
    tachyonic.cross_interaction = -0.1;
    tachyonic.rabi = 0.1;
    suite.push_back({"tachyonic-omega-positive", tachyonic, 0.0});
    return suite;
}

}  // namespace kkbec
