#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kkbec/model.hpp"

namespace kkbec {

struct OracleCase {
    std::string label;
    ModelParams params;
    double momentum;
};

struct OracleComparison {
    OracleCase input;
    std::vector<double> closed_energy_sq;  ///< sorted
    std::vector<double> oracle_energy_sq;  ///< sorted
    /// Relative error on E when every closed-form E^2 is non-negative,
    /// otherwise on E^2 relative to max |E^2|.
    double rel_err;
    bool oracle_stable;
    bool closed_stable;

    bool stability_agrees() const { return oracle_stable == closed_stable; }
};

inline constexpr std::uint64_t kDefaultOracleSeed = 20180611;

/// Compares closed-form E_j^2 with the dense BdG eigenvalues for one case.
OracleComparison compare_with_oracle(const OracleCase& c);

/// One parameter set on a log grid of momenta p = eta / xi, eta in [1e-2, 10],
/// with xi taken from the largest positive per-mode sound speed.
std::vector<OracleCase> momentum_sweep(const std::string& label, const ModelParams& params,
                                       int momentum_points);

/// Randomized parameter sets (N in {3,5,7,9,11}; U in [0.5, 2], U' in
/// [-0.5, 0.5], Omega in [-0.5, -0.01], n, m in [0.5, 2]) crossed with a
/// log grid of momenta p = eta / xi, eta in [1e-2, 10]. Appends the N = 3
/// hand case at p = 0 and the tachyonic Omega = +0.1 case.
std::vector<OracleCase> default_oracle_suite(std::uint64_t seed, int parameter_sets = 100,
                                             int momentum_points = 20);

}  // namespace kkbec
