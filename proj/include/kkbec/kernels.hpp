#pragma once

#include <span>
#include <vector>

#include "kkbec/correlation.hpp"
#include "kkbec/model.hpp"
#include "kkbec/oracle_check.hpp"
#include "kkbec/quadrature.hpp"

namespace kkbec {

// Grid kernels behind the CLI. Each has a serial reference and an OpenMP
// version; both evaluate every grid point with the same code, so their
// outputs are bit-identical regardless of thread count or scheduling.

struct DispersionRow {
    int j;
    int kk_label;
    double eta;
    double momentum;
    double energy;          ///< NaN if tachyonic at this momentum
    double energy_over_csp; ///< E / (c_s p); NaN at p = 0
};

struct CorrelationRow {
    double s;
    int delta;
    double analytic;
    double numeric;
    double numeric_error;
    double truncated;
    bool failed;  ///< numeric quadrature failed; numeric fields are NaN
};

struct CorrelationGrid {
    std::span<const double> s_values;
    int delta = 1;
    int j_tr = 2;
    bool cosine_weights = true;
    QuadConfig quad;
};

/// Rows ordered by j, then by eta. p = eta / xi with xi from derive_scales.
std::vector<DispersionRow> dispersion_grid_serial(const ModelParams& params,
                                                  std::span<const double> etas);
std::vector<DispersionRow> dispersion_grid_parallel(const ModelParams& params,
                                                    std::span<const double> etas);

std::vector<CorrelationRow> correlation_grid_serial(const ModelParams& params,
                                                    const CorrelationGrid& grid);
std::vector<CorrelationRow> correlation_grid_parallel(const ModelParams& params,
                                                      const CorrelationGrid& grid);

std::vector<OracleComparison> oracle_sweep_serial(std::span<const OracleCase> cases);
std::vector<OracleComparison> oracle_sweep_parallel(std::span<const OracleCase> cases);

namespace detail {
DispersionRow dispersion_point(const ModelParams& params, int j, double eta, double xi, double cs);
CorrelationRow correlation_point(const ModelParams& params, const CorrelationGrid& grid, double s);
}  // namespace detail

}  // namespace kkbec
