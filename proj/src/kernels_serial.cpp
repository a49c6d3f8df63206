#include <cmath>
#include <limits>

#include "kkbec/errors.hpp"
#include "kkbec/kernels.hpp"
#include "kkbec/spectrum.hpp"

namespace kkbec {

namespace detail {

DispersionRow dispersion_point(const ModelParams& params, int j, double eta, double xi, double cs) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const ModeIndex mode = ModeIndex::make(params.species_count, j);
    DispersionRow row{j, mode.kk_label, eta, eta / xi, nan, nan};
    const double e_sq = dispersion_sq(params, j, row.momentum);
    if (e_sq >= 0.0) {
        row.energy = std::sqrt(e_sq);
        if (row.momentum > 0.0) {
            row.energy_over_csp = row.energy / (cs * row.momentum);
        }
    }
    return row;
}

CorrelationRow correlation_point(const ModelParams& params, const CorrelationGrid& grid, double s) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const CorrelationQuery q{params, s, grid.delta};
    CorrelationRow row{s, grid.delta, analytic_corr(q), nan, nan,
                       truncated_corr(q, grid.j_tr, grid.cosine_weights), false};
    try {
        const NumericCorrelation numeric = numeric_corr(q, grid.quad);
        row.numeric = numeric.value;
        row.numeric_error = numeric.error_estimate;
    } catch (const QuadratureError&) {
        row.failed = true;
    }
    return row;
}

}  // namespace detail

namespace {

struct DispersionScales {
    double xi;
    double cs;
};

DispersionScales dispersion_scales(const ModelParams& params) {
    const DerivedScales scales =
        derive_scales(params, check_mono_metricity(params, kMonoMetricTolerance));
    return {scales.healing_length, scales.sound_speed};
}

}  // namespace

std::vector<DispersionRow> dispersion_grid_serial(const ModelParams& params,
                                                  std::span<const double> etas) {
    const auto [xi, cs] = dispersion_scales(params);
    std::vector<DispersionRow> rows;
    rows.reserve(params.species_count * etas.size());
    for (int j = 0; j < params.species_count; ++j) {
        for (double eta : etas) {
            rows.push_back(detail::dispersion_point(params, j, eta, xi, cs));
        }
    }
    return rows;
}

std::vector<CorrelationRow> correlation_grid_serial(const ModelParams& params,
                                                    const CorrelationGrid& grid) {
    std::vector<CorrelationRow> rows;
    rows.reserve(grid.s_values.size());
    for (double s : grid.s_values) {
        rows.push_back(detail::correlation_point(params, grid, s));
    }
    return rows;
}

std::vector<OracleComparison> oracle_sweep_serial(std::span<const OracleCase> cases) {
    std::vector<OracleComparison> out;
    out.reserve(cases.size());
    for (const OracleCase& c : cases) {
        out.push_back(compare_with_oracle(c));
    }
    return out;
}

}  // namespace kkbec
