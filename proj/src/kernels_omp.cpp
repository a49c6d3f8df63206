#include <exception>
#include <vector>

#include <omp.h>

#include "kkbec/kernels.hpp"

namespace kkbec {

namespace {

// Rethrows the first exception captured inside a parallel region.
class ExceptionSlot {
public:
    template <class F>
    void run(F&& f) {
        try {
            f();
        } catch (...) {
#pragma omp critical(kkbec_exception_slot)
            if (!error_) {
                error_ = std::current_exception();
            }
        }
    }
    void rethrow() const {
        if (error_) {
            std::rethrow_exception(error_);
        }
    }

private:
    std::exception_ptr error_;
};

}  // namespace

std::vector<DispersionRow> dispersion_grid_parallel(const ModelParams& params,
                                                    std::span<const double> etas) {
    const DerivedScales scales =
        derive_scales(params, check_mono_metricity(params, kMonoMetricTolerance));
    const long n_eta = static_cast<long>(etas.size());
    const long total = params.species_count * n_eta;
    std::vector<DispersionRow> rows(total);
    ExceptionSlot slot;
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
        slot.run([&] {
            const int j = static_cast<int>(idx / n_eta);
            rows[idx] = detail::dispersion_point(params, j, etas[idx % n_eta],
                                                 scales.healing_length, scales.sound_speed);
        });
    }
    slot.rethrow();
    return rows;
}

std::vector<CorrelationRow> correlation_grid_parallel(const ModelParams& params,
                                                      const CorrelationGrid& grid) {
    const long n = static_cast<long>(grid.s_values.size());
    std::vector<CorrelationRow> rows(n);
    ExceptionSlot slot;
    // Cost grows with s (more oscillation panels), so hand out points dynamically.
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        slot.run([&] { rows[i] = detail::correlation_point(params, grid, grid.s_values[i]); });
    }
    slot.rethrow();
    return rows;
}

std::vector<OracleComparison> oracle_sweep_parallel(std::span<const OracleCase> cases) {
    const long n = static_cast<long>(cases.size());
    std::vector<OracleComparison> out(n);
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        slot.run([&] { out[i] = compare_with_oracle(cases[i]); });
    }
    slot.rethrow();
    return out;
}

}  // namespace kkbec
