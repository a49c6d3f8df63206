// Serial vs OpenMP timings for the grid kernels.

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "kkbec/kernels.hpp"
#include "kkbec/model.hpp"
#include "kkbec/oracle_check.hpp"

using namespace kkbec;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = INFINITY;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-12s serial %9.4f s  parallel %9.4f s  speedup %5.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    const ModelParams tower = normalized_params(81, 0.1, true);
    std::vector<double> etas;
    for (int i = 0; i < 2000; ++i) {
        etas.push_back(std::pow(10.0, -3.0 + 4.5 * i / 1999.0));
    }
    report("dispersion", best_of(3, [&] { dispersion_grid_serial(tower, etas); }),
           best_of(3, [&] { dispersion_grid_parallel(tower, etas); }));

    std::vector<double> s_values;
    for (int i = 0; i < 64; ++i) {
        s_values.push_back(2.0 + 38.0 * i / 63.0);
    }
    CorrelationGrid grid;
    grid.s_values = s_values;
    const ModelParams fig = normalized_params(9, 1e-3, true);
    report("correlation", best_of(3, [&] { correlation_grid_serial(fig, grid); }),
           best_of(3, [&] { correlation_grid_parallel(fig, grid); }));

    const auto cases = default_oracle_suite(kDefaultOracleSeed, 400, 20);
    report("oracle", best_of(3, [&] { oracle_sweep_serial(cases); }),
           best_of(3, [&] { oracle_sweep_parallel(cases); }));
    return 0;
}
