#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "kkbec/kernels.hpp"
#include "test_params.hpp"

using namespace kkbec;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("dispersion grid: serial and parallel agree bit for bit") {
    std::vector<double> etas;
    for (int i = 0; i < 40; ++i) {
        etas.push_back(std::pow(10.0, -2.0 + 3.0 * i / 39.0));
    }
    etas.push_back(0.0);
    const auto a = dispersion_grid_serial(testing::standard(), etas);
    const auto b = dispersion_grid_parallel(testing::standard(), etas);
    REQUIRE(a.size() == 9 * etas.size());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].j == b[i].j);
        CHECK(a[i].kk_label == b[i].kk_label);
        CHECK(same_bits(a[i].energy, b[i].energy));
        CHECK(same_bits(a[i].energy_over_csp, b[i].energy_over_csp));
    }
    CHECK(a.front().j == 0);
    CHECK(a.back().j == 8);
}

TEST_CASE("dispersion grid marks tachyonic points") {
    ModelParams p = testing::standard();
    p.cross_interaction = -0.1;
    p.rabi = 0.1;
    const std::vector<double> etas{0.0, 0.05};
    const auto rows = dispersion_grid_serial(p, etas);
    bool any_nan = false;
    for (const auto& r : rows) {
        any_nan = any_nan || std::isnan(r.energy);
    }
    CHECK(any_nan);
}

TEST_CASE("correlation grid: serial and parallel agree bit for bit") {
    const std::vector<double> s{2.0, 5.0, 11.0, 20.0, 33.0};
    CorrelationGrid grid;
    grid.s_values = s;
    const auto a = correlation_grid_serial(testing::correlator_regime(), grid);
    const auto b = correlation_grid_parallel(testing::correlator_regime(), grid);
    REQUIRE(a.size() == s.size());
    REQUIRE(b.size() == s.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(!a[i].failed);
        CHECK(same_bits(a[i].s, b[i].s));
        CHECK(same_bits(a[i].analytic, b[i].analytic));
        CHECK(same_bits(a[i].numeric, b[i].numeric));
        CHECK(same_bits(a[i].numeric_error, b[i].numeric_error));
        CHECK(same_bits(a[i].truncated, b[i].truncated));
    }
}

TEST_CASE("oracle sweep: serial and parallel agree bit for bit") {
    const auto cases = default_oracle_suite(kDefaultOracleSeed, 8, 5);
    const auto a = oracle_sweep_serial(cases);
    const auto b = oracle_sweep_parallel(cases);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(same_bits(a[i].rel_err, b[i].rel_err));
        CHECK(a[i].oracle_energy_sq == b[i].oracle_energy_sq);
    }
}
