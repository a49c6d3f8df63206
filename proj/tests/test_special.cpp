#include <doctest.h>

#include <cmath>
#include <limits>

#include "kkbec/errors.hpp"
#include "kkbec/special.hpp"
#include "oracles/bessel_integral.hpp"

using kkbec::bessel_k0;
using kkbec::bessel_k1;

TEST_CASE("K1 reference value") {
    CHECK(oracle::bessel_k1_integral(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-13));
    CHECK(bessel_k1(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-14));
}

TEST_CASE("K1 against the integral representation on [1e-3, 30]") {
    for (int i = 0; i < 50; ++i) {
        const double x = std::pow(10.0, -3.0 + (std::log10(30.0) + 3.0) * i / 49.0);
        const double reference = oracle::bessel_k1_integral(x);
        CAPTURE(x);
        CHECK(std::abs(bessel_k1(x) - reference) <= 1e-10 * reference);
    }
}

TEST_CASE("K1 is continuous across the series / continued-fraction switch") {
    const double below = bessel_k1(std::nextafter(2.0, 0.0));
    const double above = bessel_k1(std::nextafter(2.0, 3.0));
    CHECK(above == doctest::Approx(below).epsilon(1e-14));
}

TEST_CASE("K1 limits") {
    CHECK(1e-4 * bessel_k1(1e-4) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(1e-8 * bessel_k1(1e-8) == doctest::Approx(1.0).epsilon(1e-14));
    // Large x: K1 ~ sqrt(pi / 2x) e^-x (1 + 3/(8x)).
    const double x = 200.0;
    const double leading = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) * (1.0 + 3.0 / (8.0 * x));
    CHECK(bessel_k1(x) == doctest::Approx(leading).epsilon(1e-5));
}

TEST_CASE("K1 matches the standard library where available") {
    for (double x : {1e-3, 0.1, 1.0, 1.999, 2.0, 2.001, 5.0, 12.0, 30.0, 80.0}) {
        CAPTURE(x);
        CHECK(bessel_k1(x) == doctest::Approx(std::cyl_bessel_k(1.0, x)).epsilon(1e-13));
        CHECK(bessel_k0(x) == doctest::Approx(std::cyl_bessel_k(0.0, x)).epsilon(1e-13));
    }
}

TEST_CASE("Wronskian-type identity K0' = -K1 via finite differences") {
    for (double x : {0.3, 1.5, 2.5, 7.0}) {
        const double h = 1e-5 * x;
        const double derivative = (bessel_k0(x + h) - bessel_k0(x - h)) / (2.0 * h);
        CHECK(derivative == doctest::Approx(-bessel_k1(x)).epsilon(1e-8));
    }
}

TEST_CASE("K1 domain") {
    CHECK_THROWS_AS(bessel_k1(0.0), kkbec::DomainError);
    CHECK_THROWS_AS(bessel_k1(-1.0), kkbec::DomainError);
    CHECK_THROWS_AS(bessel_k1(std::numeric_limits<double>::quiet_NaN()), kkbec::DomainError);
}

TEST_CASE("K1 frozen reference table") {
    const double table[][2] = {
        {1e-3, 999.99623815608557},     {0.5, 1.6564411200033009},
        {1.0, 0.60190723019723457},     {2.0, 0.13986588181652243},
        {2.5, 0.073890816347747064},    {10.0, 1.8648773453825585e-5},
        {30.0, 2.1677320018915494e-14},
    };
    for (const auto& row : table) {
        CAPTURE(row[0]);
        CHECK(bessel_k1(row[0]) == doctest::Approx(row[1]).epsilon(2e-15));
    }
}
