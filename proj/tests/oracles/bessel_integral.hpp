#pragma once

// Test-only reference for K1 through its integral representation
//   K1(x) = int_0^inf exp(-x cosh t) cosh t dt,
// integrated with adaptive Simpson in long double. Shares no code with the
// library's series / continued-fraction implementation.

#include <cmath>

namespace oracle {

namespace detail {

inline long double k1_integrand(long double x, long double t) {
    return std::exp(-x * std::cosh(t)) * std::cosh(t);
}

inline long double simpson(long double x, long double a, long double b, long double fa,
                           long double fm, long double fb, long double whole, long double tol,
                           int depth) {
    const long double m = 0.5L * (a + b);
    const long double lm = 0.5L * (a + m);
    const long double rm = 0.5L * (m + b);
    const long double flm = k1_integrand(x, lm);
    const long double frm = k1_integrand(x, rm);
    const long double left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const long double right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    const long double diff = left + right - whole;
    if (depth <= 0 || std::fabs(diff) <= 15.0L * tol) {
        return left + right + diff / 15.0L;
    }
    return simpson(x, a, m, fa, flm, fm, left, 0.5L * tol, depth - 1) +
           simpson(x, m, b, fm, frm, fb, right, 0.5L * tol, depth - 1);
}

}  // namespace detail

/// K1(x) for x > 0 to roughly 1e-13 relative.
inline double bessel_k1_integral(double x_in) {
    const long double x = x_in;
    // exp(-x cosh t) < 1e-40 beyond this t.
    const long double upper = std::acosh(1.0L + 92.0L / x);
    // Split so each piece sees a comparable share of the mass.
    const long double knots[] = {0.0L, 0.25L * upper, 0.5L * upper, 0.75L * upper, upper};
    // Tolerance scale ~ K1(x): sqrt(pi / 2x) e^-x (1 + 1/x).
    const long double scale = std::sqrt(1.5707963267948966L / x) * std::exp(-x) * (1.0L + 1.0L / x);
    long double total = 0.0L;
    for (int i = 0; i < 4; ++i) {
        const long double a = knots[i];
        const long double b = knots[i + 1];
        const long double fa = detail::k1_integrand(x, a);
        const long double fb = detail::k1_integrand(x, b);
        const long double fm = detail::k1_integrand(x, 0.5L * (a + b));
        const long double whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
        total += detail::simpson(x, a, b, fa, fm, fb, whole, 1e-17L * scale, 50);
    }
    return static_cast<double>(total);
}

}  // namespace oracle
