#pragma once

#include <functional>

namespace kkbec {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-15;
    /// Panels integrated directly before the alternating-tail acceleration
    /// starts are at least those below this abscissa.
    double feature_scale = 8.0;
    int max_panels = 4000;
    int max_depth = 40;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
    int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) on [lo, hi]. Throws QuadratureError when the
/// recursion depth is exhausted before the tolerance is met.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, double abs_tol, int max_depth = 40);

/// Integral over [0, inf) of h(x) sin(omega x) for h smooth and slowly
/// (algebraically) decaying. The half-periods between consecutive zeros of
/// sin(omega x) are integrated adaptively; beyond the feature scale the
/// alternating panel series is summed with iterated Euler averaging of its
/// partial sums. Conditionally convergent integrands (h ~ 1/x) are summed in
/// the Abel sense. Throws QuadratureError on non-convergence.
QuadResult integrate_sine_transform(const std::function<double(double)>& h, double omega,
                                    const QuadConfig& config = {});

}  // namespace kkbec
