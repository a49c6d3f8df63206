#include "kkbec/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "kkbec/errors.hpp"

namespace kkbec {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double value;
    double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * sum;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * sum;
        }
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct Adaptive {
    const std::function<double(double)>& f;
    int max_depth;
    int evaluations = 0;
    bool exhausted = false;

    Panel run(double lo, double hi, double tol, int depth) {
        const Panel whole = gauss_kronrod(f, lo, hi);
        evaluations += 15;
        if (whole.error <= tol) {
            return whole;
        }
        if (depth >= max_depth) {
            exhausted = true;
            return whole;
        }
        const double mid = 0.5 * (lo + hi);
        const Panel left = run(lo, mid, 0.5 * tol, depth + 1);
        const Panel right = run(mid, hi, 0.5 * tol, depth + 1);
        return {left.value + right.value, left.error + right.error};
    }
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                              double rel_tol, double abs_tol, int max_depth) {
    // A coarse pass fixes the scale for the relative tolerance.
    const Panel coarse = gauss_kronrod(f, lo, hi);
    const double tol = std::max(abs_tol, rel_tol * std::abs(coarse.value));
    Adaptive worker{f, max_depth};
    const Panel p = worker.run(lo, hi, tol, 0);
    if (worker.exhausted && p.error > tol) {
        throw QuadratureError("adaptive quadrature exhausted its depth", p.value, p.error);
    }
    return {p.value, p.error, 1, worker.evaluations + 15};
}

QuadResult integrate_sine_transform(const std::function<double(double)>& h, double omega,
                                    const QuadConfig& config) {
    if (!(omega > 0.0)) {
        throw QuadratureError("sine transform requires omega > 0", 0.0, 0.0);
    }
    const double period = std::numbers::pi / omega;
    auto integrand = [&](double x) { return h(x) * std::sin(omega * x); };

    QuadResult result;
    auto panel = [&](int k) {
        // Tolerance is absolute per panel so tail panels are resolved relative
        // to the overall sum, not to their own shrinking size.
        const double lo = k * period;
        const double hi = (k + 1) * period;
        const Panel coarse = gauss_kronrod(integrand, lo, hi);
        const double tol =
            std::max(config.abs_tol, config.rel_tol * std::max(std::abs(coarse.value),
                                                               std::abs(result.value)) * 0.01);
        Adaptive worker{integrand, config.max_depth};
        const Panel p = worker.run(lo, hi, tol, 0);
        result.evaluations += worker.evaluations + 15;
        ++result.panels;
        return p;
    };

    const int direct_panels =
        std::max(4, static_cast<int>(std::ceil(config.feature_scale / period)));
    if (direct_panels > config.max_panels) {
        throw QuadratureError("feature scale needs more panels than the budget allows", 0.0, 0.0);
    }
    double panel_error = 0.0;
    for (int k = 0; k < direct_panels; ++k) {
        const Panel p = panel(k);
        result.value += p.value;
        panel_error += p.error;
    }
    const double head = result.value;

    // Alternating tail: iterated averaging of partial sums (Euler transform).
    // averages[r] holds the newest entry of the r-th averaged sequence.
    std::vector<double> averages;
    double partial = 0.0;
    double previous_estimate = 0.0;
    double last_change = std::numeric_limits<double>::infinity();
    int small_changes = 0;
    for (int k = direct_panels; k < config.max_panels; ++k) {
        const Panel p = panel(k);
        partial += p.value;
        panel_error += p.error;

        double carry = partial;
        for (double& avg : averages) {
            const double next = 0.5 * (avg + carry);
            avg = carry;
            carry = next;
        }
        averages.push_back(carry);
        const double estimate = carry;
        result.value = head + estimate;

        if (averages.size() >= 3) {
            last_change = std::abs(estimate - previous_estimate);
            const double tol = std::max(config.abs_tol, config.rel_tol * std::abs(result.value));
            small_changes = last_change <= tol ? small_changes + 1 : 0;
            if (small_changes >= 3) {
                result.error_estimate = panel_error + 2.0 * last_change;
                return result;
            }
        }
        previous_estimate = estimate;
    }
    throw QuadratureError("alternating tail did not converge within the panel budget",
                          result.value, panel_error + last_change);
}

}  // namespace kkbec
