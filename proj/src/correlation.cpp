#include "kkbec/correlation.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "kkbec/errors.hpp"
#include "kkbec/special.hpp"
#include "kkbec/spectrum.hpp"

namespace kkbec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_mono_metric(const ModelParams& params) {
    if (!check_mono_metricity(params, kMonoMetricTolerance)) {
        throw PreconditionError("correlators require nU' = -Omega");
    }
}

void check_query(const CorrelationQuery& q) {
    require_mono_metric(q.params);
    if (!(q.s > 0.0) || !std::isfinite(q.s)) {
        throw PreconditionError("separation s must be positive and finite");
    }
    if (q.delta < 0 || q.delta >= q.params.species_count) {
        throw PreconditionError("synthetic separation delta outside [0, N-1]: " +
                                std::to_string(q.delta));
    }
}

// Gap in units of the cutoff energy, mu_j^2 = E_rj^2 / (m c_s^2)^2.
double reduced_gap_sq(const ModelParams& params, int j) {
    const DerivedScales scales = derive_scales(params, true);
    const double ratio = rest_energy_sq(params, j) / (scales.cutoff_energy * scales.cutoff_energy);
    if (ratio > 1.0) {
        throw ValidityError("gap of mode " + std::to_string(j) + " exceeds the cutoff energy");
    }
    if (ratio < 0.0) {
        throw StabilityError("tachyonic mode " + std::to_string(j), ratio);
    }
    return ratio;
}

double reduced_integrand(double mu_sq, double inv_n, double eta) {
    const double eta_sq = eta * eta;
    const double top = (1.0 + eta_sq) + std::sqrt(1.0 - mu_sq);
    return inv_n * top / std::sqrt(mu_sq + eta_sq * (2.0 + eta_sq));
}

}  // namespace

double analytic_corr(const CorrelationQuery& query) {
    check_query(query);
    const double rl = derive_scales(query.params, true).length_ratio;
    const double transverse = rl * query.delta;
    const double dist_sq = query.s * query.s + transverse * transverse;
    return rl / (2.0 * kSqrt2 * kPi * kPi * dist_sq * std::sqrt(dist_sq));
}

double mode_integrand(const ModelParams& params, int j, double eta) {
    require_mono_metric(params);
    if (!(eta >= 0.0)) {
        throw PreconditionError("eta must be non-negative");
    }
    const double mu_sq = reduced_gap_sq(params, j);
    if (mu_sq == 0.0 && eta == 0.0) {
        throw DegenerateModeError("(u - v)^2 diverges for the gapless mode at eta = 0");
    }
    return reduced_integrand(mu_sq, 1.0 / params.species_count, eta);
}

QuadResult mode_radial_integral(const ModelParams& params, int j, double s,
                                const QuadConfig& config) {
    require_mono_metric(params);
    const double mu_sq = reduced_gap_sq(params, j);
    const double inv_n = 1.0 / params.species_count;
    auto h = [mu_sq, inv_n](double eta) {
        // f - 1/N written without cancellation:
        // [(1 + eta^2 + w) - d] / d with d = sqrt(mu^2 + 2 eta^2 + eta^4), w = sqrt(1 - mu^2),
        // and (1 + eta^2)^2 - d^2 = 1 - mu^2 = w^2.
        const double eta_sq = eta * eta;
        const double w = std::sqrt(1.0 - mu_sq);
        const double d = std::sqrt(mu_sq + eta_sq * (2.0 + eta_sq));
        const double a = 1.0 + eta_sq;
        const double excess = w + w * w / (a + d);  // (a + w) - d
        return eta * inv_n * excess / d;
    };
    return integrate_sine_transform(h, s, config);
}

NumericCorrelation numeric_corr(const CorrelationQuery& query, const QuadConfig& config) {
    check_query(query);
    const int N = query.params.species_count;
    const int half = (N - 1) / 2;
    std::vector<QuadResult> folded;
    folded.reserve(half + 1);
    for (int k = 0; k <= half; ++k) {
        folded.push_back(mode_radial_integral(query.params, k, query.s, config));
    }

    const double prefactor = 1.0 / (2.0 * kPi * kPi * query.s);
    NumericCorrelation out{0.0, 0.0, 0.0, 0.0};
    for (int j = 0; j < N; ++j) {
        const QuadResult& r = folded[folded_index(N, j)];
        const double phase = 2.0 * kPi * j * query.delta / N;
        out.value += std::cos(phase) * r.value;
        out.imaginary_part -= std::sin(phase) * r.value;
        out.error_estimate += std::abs(std::cos(phase)) * r.error_estimate;
    }
    out.value *= prefactor;
    out.imaginary_part *= prefactor;
    out.error_estimate *= prefactor;
    return out;
}

double truncated_corr(const CorrelationQuery& query, int j_tr, bool cosine_weights) {
    check_query(query);
    const int N = query.params.species_count;
    if (j_tr < 0 || j_tr > (N - 1) / 2) {
        throw PreconditionError("truncation j_tr outside [0, (N-1)/2]: " + std::to_string(j_tr));
    }
    const double rl = derive_scales(query.params, true).length_ratio;
    const double s = query.s;
    const double norm = 1.0 / (N * kSqrt2 * kPi * kPi * s);

    // n = 0: R_m K1(R_m s) -> 1/s.
    double total = norm / s;
    for (int n = 1; n <= j_tr; ++n) {
        const double alpha = 2.0 * kPi * n / N;
        const double rm = alpha / rl;
        const double weight = cosine_weights ? std::cos(alpha * query.delta) : 1.0;
        // Labels +n and -n contribute equally.
        total += 2.0 * weight * norm * rm * bessel_k1(rm * s);
    }
    return total;
}

CorrelationSample sample_correlation(const CorrelationQuery& query, int j_tr,
                                     const QuadConfig& config, bool cosine_weights) {
    const NumericCorrelation numeric = numeric_corr(query, config);
    return {query, analytic_corr(query), numeric.value, truncated_corr(query, j_tr, cosine_weights),
            numeric.error_estimate};
}

}  // namespace kkbec
