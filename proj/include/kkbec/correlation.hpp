#pragma once

#include "kkbec/model.hpp"
#include "kkbec/quadrature.hpp"

namespace kkbec {

// Equal-time two-point correlators of the analog field, all in units of
// xi^-3. Parameters must satisfy mono-metricity (nU' = -Omega).

struct CorrelationQuery {
    ModelParams params;
    double s;   ///< |x2 - x1| / xi, > 0
    int delta;  ///< |k2 - k1| in {0, ..., N-1}
};

struct NumericCorrelation {
    double value;
    double error_estimate;
    /// Sum of sin(2 pi j delta / N) I_j; vanishes by the j <-> N-j pairing.
    double imaginary_part;
    /// Contribution of the subtracted 1/N large-eta constant. It is a
    /// delta function at s = 0, so zero for every admissible query.
    double contact_term;
};

struct CorrelationSample {
    CorrelationQuery query;
    double analytic;
    double numeric;
    double truncated;
    double quadrature_error_estimate;
};

/// Continuum five-dimensional correlator
/// R_l / (2 sqrt(2) pi^2 (s^2 + (R_l delta)^2)^(3/2)).
double analytic_corr(const CorrelationQuery& query);

/// Dimensionless (u_j - v_j)^2 at eta = p xi:
/// (1/N) [(1 + eta^2) + sqrt(1 - mu_j^2)] / sqrt(mu_j^2 + 2 eta^2 + eta^4)
/// with mu_j = E_rj / (m c_s^2). Throws ValidityError if mu_j > 1 and
/// DegenerateModeError at (j, eta) = (0, 0).
double mode_integrand(const ModelParams& params, int j, double eta);

/// Radial integral I_j = int_0^inf eta sin(eta s) [f_j(eta) - 1/N] d eta.
QuadResult mode_radial_integral(const ModelParams& params, int j, double s,
                                const QuadConfig& config = {});

/// Mode sum sum_j cos(2 pi j delta / N) I_j / (2 pi^2 s).
NumericCorrelation numeric_corr(const CorrelationQuery& query, const QuadConfig& config = {});

/// Relativistic truncation over signed labels |n| <= j_tr of
/// (1/N) R_m K1(R_m s) / (sqrt(2) pi^2 s), R_m = alpha_n / R_l. With
/// cosine_weights each term is multiplied by cos(2 pi n delta / N); without,
/// delta is ignored.
double truncated_corr(const CorrelationQuery& query, int j_tr, bool cosine_weights = true);

/// All three correlators at one point.
CorrelationSample sample_correlation(const CorrelationQuery& query, int j_tr,
                                     const QuadConfig& config = {}, bool cosine_weights = true);

}  // namespace kkbec
