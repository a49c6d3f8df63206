#include "kkbec/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "kkbec/errors.hpp"

namespace kkbec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 10000;

void check_domain(double x) {
    if (!(x > 0.0)) {
        throw DomainError("Bessel K requires x > 0, got " + std::to_string(x));
    }
}

// K0 and K1 from their ascending series,
//   K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} H_k t^k / (k!)^2
//   K1 = 1/x + ln(x/2) I1 - (x/4) sum_{k>=0} (psi(k+1) + psi(k+2)) t^k / (k! (k+1)!)
// with t = x^2/4 and psi(k+1) = H_k - gamma.
std::pair<double, double> series_k0_k1(double x) {
    const double t = 0.25 * x * x;
    const double log_half = std::log(0.5 * x);
    const double gamma = std::numbers::egamma;

    double i0 = 1.0;
    double i1 = 0.5 * x;
    double k0_sum = 0.0;
    double k1_sum = 0.0;

    double term0 = 1.0;          // t^k / (k!)^2
    double term1 = 1.0;          // t^k / (k! (k+1)!)
    double harmonic = 0.0;       // H_k
    k1_sum = -2.0 * gamma + 1.0; // psi(1) + psi(2) at k = 0
    for (int k = 1; k < kMaxIter; ++k) {
        term0 *= t / (static_cast<double>(k) * k);
        term1 *= t / (static_cast<double>(k) * (k + 1));
        harmonic += 1.0 / k;
        const double psi_k1 = harmonic - gamma;
        const double psi_k2 = psi_k1 + 1.0 / (k + 1);
        i0 += term0;
        i1 += 0.5 * x * term1;
        k0_sum += harmonic * term0;
        const double inc = (psi_k1 + psi_k2) * term1;
        k1_sum += inc;
        if (std::abs(term0) < kEps * std::abs(i0) && std::abs(inc) < kEps * std::abs(k1_sum)) {
            break;
        }
    }
    const double k0 = -(log_half + gamma) * i0 + k0_sum;
    const double k1 = 1.0 / x + log_half * i1 - 0.25 * x * k1_sum;
    return {k0, k1};
}

// Steed's method for the continued fraction of K_nu / K_{nu+1} at nu = 0,
// giving K0 and K1 directly (Temme's CF2 normalization).
std::pair<double, double> steed_k0_k1(double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;  // 0.25 - nu^2
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < kMaxIter; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            break;
        }
    }
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = k0 * (x + 0.5 - a1 * h) / x;
    return {k0, k1};
}

std::pair<double, double> k0_k1(double x) {
    check_domain(x);
    return x <= 2.0 ? series_k0_k1(x) : steed_k0_k1(x);
}

}  // namespace

double bessel_k1(double x) { return k0_k1(x).second; }

double bessel_k0(double x) { return k0_k1(x).first; }

}  // namespace kkbec
