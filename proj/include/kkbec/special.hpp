#pragma once

namespace kkbec {

/// Modified Bessel function of the second kind of order one, x > 0.
/// Power series for x <= 2, Steed's continued fraction above. Throws
/// DomainError for x <= 0 or NaN.
double bessel_k1(double x);

/// Order zero, same scheme. Exposed mainly for testing the recurrence pair.
double bessel_k0(double x);

}  // namespace kkbec
