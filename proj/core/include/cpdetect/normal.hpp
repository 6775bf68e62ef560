#pragma once

namespace cpdetect {

/// Standard normal density phi(x).
double std_normal_pdf(double x);

/// Standard normal survival function, 1 - Phi(x).
/// Relative error below 1e-12 for |x| <= 8; throws on NaN input.
double std_normal_sf(double x);

/// log(std_normal_sf(x)), usable for tail arguments far beyond |x| = 8
/// where the survival function itself underflows.
double std_normal_log_sf(double x);

/// Inverse survival function: x with std_normal_sf(x) == q, 0 < q < 1.
/// Rational-approximation start refined by Newton steps on the survival
/// function; round-trips through std_normal_sf to 1e-10 absolute.
double std_normal_quantile_sf(double q);

} // namespace cpdetect
