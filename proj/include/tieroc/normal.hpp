#pragma once

namespace tieroc {

// Standard normal CDF via erfc; exact at +-inf.
double normal_cdf(double x) noexcept;

// Inverse standard normal CDF. Acklam's rational approximation (relative
// error below 1.15e-9) followed by one Halley step against normal_cdf, which
// brings it to near machine precision. Returns -inf / +inf at p = 0 / 1 and
// NaN outside [0, 1].
double normal_quantile(double p) noexcept;

// Two-sided critical value for a central interval: normal_quantile((1+level)/2).
double two_sided_z(double level) noexcept;

}  // namespace tieroc
