// Special functions backing the statistical tests: regularized upper
// incomplete gamma and the standard normal CDF. Validated against a
// high-precision oracle table in the test suite (1e-10 relative).
#pragma once

namespace entrokit {

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
double igamc(double a, double x);

double normal_cdf(double x);

} // namespace entrokit
