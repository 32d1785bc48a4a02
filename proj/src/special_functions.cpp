#include "entrokit/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace entrokit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;
constexpr int kMaxIter = 1000000;

// Lower regularized gamma P(a, x) by power series; converges for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("igamc: series failed to converge");
}

// Upper regularized gamma Q(a, x) by modified Lentz continued fraction;
// converges for x > a + 1.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("igamc: continued fraction failed to converge");
}

} // namespace

double igamc(double a, double x) {
    if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x))
        throw std::invalid_argument("igamc requires a > 0 and x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

} // namespace entrokit
