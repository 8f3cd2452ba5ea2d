#include "scriptstats/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace scriptstats {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;
constexpr double kTiny = 1e-300;

// Lower regularized gamma P(a,x) by power series around x = 0.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma Q(a,x) by the continued fraction (modified Lentz).
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0) throw std::domain_error("regularized_gamma_q: a must be positive");
    if (x < 0.0) throw std::domain_error("regularized_gamma_q: x must be non-negative");
    if (x == 0.0) return 1.0;
    // Series converges fast left of a+1, the continued fraction right of it.
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_sf(double x, int df) {
    if (df < 1) throw std::domain_error("chi_square_sf: df must be >= 1");
    if (x < 0.0) throw std::domain_error("chi_square_sf: x must be >= 0");
    return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace scriptstats
