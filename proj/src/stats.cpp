#include "stats.hpp"

#include <cmath>
#include <stdexcept>

namespace shikaku {

namespace {

// Regularized lower incomplete gamma P(a, x) by series expansion; valid
// for x < a + 1.
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by Lentz's continued
// fraction; valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chi_square_sf(double x, int df) {
    if (df < 1) throw std::invalid_argument("df must be positive");
    if (x <= 0.0) return 1.0;
    double a = df / 2.0;
    double half = x / 2.0;
    if (half < a + 1.0) return 1.0 - gamma_p_series(a, half);
    return gamma_q_cf(a, half);
}

ChiSquareTest chi_square_uniform(const std::vector<long>& counts) {
    if (counts.size() < 2)
        throw std::invalid_argument("need at least two bins");
    long total = 0;
    for (long c : counts) total += c;
    if (total == 0) throw std::invalid_argument("empty sample");
    double expected = static_cast<double>(total) / counts.size();
    ChiSquareTest t;
    for (long c : counts) {
        double d = c - expected;
        t.statistic += d * d / expected;
    }
    t.df = static_cast<int>(counts.size()) - 1;
    t.p_value = chi_square_sf(t.statistic, t.df);
    return t;
}

ChiSquareTest chi_square_two_sample(const std::vector<long>& a,
                                    const std::vector<long>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("samples binned differently");
    ChiSquareTest t;
    int used_bins = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double n = static_cast<double>(a[i]) + static_cast<double>(b[i]);
        if (n == 0.0) continue;
        ++used_bins;
        double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        t.statistic += d * d / n;
    }
    if (used_bins < 2) {
        // Both samples concentrated on one bin: identical by construction.
        t.df = 1;
        t.p_value = 1.0;
        return t;
    }
    t.df = used_bins - 1;
    t.p_value = chi_square_sf(t.statistic, t.df);
    return t;
}

}  // namespace shikaku
