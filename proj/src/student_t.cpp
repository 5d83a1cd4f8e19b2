#include "gatesim/student_t.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gatesim/errors.hpp"

namespace gatesim {

namespace {

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta (modified Lentz). Converges
// quickly for x < (a+1)/(a+b+2); the caller applies the symmetry otherwise.
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("incomplete beta requires a, b > 0");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("incomplete beta requires x in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
    if (!(df >= 1.0)) throw DomainError("student_t_cdf requires df >= 1");
    if (!std::isfinite(t)) throw DomainError("student_t_cdf requires finite t");
    if (t == 0.0) return 0.5;
    const double x = df / (df + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x);
    return t > 0.0 ? 1.0 - tail : tail;
}

double two_tailed_p(double t, double df) {
    if (!(df >= 1.0)) throw DomainError("two_tailed_p requires df >= 1");
    if (!std::isfinite(t)) throw DomainError("two_tailed_p requires finite t");
    if (t == 0.0) return 1.0;
    const double x = df / (df + t * t);
    return std::clamp(regularized_incomplete_beta(0.5 * df, 0.5, x), 0.0, 1.0);
}

double t_critical(double quantile, double df) {
    if (!(df >= 1.0)) throw DomainError("t_critical requires df >= 1");
    if (!(quantile > 0.0 && quantile < 1.0)) {
        throw DomainError("t_critical requires quantile in (0, 1)");
    }
    if (quantile == 0.5) return 0.0;
    if (quantile < 0.5) return -t_critical(1.0 - quantile, df);

    double lo = 0.0;
    double hi = 1.0;
    while (student_t_cdf(hi, df) < quantile) {
        hi *= 2.0;
        if (hi > 1e300) throw DomainError("t_critical: quantile too close to 1");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, df) < quantile) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace gatesim
