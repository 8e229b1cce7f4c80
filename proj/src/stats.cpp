#include "boxdim/stats.hpp"

#include <algorithm>
#include <cmath>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

// Continued fraction for the incomplete beta function (modified
// Lentz), valid for x < (a+1)/(a+b+2).
double betaContinuedFraction(double a, double b, double x) {
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

double quantileType7(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

} // namespace

double regularizedIncompleteBeta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double logFront = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(logFront);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betaContinuedFraction(a, b, x) / a;
    return 1.0 - front * betaContinuedFraction(b, a, 1.0 - x) / b;
}

double studentTQuantile(double p, int dof) {
    if (dof < 1) throw ConfigError("Student-t quantile needs at least 1 degree of freedom");
    if (!(p > 0.0 && p < 1.0))
        throw ConfigError("Student-t quantile probability must lie in (0, 1)");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -studentTQuantile(1.0 - p, dof);

    // For t >= 0: P(T > t) = I_x(dof/2, 1/2) / 2 at x = dof/(dof+t^2),
    // so the quantile solves I_x = 2(1-p); I_x is increasing in x and
    // the bisection below is robust for every dof.
    const double target = 2.0 * (1.0 - p);
    const double a = dof / 2.0;
    const double b = 0.5;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (regularizedIncompleteBeta(a, b, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    if (x <= 0.0) throw NumericError("Student-t quantile out of floating range");
    return std::sqrt(dof * (1.0 - x) / x);
}

double meanOf(const std::vector<double>& v) {
    if (v.empty()) throw ConfigError("mean of an empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double medianOf(std::vector<double> v) {
    if (v.empty()) throw ConfigError("median of an empty sample");
    std::sort(v.begin(), v.end());
    return quantileType7(v, 0.5);
}

std::vector<double> iqrFilter(const std::vector<double>& v) {
    if (v.size() < 4) return v; // quartiles are meaningless below this
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const double q1 = quantileType7(sorted, 0.25);
    const double q3 = quantileType7(sorted, 0.75);
    const double iqr = q3 - q1;
    const double lo = q1 - 1.5 * iqr;
    const double hi = q3 + 1.5 * iqr;
    std::vector<double> kept;
    kept.reserve(v.size());
    for (double x : v)
        if (x >= lo && x <= hi) kept.push_back(x);
    return kept;
}

} // namespace boxdim
