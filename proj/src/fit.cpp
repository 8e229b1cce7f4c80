#include "boxdim/fit.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "boxdim/errors.hpp"
#include "boxdim/stats.hpp"

namespace boxdim {

namespace {

void validateSeries(const BoxCountSeries& series) {
    if (series.lengths.size() != series.counts.size())
        throw ConfigError("box-count series has mismatched lengths and counts");
    if (series.size() < 2) throw ConfigError("box-count series needs at least two points");
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!(series.lengths[i] > 0.0))
            throw ConfigError("box lengths must be positive");
        if (i > 0 && !(series.lengths[i] < series.lengths[i - 1]))
            throw ConfigError("box lengths must be strictly descending");
        if (series.counts[i] < 1) throw ConfigError("box counts must be positive");
    }
}

void validateConfLvl(double confLvl) {
    if (!(confLvl > 0.0 && confLvl < 100.0))
        throw ConfigError("confidence level must lie strictly between 0 and 100 percent");
}

// OLS over the inclusive index window [p0, p1] of precomputed
// log-log coordinates.
OlsResult olsWindow(const std::vector<double>& xs, const std::vector<double>& ys, int p0,
                    int p1, double confLvl) {
    const int n = p1 - p0 + 1;
    if (n < 2) throw ConfigError("regression window needs at least two points");

    double xMean = 0.0, yMean = 0.0;
    for (int i = p0; i <= p1; ++i) {
        xMean += xs[static_cast<std::size_t>(i)];
        yMean += ys[static_cast<std::size_t>(i)];
    }
    xMean /= n;
    yMean /= n;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = p0; i <= p1; ++i) {
        const double dx = xs[static_cast<std::size_t>(i)] - xMean;
        const double dy = ys[static_cast<std::size_t>(i)] - yMean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw NumericError("box lengths carry no variance on the log scale");

    OlsResult r;
    r.n = n;
    r.slope = sxy / sxx;
    r.intercept = yMean - r.slope * xMean;

    const double ssr = std::max(0.0, syy - r.slope * sxy);
    const double sst = syy;
    // Residuals at floating-point noise level are a perfect fit: exact
    // r2 of 1 and a zero-width interval. A flat series (sst == 0) fits
    // its own mean exactly and counts as perfect too.
    const bool perfect = n == 2 || sst == 0.0 || ssr <= 1e-12 * sst;
    if (perfect) {
        r.r2 = 1.0;
        r.stderrSlope = 0.0;
        r.ciLow = r.ciHigh = r.slope;
        return r;
    }

    r.r2 = 1.0 - ssr / sst;
    r.stderrSlope = std::sqrt(ssr / ((n - 2) * sxx));
    const double t = studentTQuantile((1.0 + confLvl / 100.0) / 2.0, n - 2);
    r.ciLow = r.slope - t * r.stderrSlope;
    r.ciHigh = r.slope + t * r.stderrSlope;
    return r;
}

void logCoords(const BoxCountSeries& series, std::vector<double>& xs, std::vector<double>& ys) {
    const std::size_t n = series.size();
    xs.resize(n);
    ys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = -std::log(series.lengths[i]); // log(1/length)
        ys[i] = std::log(static_cast<double>(series.counts[i]));
    }
}

// Pre-removal of extreme box sizes: leading (largest) lengths whose
// count did not change from the next length, trailing (smallest)
// lengths whose local log-log slope dropped below 1. Keeps at least
// minSample points.
std::pair<int, int> preTrim(const BoxCountSeries& series, int minSample) {
    int b = 0;
    int e = static_cast<int>(series.size());
    while (e - b > minSample &&
           series.counts[static_cast<std::size_t>(b)] ==
               series.counts[static_cast<std::size_t>(b + 1)])
        ++b;
    while (e - b > minSample) {
        const double dy = std::log(static_cast<double>(series.counts[static_cast<std::size_t>(e - 1)])) -
                          std::log(static_cast<double>(series.counts[static_cast<std::size_t>(e - 2)]));
        const double dx = std::log(series.lengths[static_cast<std::size_t>(e - 2)]) -
                          std::log(series.lengths[static_cast<std::size_t>(e - 1)]);
        if (dy / dx < 1.0)
            --e;
        else
            break;
    }
    return {b, e};
}

FitResult makeResult(const OlsResult& ols, const BoxCountSeries& series, int p0, int p1) {
    FitResult out;
    out.dBox = ols.slope;
    out.ciLow = ols.ciLow;
    out.ciHigh = ols.ciHigh;
    out.r2 = ols.r2;
    out.intercept = ols.intercept;
    out.lMax = series.lengths[static_cast<std::size_t>(p0)];
    out.lMin = series.lengths[static_cast<std::size_t>(p1 - 1)];
    out.pointsUsed = p1 - p0;
    return out;
}

} // namespace

OlsResult olsLogLog(const BoxCountSeries& series, double confLvl) {
    validateSeries(series);
    validateConfLvl(confLvl);
    std::vector<double> xs, ys;
    logCoords(series, xs, ys);
    return olsWindow(xs, ys, 0, static_cast<int>(series.size()) - 1, confLvl);
}

FitResult fitSlope(const BoxCountSeries& series, int minSample, double confLvl, bool trimLen) {
    validateSeries(series);
    validateConfLvl(confLvl);
    if (minSample < 3) throw ConfigError("minSample must be at least 3");
    if (static_cast<int>(series.size()) < minSample)
        throw ConfigError("box-count series has fewer points than minSample");

    auto [p0, p1] = trimLen ? preTrim(series, minSample)
                            : std::pair<int, int>{0, static_cast<int>(series.size())};

    std::vector<double> xs, ys;
    logCoords(series, xs, ys);

    // Shrink the window while the fit keeps improving: first from the
    // small-length end, then from the large-length end. An r2 tie
    // counts as "still improving". The first worsening in the second
    // phase returns the window fitted just before it.
    double r2prev = -std::numeric_limits<double>::infinity();
    bool fromBack = true;
    FitResult stored;
    while (p1 - p0 >= minSample) {
        const OlsResult cur = olsWindow(xs, ys, p0, p1 - 1, confLvl);
        const bool worse = cur.r2 < r2prev;
        if (!fromBack && worse) return stored;
        const FitResult now = makeResult(cur, series, p0, p1);
        if (fromBack) {
            if (worse)
                fromBack = false;
            else
                --p1;
        } else {
            ++p0;
        }
        stored = now;
        r2prev = cur.r2;
    }
    return stored;
}

FitResult dimensionFromCounts(const BoxCountSeries& series, int minSample, double confLvl,
                              bool trimLen) {
    return fitSlope(series, minSample, confLvl, trimLen);
}

} // namespace boxdim
