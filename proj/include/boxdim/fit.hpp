#pragma once

#include "boxdim/series.hpp"

namespace boxdim {

// Plain least-squares line through (log(1/length), log(count)).
struct OlsResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    double stderrSlope = 0.0;
    double ciLow = 0.0;
    double ciHigh = 0.0;
    int n = 0;
};

// Regress log(count) on log(1/length) over the whole series; the
// slope is the dimension estimate, with a Student-t confidence
// interval at confLvl percent. Residuals below 1e-12 of the total
// variation count as a perfect fit: r2 is exactly 1 and the interval
// has zero width. Throws ConfigError for fewer than two points and
// NumericError when the lengths carry no variance.
OlsResult olsLogLog(const BoxCountSeries& series, double confLvl);

struct FitResult {
    double dBox = 0.0;
    double ciLow = 0.0;
    double ciHigh = 0.0;
    double r2 = 0.0;
    double intercept = 0.0; // of the log-log fit line
    double lMin = 0.0;      // smallest retained length
    double lMax = 0.0;      // largest retained length
    int pointsUsed = 0;
};

// Automatic fitting-range selection: fit the full series, drop the
// smallest-length point while r2 does not drop, then drop the
// largest-length point the same way, returning the window fitted just
// before the first drop in that second phase; windows never shrink
// below minSample points. Ties in r2 count as "did not drop", so
// trimming continues through them. With trimLen, extreme-size lengths
// are removed first: leading lengths whose count equals the next
// count (saturated large boxes) and trailing lengths where the local
// log-log slope falls below 1 (the smooth-surface regime).
FitResult fitSlope(const BoxCountSeries& series, int minSample, double confLvl, bool trimLen);

// Single entry point used by both counting pipelines.
FitResult dimensionFromCounts(const BoxCountSeries& series, int minSample, double confLvl,
                              bool trimLen);

} // namespace boxdim
