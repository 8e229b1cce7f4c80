#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "boxdim/neighbors.hpp"
#include "boxdim/series.hpp"
#include "boxdim/surface.hpp"
#include "boxdim/types.hpp"

namespace boxdim {

// Per-axis nearest and farthest coordinates of the interval
// [bMin, bMin + l] as seen from coordinate o. With o inside the
// interval the nearest coordinate is o itself and the farthest is the
// more distant interval end.
std::pair<double, double> nearFarCoord(double o, double bMin, double l);

// Grid boxes classified against the sphere union: `surface` holds the
// boxes cut by the outer surface, `bulk` the boxes strictly inside
// some sphere. The sets are disjoint (bulk wins) and sorted
// lexicographically by index triple.
struct BoxClassification {
    Vec3 origin = Vec3::Zero(); // grid anchor (structure minXYZ)
    double boxLen = 0.0;
    std::vector<std::array<std::int64_t, 3>> surface;
    std::vector<std::array<std::int64_t, 3>> bulk;

    std::int64_t surfaceCount() const { return static_cast<std::int64_t>(surface.size()); }
};

// Classify every candidate box around each surface atom on a cubic
// grid of edge boxLen anchored at the structure's minXYZ. For each
// atom the window of boxes within ceil((R + l)/l) indices of its
// containing box is scanned; a box whose nearest point is closer than
// R while its farthest point is beyond R cuts the surface, a box
// entirely inside the sphere is bulk, and bulk boxes are subtracted
// from the surface set at the end. With rmInSurf, boxes whose centers
// face the object interior (isInnerSide) are skipped, so internal
// cavity surfaces are not counted. Results are independent of
// numThreads.
BoxClassification exactBoxCount(const Structure& structure, const NeighborList& neighborList,
                                const SurfaceFlags& flags, double boxLen, bool rmInSurf,
                                int numThreads = 1);

// numBoxLen box lengths, geometrically spaced and descending from
// maxLenMult * R_max down to minLenMult * R_min.
std::vector<double> lengthSchedule(const Structure& structure, double minLenMult,
                                   double maxLenMult, int numBoxLen);

// Run exactBoxCount over a descending length schedule and collect the
// surface-box counts into one series.
BoxCountSeries exactBoxSeries(const Structure& structure, const NeighborList& neighborList,
                              const SurfaceFlags& flags, const std::vector<double>& lengths,
                              bool rmInSurf, int numThreads = 1);

} // namespace boxdim
