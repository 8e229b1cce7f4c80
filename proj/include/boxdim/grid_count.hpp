#pragma once

#include <vector>

#include "boxdim/binary_grid.hpp"
#include "boxdim/series.hpp"

namespace boxdim {

// Count, for every scale s, the s*s*s aligned blocks holding at least
// one occupied voxel. Scales must be unique and within [1, resolution];
// blocks tile from the grid origin, so a scale that does not divide the
// resolution leaves thinner blocks on the far boundary. Power-of-two
// divisors run through an OR-reduction pyramid; every other scale falls
// back to a direct block scan. Both agree exactly with the naive
// triple-loop count. The returned series is ordered largest box first,
// with physical length s * voxelEdge.
BoxCountSeries countBoxesGrid(const BinaryGrid& grid, const std::vector<int>& scales);

// Default scale ladder for a grid: powers of two from 1 to
// resolution/2 that divide the resolution, ascending.
std::vector<int> gridScaleSchedule(int resolution);

// Snap a descending list of physical box lengths onto integer voxel
// multiples of this grid: round(length / voxelEdge) clamped to
// [1, resolution/2], deduplicated, ascending. The caller reports the
// snapped lengths (scale * voxelEdge), so the counts always describe
// the box size actually used.
std::vector<int> snapScalesToLengths(const std::vector<double>& lengths,
                                     const BinaryGrid& grid);

} // namespace boxdim
