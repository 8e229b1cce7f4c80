#pragma once

#include <vector>

#include "boxdim/neighbors.hpp"
#include "boxdim/surface.hpp"
#include "boxdim/types.hpp"

namespace boxdim {

// Point-sampled representation of the sphere-union surface. Every
// point lies exactly on its owner atom's sphere and not strictly
// inside any other atom's sphere.
struct PointCloud {
    std::vector<Vec3> points;
    std::vector<int> ownerAtom; // same arity as points

    std::size_t size() const { return points.size(); }
};

// Place numPoints Fibonacci-spiral candidates on every surface atom's
// sphere and keep the ones on the union boundary: a candidate is
// dropped when it falls strictly inside a neighboring sphere, and,
// with rmInSurf, when it faces the object interior (isInnerSide).
// Output order is atom-major then spiral order, so the cloud is
// identical for any numThreads.
PointCloud genSurfacePoints(const Structure& structure, const NeighborList& neighborList,
                            const SurfaceFlags& flags, int numPoints, bool rmInSurf,
                            int numThreads = 1);

} // namespace boxdim
