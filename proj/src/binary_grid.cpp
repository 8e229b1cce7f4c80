#include "boxdim/binary_grid.hpp"

#include <atomic>
#include <bit>
#include <cmath>

#include "boxdim/errors.hpp"
#include "boxdim/parallel.hpp"

namespace boxdim {

std::size_t BinaryGrid::occupiedCount() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BinaryGrid BinaryGrid::empty(int resolution, double physicalEdge, const Vec3& origin) {
    if (resolution < 1) throw ConfigError("grid resolution must be at least 1");
    if (physicalEdge <= 0.0) throw ConfigError("grid physical edge must be positive");
    BinaryGrid g;
    g.resolution = resolution;
    g.physicalEdge = physicalEdge;
    g.origin = origin;
    g.bits.assign(g.wordsPerRow() * static_cast<std::size_t>(resolution) *
                      static_cast<std::size_t>(resolution),
                  0);
    return g;
}

BinaryGrid voxelise(const PointCloud& cloud, int gridNum, const Structure& structure,
                    int numThreads) {
    if (gridNum < 2) throw ConfigError("gridNum must be at least 2");
    if (cloud.size() == 0) throw ConfigError("cannot voxelise an empty point cloud");

    Vec3 lo = cloud.points.front();
    Vec3 hi = cloud.points.front();
    for (const Vec3& p : cloud.points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    double edge = (hi - lo).maxCoeff();
    if (edge <= 0.0) edge = structure.maxRange(); // coincident points: use the object scale

    BinaryGrid grid = BinaryGrid::empty(gridNum, edge, lo);
    const double scale = static_cast<double>(gridNum) / grid.physicalEdge;

    parallelChunks(numThreads, cloud.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Vec3 rel = cloud.points[i] - grid.origin;
            int idx[3];
            for (int ax = 0; ax < 3; ++ax) {
                int v = static_cast<int>(std::floor(rel[ax] * scale));
                if (v < 0) v = 0;
                if (v >= gridNum) v = gridNum - 1;
                idx[ax] = v;
            }
            const std::size_t w = grid.wordIndex(idx[0], idx[1], idx[2]);
            const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(idx[0]) & 63u);
            std::atomic_ref<std::uint64_t>(grid.bits[w]).fetch_or(mask,
                                                                  std::memory_order_relaxed);
        }
    });
    return grid;
}

} // namespace boxdim
