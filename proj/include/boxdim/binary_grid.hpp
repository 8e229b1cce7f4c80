#pragma once

#include <cstdint>
#include <vector>

#include "boxdim/point_cloud.hpp"
#include "boxdim/types.hpp"

namespace boxdim {

// Cubic occupancy grid, one bit per voxel, packed along x in 64-bit
// words so whole rows can be combined word-wise.
struct BinaryGrid {
    int resolution = 0;        // voxels per edge
    double physicalEdge = 0.0; // Å spanned by the cube
    Vec3 origin = Vec3::Zero();
    std::vector<std::uint64_t> bits;

    double voxelEdge() const { return physicalEdge / resolution; }
    std::size_t wordsPerRow() const {
        return (static_cast<std::size_t>(resolution) + 63) / 64;
    }
    std::size_t wordIndex(int x, int y, int z) const {
        const std::size_t row =
            static_cast<std::size_t>(z) * static_cast<std::size_t>(resolution) +
            static_cast<std::size_t>(y);
        return row * wordsPerRow() + static_cast<std::size_t>(x) / 64;
    }
    bool occupied(int x, int y, int z) const {
        return (bits[wordIndex(x, y, z)] >> (static_cast<unsigned>(x) & 63u)) & 1u;
    }
    void set(int x, int y, int z) {
        bits[wordIndex(x, y, z)] |= std::uint64_t{1} << (static_cast<unsigned>(x) & 63u);
    }
    std::size_t occupiedCount() const;

    static BinaryGrid empty(int resolution, double physicalEdge, const Vec3& origin);
};

// Rasterise the cloud onto a gridNum^3 grid spanning the cloud's own
// bounding cube: [cloudMin, cloudMin + extent] on every axis, where
// extent is the largest per-axis spread (falling back to the
// structure's maxRange when every point coincides). Per-axis voxel
// index is floor((coord - min) / extent * gridNum), clamped into
// range, so coordinates on shorter axes land inside and the far cube
// boundary maps onto the last voxel layer. Bit writes are atomic
// OR-only, making the grid identical for any numThreads.
BinaryGrid voxelise(const PointCloud& cloud, int gridNum, const Structure& structure,
                    int numThreads = 1);

} // namespace boxdim
