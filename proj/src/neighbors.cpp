#include "boxdim/neighbors.hpp"

#include <algorithm>
#include <cmath>

#include "boxdim/errors.hpp"
#include "boxdim/parallel.hpp"

namespace boxdim {

bool NeighborList::areNeighbors(int i, int j) const {
    const auto& ni = neighbors[static_cast<std::size_t>(i)];
    return std::binary_search(ni.begin(), ni.end(), j);
}

NeighborList buildNeighborList(const Structure& structure, double radMult,
                               int numThreads) {
    if (radMult <= 0.0)
        throw ConfigError("radMult must be positive");

    const std::size_t n = structure.size();
    NeighborList list;
    list.neighbors.resize(n);
    list.bondLengths.resize(n);
    if (n < 2) return list;

    // Cell edge: an upper bound on any pair cutoff.
    const double edge = 2.0 * structure.maxRadius() * radMult;
    const Vec3 origin = structure.minXYZ();
    const Vec3 extent = structure.maxXYZ() - origin;

    int dims[3];
    for (int ax = 0; ax < 3; ++ax)
        dims[ax] = std::max(1, static_cast<int>(std::floor(extent[ax] / edge)) + 1);

    auto cellOf = [&](const Vec3& p, int out[3]) {
        for (int ax = 0; ax < 3; ++ax) {
            int c = static_cast<int>(std::floor((p[ax] - origin[ax]) / edge));
            out[ax] = std::clamp(c, 0, dims[ax] - 1);
        }
    };
    auto cellIndex = [&](const int c[3]) {
        return (static_cast<std::size_t>(c[2]) * dims[1] + c[1]) * dims[0] + c[0];
    };

    std::vector<std::vector<int>> cells(static_cast<std::size_t>(dims[0]) * dims[1] *
                                        dims[2]);
    for (std::size_t i = 0; i < n; ++i) {
        int c[3];
        cellOf(structure[i].position, c);
        cells[cellIndex(c)].push_back(static_cast<int>(i));
    }

    const auto& atoms = structure.atoms();
    parallelChunks(numThreads, n, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            int c[3];
            cellOf(atoms[i].position, c);
            std::vector<std::pair<int, double>> found;
            for (int dz = -1; dz <= 1; ++dz)
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int cc[3] = {c[0] + dx, c[1] + dy, c[2] + dz};
                        if (cc[0] < 0 || cc[0] >= dims[0] || cc[1] < 0 ||
                            cc[1] >= dims[1] || cc[2] < 0 || cc[2] >= dims[2])
                            continue;
                        for (int j : cells[cellIndex(cc)]) {
                            if (static_cast<std::size_t>(j) == i) continue;
                            const double cutoff =
                                (atoms[i].radius + atoms[static_cast<std::size_t>(j)].radius) *
                                radMult;
                            const double d2 =
                                (atoms[i].position -
                                 atoms[static_cast<std::size_t>(j)].position)
                                    .squaredNorm();
                            if (d2 <= cutoff * cutoff)
                                found.emplace_back(j, std::sqrt(d2));
                        }
                    }
            std::sort(found.begin(), found.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            auto& ni = list.neighbors[i];
            auto& bi = list.bondLengths[i];
            ni.reserve(found.size());
            bi.reserve(found.size());
            for (const auto& [j, d] : found) {
                ni.push_back(j);
                bi.push_back(d);
            }
        }
    });

    return list;
}

} // namespace boxdim
