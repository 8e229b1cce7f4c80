#include "boxdim/point_cloud.hpp"

#include "boxdim/errors.hpp"
#include "boxdim/fibonacci.hpp"
#include "boxdim/parallel.hpp"

namespace boxdim {

PointCloud genSurfacePoints(const Structure& structure, const NeighborList& neighborList,
                            const SurfaceFlags& flags, int numPoints, bool rmInSurf,
                            int numThreads) {
    if (numPoints < 1) throw ConfigError("numPoints must be at least 1");
    if (flags.size() != structure.size() || neighborList.size() != structure.size())
        throw ConfigError("surface flags / neighbor list do not match the structure");

    const std::vector<Vec3> dirs = fibonacciSphere(numPoints);
    const std::size_t n = structure.size();

    std::vector<std::vector<Vec3>> perAtom(n);
    parallelChunks(numThreads, n, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t ia = begin; ia < end; ++ia) {
            if (!flags.isSurface[ia]) continue;
            const Atom& atom = structure[static_cast<int>(ia)];
            const auto& neigh = neighborList.neighbors[ia];
            auto& kept = perAtom[ia];
            for (const Vec3& u : dirs) {
                const Vec3 p = atom.position + atom.radius * u;
                bool keep = true;
                for (int j : neigh) {
                    const Atom& other = structure[j];
                    if ((p - other.position).squaredNorm() < other.radius * other.radius) {
                        keep = false;
                        break;
                    }
                }
                if (keep && rmInSurf &&
                    isInnerSide(p, static_cast<int>(ia), structure, neighborList, flags))
                    keep = false;
                if (keep) kept.push_back(p);
            }
        }
    });

    PointCloud cloud;
    std::size_t total = 0;
    for (const auto& kept : perAtom) total += kept.size();
    cloud.points.reserve(total);
    cloud.ownerAtom.reserve(total);
    for (std::size_t ia = 0; ia < n; ++ia)
        for (const Vec3& p : perAtom[ia]) {
            cloud.points.push_back(p);
            cloud.ownerAtom.push_back(static_cast<int>(ia));
        }
    return cloud;
}

} // namespace boxdim
