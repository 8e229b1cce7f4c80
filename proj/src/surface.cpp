#include "boxdim/surface.hpp"

#include <algorithm>
#include <limits>

#include "boxdim/delaunay.hpp"
#include "boxdim/errors.hpp"

namespace boxdim {

SurfaceAlgorithm parseSurfaceAlgorithm(const std::string& name) {
    if (name == "alphaShape") return SurfaceAlgorithm::AlphaShape;
    if (name == "convexHull") return SurfaceAlgorithm::ConvexHull;
    if (name == "numNeigh") return SurfaceAlgorithm::NumNeigh;
    throw ConfigError("unknown surface algorithm '" + name +
                      "' (expected alphaShape, convexHull or numNeigh)");
}

const char* surfaceAlgorithmName(SurfaceAlgorithm alg) {
    switch (alg) {
        case SurfaceAlgorithm::AlphaShape: return "alphaShape";
        case SurfaceAlgorithm::ConvexHull: return "convexHull";
        case SurfaceAlgorithm::NumNeigh: return "numNeigh";
    }
    return "?";
}

std::size_t SurfaceFlags::surfaceCount() const {
    std::size_t n = 0;
    for (char f : isSurface)
        if (f) ++n;
    return n;
}

namespace {

std::vector<char> alphaShapeFlags(const Structure& structure, double alpha) {
    std::vector<Vec3> centers(structure.size());
    for (std::size_t i = 0; i < structure.size(); ++i)
        centers[i] = structure[static_cast<int>(i)].position;

    const Delaunay3 tri(centers);

    // Which cells survive the circumradius cut.
    const auto& cells = tri.cells();
    std::vector<char> kept(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].alive && cells[c].v[3] != Delaunay3::kInfinite &&
            tri.circumradius(static_cast<int>(c)) < alpha)
            kept[c] = 1;

    std::vector<char> vertexOnBoundary(tri.vertexCount(), 0);
    std::vector<char> vertexInKept(tri.vertexCount(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!kept[c]) continue;
        const auto& cell = cells[c];
        for (int s = 0; s < 4; ++s)
            vertexInKept[static_cast<std::size_t>(cell.v[s])] = 1;
        for (int k = 0; k < 4; ++k) {
            if (kept[static_cast<std::size_t>(cell.nbr[k])]) continue;
            // Facet between a kept tetrahedron and the outside.
            for (int s = 0; s < 4; ++s)
                if (s != k) vertexOnBoundary[static_cast<std::size_t>(cell.v[s])] = 1;
        }
    }

    std::vector<char> flags(structure.size(), 0);
    const auto& v4i = tri.vertexForInput();
    for (std::size_t i = 0; i < structure.size(); ++i) {
        const std::size_t v = static_cast<std::size_t>(v4i[i]);
        flags[i] = (vertexOnBoundary[v] || !vertexInKept[v]) ? 1 : 0;
    }
    return flags;
}

std::vector<char> convexHullFlags(const Structure& structure) {
    std::vector<Vec3> centers(structure.size());
    for (std::size_t i = 0; i < structure.size(); ++i)
        centers[i] = structure[static_cast<int>(i)].position;
    try {
        const Delaunay3 tri(centers);
        const std::vector<char> hull = tri.hullVertexFlags();
        const auto& v4i = tri.vertexForInput();
        std::vector<char> flags(structure.size(), 0);
        for (std::size_t i = 0; i < structure.size(); ++i)
            flags[i] = hull[static_cast<std::size_t>(v4i[i])];
        return flags;
    } catch (const DegenerateInputError&) {
        // Flat/collinear/tiny input: the hull has no interior, so
        // every atom lies on its boundary.
        return std::vector<char>(structure.size(), 1);
    }
}

} // namespace

SurfaceFlags findSurfaceAtoms(const Structure& structure, const NeighborList& neighborList,
                              SurfaceAlgorithm algorithm, double alphaMult,
                              int numNeighThreshold) {
    if (neighborList.size() != structure.size())
        throw ConfigError("neighbor list does not match the structure");

    SurfaceFlags out;
    out.algorithm = algorithm;
    out.alphaMult = alphaMult;
    out.numNeighThreshold = numNeighThreshold;

    switch (algorithm) {
        case SurfaceAlgorithm::AlphaShape: {
            if (alphaMult <= 0.0) throw ConfigError("alphaMult must be positive");
            out.isSurface = alphaShapeFlags(structure, alphaMult * structure.minRadius());
            break;
        }
        case SurfaceAlgorithm::ConvexHull:
            out.isSurface = convexHullFlags(structure);
            break;
        case SurfaceAlgorithm::NumNeigh: {
            out.isSurface.assign(structure.size(), 0);
            for (std::size_t i = 0; i < structure.size(); ++i)
                if (static_cast<int>(neighborList.neighbors[i].size()) < numNeighThreshold)
                    out.isSurface[i] = 1;
            break;
        }
    }
    return out;
}

bool isInnerSide(const Vec3& p, int atomIndex, const Structure& structure,
                 const NeighborList& neighborList, const SurfaceFlags& flags) {
    const auto& neigh = neighborList.neighbors[static_cast<std::size_t>(atomIndex)];
    const Vec3 q = structure[atomIndex].position;

    Vec3 innerSum = Vec3::Zero();
    int innerCount = 0;
    std::vector<int> surf;
    for (int j : neigh) {
        if (flags.surface(j)) {
            surf.push_back(j);
        } else {
            innerSum += structure[j].position;
            ++innerCount;
        }
    }
    if (innerCount == 0) return false; // nothing "inner" to be on the side of
    if (surf.size() < 2) return false; // no plane to take sides against
    const Vec3 qInner = innerSum / innerCount;

    // Two surface neighbors closest to p (by summed distance), bonded
    // pairs preferred. `surf` is index-sorted, so scanning with strict
    // improvement keeps the lowest-index pair on ties.
    int best2 = -1, best3 = -1;
    double bestBonded = std::numeric_limits<double>::infinity();
    double bestAny = std::numeric_limits<double>::infinity();
    int any2 = -1, any3 = -1;
    for (std::size_t a = 0; a < surf.size(); ++a) {
        const double da = (structure[surf[a]].position - p).norm();
        for (std::size_t b = a + 1; b < surf.size(); ++b) {
            const double d = da + (structure[surf[b]].position - p).norm();
            if (d < bestAny) {
                bestAny = d;
                any2 = surf[a];
                any3 = surf[b];
            }
            if (d < bestBonded && neighborList.areNeighbors(surf[a], surf[b])) {
                bestBonded = d;
                best2 = surf[a];
                best3 = surf[b];
            }
        }
    }
    if (best2 < 0) {
        best2 = any2;
        best3 = any3;
    }

    const Vec3 e2 = structure[best2].position - q;
    const Vec3 e3 = structure[best3].position - q;
    const Vec3 n = e2.cross(e3);
    if (n.norm() <= 1e-12 * e2.norm() * e3.norm()) return false; // collinear span

    const double s1 = n.dot(qInner - q);
    const double s2 = n.dot(p - q);
    return !(s1 * s2 < 0.0);
}

} // namespace boxdim
