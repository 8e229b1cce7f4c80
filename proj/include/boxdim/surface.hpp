#pragma once

#include <string>
#include <vector>

#include "boxdim/neighbors.hpp"
#include "boxdim/types.hpp"

namespace boxdim {

enum class SurfaceAlgorithm {
    AlphaShape, // boundary of the alpha complex of atom centers
    ConvexHull, // atoms on the boundary of the convex hull of centers
    NumNeigh,   // atoms with fewer than a threshold number of neighbors
};

SurfaceAlgorithm parseSurfaceAlgorithm(const std::string& name); // throws ConfigError
const char* surfaceAlgorithmName(SurfaceAlgorithm alg);

struct SurfaceFlags {
    std::vector<char> isSurface; // per atom
    SurfaceAlgorithm algorithm = SurfaceAlgorithm::AlphaShape;
    double alphaMult = 0.0;
    int numNeighThreshold = 0;

    std::size_t size() const { return isSurface.size(); }
    bool surface(int i) const { return isSurface[static_cast<std::size_t>(i)] != 0; }
    std::size_t surfaceCount() const;
};

// Flag the surface atoms of a structure.
//
//  - alphaShape: tetrahedralise the centers, keep tetrahedra with
//    circumradius < alphaMult * R_min, flag atoms on facets between
//    the kept complex and the outside (atoms in no kept tetrahedron
//    count as outside and are flagged too). Throws
//    DegenerateInputError for fewer than four atoms or an all
//    collinear/coplanar arrangement.
//  - convexHull: atoms on the hull boundary. Degenerate arrangements
//    (everything coplanar) put every atom on the boundary, so all are
//    flagged.
//  - numNeigh: atoms with fewer than numNeighThreshold neighbors.
SurfaceFlags findSurfaceAtoms(const Structure& structure, const NeighborList& neighborList,
                              SurfaceAlgorithm algorithm, double alphaMult,
                              int numNeighThreshold);

// Decide whether a probe point p near surface atom `atomIndex` sits on
// the inner side of the local surface. The local surface plane is
// spanned by the two mutually-bonded surface neighbors closest to p
// (closest by the sum of their distances to p; without a bonded pair,
// the two closest overall; index order breaks ties). The inner
// direction is toward the mean position of the atom's non-surface
// neighbors. Returns false whenever the construction degenerates (no
// inner neighbors, fewer than two surface neighbors, collinear span),
// i.e. such probes count as outer-side.
bool isInnerSide(const Vec3& p, int atomIndex, const Structure& structure,
                 const NeighborList& neighborList, const SurfaceFlags& flags);

} // namespace boxdim
