#pragma once

#include <vector>

#include "boxdim/types.hpp"

namespace boxdim {

// Incremental 3D Delaunay triangulation with exact predicates.
//
// The triangulation covers the convex hull of the input and keeps one
// symbolic vertex "at infinity": every hull facet is the finite face
// of an infinite cell. Exactly degenerate inputs (cospherical and
// coplanar subsets, lattice points, duplicates) are legal; cospherical
// ties are broken toward "outside the sphere", which yields a valid
// triangulation that is Delaunay up to those ties. Inputs whose points
// are all collinear or all coplanar cannot be tetrahedralised and
// throw DegenerateInputError.
class Delaunay3 {
public:
    static constexpr int kInfinite = -1;

    struct Cell {
        int v[4];   // vertex ids; infinite cells carry kInfinite in v[3]
        int nbr[4]; // cell adjacent across the facet opposite v[k]
        bool alive = false;
    };

    explicit Delaunay3(const std::vector<Vec3>& points);

    // Cell storage including dead (recycled) slots; check `alive`.
    const std::vector<Cell>& cells() const { return cells_; }
    bool cellAlive(int c) const { return cells_[static_cast<std::size_t>(c)].alive; }
    bool cellFinite(int c) const {
        return cells_[static_cast<std::size_t>(c)].v[3] != kInfinite;
    }

    std::size_t vertexCount() const { return points_.size(); }
    const Vec3& vertexPoint(int v) const { return points_[static_cast<std::size_t>(v)]; }

    // vertexForInput()[i] is the triangulation vertex holding input
    // point i; exact duplicates collapse onto one vertex.
    const std::vector<int>& vertexForInput() const { return vertexForInput_; }

    // True for vertices incident to an infinite cell, i.e. vertices
    // lying on the boundary of the convex hull.
    std::vector<char> hullVertexFlags() const;

    // Circumradius of a finite cell; +infinity when the four vertices
    // are too close to coplanar for a meaningful circumsphere.
    double circumradius(int c) const;

    // Structural self-check (orientation, adjacency reciprocity,
    // face-to-face matching). Used by the tests; throws on violation.
    void validate() const;

private:
    int locate(const Vec3& p, int hint, bool& onVertexOfCell) const;
    bool cellInConflict(int c, const Vec3& p) const;
    int newCell(int a, int b, int c, int d);
    void insertPoint(std::size_t inputIndex, const Vec3& p);
    int facetSlotIn(int cell, int oppA, int oppB, int oppC) const;

    std::vector<Vec3> points_;          // triangulation vertices (dedup'd)
    std::vector<int> vertexForInput_;   // input index -> vertex id
    std::vector<Cell> cells_;
    std::vector<int> freeCells_;
    int hint_ = 0;
    mutable std::vector<int> stamp_;    // visited marks for BFS/scans
    mutable int stampValue_ = 0;
};

} // namespace boxdim
