#include "boxdim/delaunay.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "boxdim/errors.hpp"
#include "boxdim/predicates.hpp"

namespace boxdim {

namespace {

// Facet opposite slot k of a positively oriented cell, ordered so its
// positive side faces away from v[k].
constexpr int kOutwardFacet[4][3] = {
    {1, 2, 3},
    {0, 3, 2},
    {0, 1, 3},
    {0, 2, 1},
};

struct FacetKey {
    int a, b, c; // sorted ascending, kInfinite (-1) sorts first

    bool operator<(const FacetKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

FacetKey makeKey(int x, int y, int z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
}

bool samePoint(const Vec3& a, const Vec3& b) {
    return a.x() == b.x() && a.y() == b.y() && a.z() == b.z();
}

} // namespace

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

Delaunay3::Delaunay3(const std::vector<Vec3>& input) {
    vertexForInput_.assign(input.size(), -1);

    // First tetrahedron: the earliest four points in full general
    // position. Everything collinear/coplanar cannot seed a 3D
    // triangulation.
    const std::size_t n = input.size();
    std::size_t i0 = 0, i1 = n, i2 = n, i3 = n;
    for (std::size_t j = 1; j < n && i1 == n; ++j)
        if (!samePoint(input[j], input[i0])) i1 = j;
    if (i1 < n)
        for (std::size_t j = i1 + 1; j < n && i2 == n; ++j)
            if (!collinear3d(input[i0], input[i1], input[j])) i2 = j;
    if (i2 < n)
        for (std::size_t j = i2 + 1; j < n && i3 == n; ++j)
            if (orient3d(input[i0], input[i1], input[i2], input[j]) != 0) i3 = j;
    if (i3 == n)
        throw DegenerateInputError(
            "point set is degenerate (fewer than four points in general "
            "position); a 3D alpha shape is undefined here - use the "
            "convexHull or numNeigh surface algorithms instead");

    std::size_t a = i0, b = i1, c = i2, d = i3;
    if (orient3d(input[a], input[b], input[c], input[d]) < 0) std::swap(b, c);

    points_.push_back(input[a]);
    points_.push_back(input[b]);
    points_.push_back(input[c]);
    points_.push_back(input[d]);
    vertexForInput_[a] = 0;
    vertexForInput_[b] = 1;
    vertexForInput_[c] = 2;
    vertexForInput_[d] = 3;

    const int tet = newCell(0, 1, 2, 3);
    int inf[4];
    for (int k = 0; k < 4; ++k) {
        const int* f = kOutwardFacet[k];
        const Cell& t = cells_[static_cast<std::size_t>(tet)];
        inf[k] = newCell(t.v[f[0]], t.v[f[1]], t.v[f[2]], kInfinite);
    }

    // Stitch the 5-cell complex through a facet map.
    std::map<FacetKey, std::pair<int, int>> open;
    auto linkFacets = [&](int cellIdx) {
        Cell& cell = cells_[static_cast<std::size_t>(cellIdx)];
        for (int k = 0; k < 4; ++k) {
            int o[3], m = 0;
            for (int s = 0; s < 4; ++s)
                if (s != k) o[m++] = cell.v[s];
            const FacetKey key = makeKey(o[0], o[1], o[2]);
            auto it = open.find(key);
            if (it == open.end()) {
                open[key] = {cellIdx, k};
            } else {
                cell.nbr[k] = it->second.first;
                cells_[static_cast<std::size_t>(it->second.first)].nbr[it->second.second] =
                    cellIdx;
                open.erase(it);
            }
        }
    };
    linkFacets(tet);
    for (int k = 0; k < 4; ++k) linkFacets(inf[k]);

    hint_ = tet;

    for (std::size_t j = 1; j < n; ++j) {
        if (j == i1 || j == i2 || j == i3) continue;
        insertPoint(j, input[j]);
    }
}

int Delaunay3::newCell(int a, int b, int c, int d) {
    int idx;
    if (!freeCells_.empty()) {
        idx = freeCells_.back();
        freeCells_.pop_back();
    } else {
        idx = static_cast<int>(cells_.size());
        cells_.emplace_back();
        stamp_.push_back(0);
    }
    Cell& cell = cells_[static_cast<std::size_t>(idx)];
    cell.v[0] = a;
    cell.v[1] = b;
    cell.v[2] = c;
    cell.v[3] = d;
    cell.nbr[0] = cell.nbr[1] = cell.nbr[2] = cell.nbr[3] = -1;
    cell.alive = true;
    return idx;
}

int Delaunay3::facetSlotIn(int cell, int oppA, int oppB, int oppC) const {
    const Cell& c = cells_[static_cast<std::size_t>(cell)];
    for (int s = 0; s < 4; ++s) {
        const int v = c.v[s];
        if (v != oppA && v != oppB && v != oppC) return s;
    }
    return -1;
}

// ---------------------------------------------------------------------------
// point location
// ---------------------------------------------------------------------------

bool Delaunay3::cellInConflict(int c, const Vec3& p) const {
    const Cell& cell = cells_[static_cast<std::size_t>(c)];
    if (cell.v[3] == kInfinite) {
        const Vec3& x0 = points_[static_cast<std::size_t>(cell.v[0])];
        const Vec3& x1 = points_[static_cast<std::size_t>(cell.v[1])];
        const Vec3& x2 = points_[static_cast<std::size_t>(cell.v[2])];
        const int o = orient3d(x0, x1, x2, p);
        if (o > 0) return true;
        if (o < 0) return false;
        return incircleCoplanar(x0, x1, x2, p) > 0;
    }
    return insphere(points_[static_cast<std::size_t>(cell.v[0])],
                    points_[static_cast<std::size_t>(cell.v[1])],
                    points_[static_cast<std::size_t>(cell.v[2])],
                    points_[static_cast<std::size_t>(cell.v[3])], p) > 0;
}

int Delaunay3::locate(const Vec3& p, int hint, bool& /*onVertexOfCell*/) const {
    int cur = hint;
    if (cur < 0 || static_cast<std::size_t>(cur) >= cells_.size() ||
        !cells_[static_cast<std::size_t>(cur)].alive) {
        cur = -1;
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (cells_[i].alive) {
                cur = static_cast<int>(i);
                break;
            }
    }
    if (cells_[static_cast<std::size_t>(cur)].v[3] == kInfinite)
        cur = cells_[static_cast<std::size_t>(cur)].nbr[3];

    const std::size_t limit = 4 * cells_.size() + 64;
    std::size_t steps = 0;
    for (;;) {
        const Cell& cell = cells_[static_cast<std::size_t>(cur)];
        if (cell.v[3] == kInfinite) return cur; // p is outside the hull here
        bool moved = false;
        for (int k = 0; k < 4 && !moved; ++k) {
            const int* f = kOutwardFacet[k];
            if (orient3d(points_[static_cast<std::size_t>(cell.v[f[0]])],
                         points_[static_cast<std::size_t>(cell.v[f[1]])],
                         points_[static_cast<std::size_t>(cell.v[f[2]])], p) > 0) {
                cur = cell.nbr[k];
                moved = true;
            }
        }
        if (!moved) return cur; // containing cell (possibly on its boundary)
        if (++steps > limit) break;
    }

    // Degenerate walk: fall back to exhaustive scans. Containment first,
    // then any infinite cell in conflict.
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Cell& cell = cells_[i];
        if (!cell.alive || cell.v[3] == kInfinite) continue;
        bool inside = true;
        for (int k = 0; k < 4 && inside; ++k) {
            const int* f = kOutwardFacet[k];
            if (orient3d(points_[static_cast<std::size_t>(cell.v[f[0]])],
                         points_[static_cast<std::size_t>(cell.v[f[1]])],
                         points_[static_cast<std::size_t>(cell.v[f[2]])], p) > 0)
                inside = false;
        }
        if (inside) return static_cast<int>(i);
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Cell& cell = cells_[i];
        if (cell.alive && cell.v[3] == kInfinite && cellInConflict(static_cast<int>(i), p))
            return static_cast<int>(i);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// insertion
// ---------------------------------------------------------------------------

void Delaunay3::insertPoint(std::size_t inputIndex, const Vec3& p) {
    bool unused = false;
    int seed = locate(p, hint_, unused);

    // Exact duplicate of a vertex of the located cell?
    {
        const Cell& cell = cells_[static_cast<std::size_t>(seed)];
        for (int s = 0; s < 4; ++s) {
            const int v = cell.v[s];
            if (v != kInfinite && samePoint(points_[static_cast<std::size_t>(v)], p)) {
                vertexForInput_[inputIndex] = v;
                return;
            }
        }
    }

    if (!cellInConflict(seed, p)) {
        // The walk may end in a non-conflicting infinite cell when p
        // lies outside the hull near a degenerate corner; scan for a
        // strictly conflicting hull facet (one exists for any point
        // strictly outside), then for tie conflicts.
        int found = -1;
        for (int pass = 0; pass < 2 && found < 0; ++pass) {
            for (std::size_t i = 0; i < cells_.size() && found < 0; ++i) {
                const Cell& cell = cells_[i];
                if (!cell.alive || cell.v[3] != kInfinite) continue;
                const int o = orient3d(points_[static_cast<std::size_t>(cell.v[0])],
                                       points_[static_cast<std::size_t>(cell.v[1])],
                                       points_[static_cast<std::size_t>(cell.v[2])], p);
                if (pass == 0 ? o > 0
                              : (o == 0 && incircleCoplanar(
                                               points_[static_cast<std::size_t>(cell.v[0])],
                                               points_[static_cast<std::size_t>(cell.v[1])],
                                               points_[static_cast<std::size_t>(cell.v[2])],
                                               p) > 0))
                    found = static_cast<int>(i);
            }
        }
        if (found < 0) {
            // Not in conflict with anything: the only remaining
            // possibility for a consistent triangulation is an exact
            // duplicate vertex somewhere.
            for (std::size_t v = 0; v < points_.size(); ++v)
                if (samePoint(points_[v], p)) {
                    vertexForInput_[inputIndex] = static_cast<int>(v);
                    return;
                }
            throw NumericError("triangulation insertion failed to find a conflict region");
        }
        seed = found;
    }

    // Conflict region by facet BFS.
    ++stampValue_;
    const int visited = stampValue_;
    std::vector<int> cavity;
    std::vector<char> inCavity(cells_.size(), 0);
    std::vector<int> queue{seed};
    stamp_[static_cast<std::size_t>(seed)] = visited;
    inCavity[static_cast<std::size_t>(seed)] = 1;
    cavity.push_back(seed);
    while (!queue.empty()) {
        const int c = queue.back();
        queue.pop_back();
        for (int k = 0; k < 4; ++k) {
            const int nb = cells_[static_cast<std::size_t>(c)].nbr[k];
            if (stamp_[static_cast<std::size_t>(nb)] == visited) continue;
            stamp_[static_cast<std::size_t>(nb)] = visited;
            if (cellInConflict(nb, p)) {
                inCavity[static_cast<std::size_t>(nb)] = 1;
                cavity.push_back(nb);
                queue.push_back(nb);
            }
        }
    }

    // Shrink the cavity until every boundary facet makes a valid
    // (strictly positive volume) cell with p, re-extracting the
    // connected component after each shrink.
    auto facetBad = [&](int c, int k) {
        const Cell& cell = cells_[static_cast<std::size_t>(c)];
        if (cell.v[3] == kInfinite) {
            if (k == 3) {
                // New finite cell (x0,x1,x2,p) needs p strictly outside.
                return orient3d(points_[static_cast<std::size_t>(cell.v[0])],
                                points_[static_cast<std::size_t>(cell.v[1])],
                                points_[static_cast<std::size_t>(cell.v[2])], p) <= 0;
            }
            // New infinite cell over the finite edge (a,b) needs p off
            // the edge line.
            int e[2], m = 0;
            for (int s = 0; s < 3; ++s)
                if (s != k) e[m++] = cell.v[s];
            return collinear3d(points_[static_cast<std::size_t>(e[0])],
                               points_[static_cast<std::size_t>(e[1])], p);
        }
        const int* f = kOutwardFacet[k];
        // New finite cell keeps p on the inner side of the facet.
        return orient3d(points_[static_cast<std::size_t>(cell.v[f[0]])],
                        points_[static_cast<std::size_t>(cell.v[f[1]])],
                        points_[static_cast<std::size_t>(cell.v[f[2]])], p) >= 0;
    };

    for (;;) {
        bool changed = false;
        for (std::size_t ci = 0; ci < cavity.size(); ++ci) {
            const int c = cavity[ci];
            if (!inCavity[static_cast<std::size_t>(c)]) continue;
            const Cell& cell = cells_[static_cast<std::size_t>(c)];
            for (int k = 0; k < 4; ++k) {
                if (inCavity[static_cast<std::size_t>(cell.nbr[k])]) continue;
                if (facetBad(c, k)) {
                    inCavity[static_cast<std::size_t>(c)] = 0;
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) break;
        // Keep one facet-connected component.
        int root = -1;
        for (int c : cavity)
            if (inCavity[static_cast<std::size_t>(c)]) {
                root = c;
                break;
            }
        if (root < 0) break;
        std::vector<char> keep(cells_.size(), 0);
        std::vector<int> q2{root};
        keep[static_cast<std::size_t>(root)] = 1;
        while (!q2.empty()) {
            const int c = q2.back();
            q2.pop_back();
            for (int k = 0; k < 4; ++k) {
                const int nb = cells_[static_cast<std::size_t>(c)].nbr[k];
                if (inCavity[static_cast<std::size_t>(nb)] && !keep[static_cast<std::size_t>(nb)]) {
                    keep[static_cast<std::size_t>(nb)] = 1;
                    q2.push_back(nb);
                }
            }
        }
        for (int c : cavity) inCavity[static_cast<std::size_t>(c)] = keep[static_cast<std::size_t>(c)];
    }

    std::vector<int> finalCavity;
    for (int c : cavity)
        if (inCavity[static_cast<std::size_t>(c)]) finalCavity.push_back(c);
    if (finalCavity.empty()) {
        for (std::size_t v = 0; v < points_.size(); ++v)
            if (samePoint(points_[v], p)) {
                vertexForInput_[inputIndex] = static_cast<int>(v);
                return;
            }
        throw NumericError("triangulation cavity collapsed during repair");
    }
    std::sort(finalCavity.begin(), finalCavity.end());

    // Create the new vertex and one new cell per boundary facet.
    const int pv = static_cast<int>(points_.size());
    points_.push_back(p);

    struct NewCellRec {
        int idx;
        int pSlot;
        int outsideCell;
        int outsideSlot;
    };
    std::vector<NewCellRec> created;
    std::map<std::pair<int, int>, std::pair<int, int>> openInner; // pair key -> (cell, slot)

    auto innerKey = [](int x, int y) {
        return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    };

    for (int c : finalCavity) {
        const Cell cell = cells_[static_cast<std::size_t>(c)]; // copy; we mutate storage
        for (int k = 0; k < 4; ++k) {
            const int outside = cell.nbr[k];
            if (inCavity[static_cast<std::size_t>(outside)]) continue;

            int nc = -1;
            int pSlot = 3;
            if (cell.v[3] == kInfinite && k != 3) {
                // Hull silhouette edge: new infinite cell (a, b, p, inf).
                int e[2], m = 0;
                for (int s = 0; s < 3; ++s)
                    if (s != k) e[m++] = cell.v[s];
                nc = newCell(e[0], e[1], pv, kInfinite);
                pSlot = 2;
            } else if (cell.v[3] == kInfinite) {
                // Hull facet seen from outside: (x0,x1,x2) is outward,
                // p strictly beyond it, so this order is positive.
                nc = newCell(cell.v[0], cell.v[1], cell.v[2], pv);
                pSlot = 3;
            } else {
                // Interior facet: outward order has p on its negative
                // side; swap two vertices for positive orientation.
                const int* f = kOutwardFacet[k];
                nc = newCell(cell.v[f[0]], cell.v[f[2]], cell.v[f[1]], pv);
                pSlot = 3;
            }

            // Link the external facet both ways.
            Cell& ncell = cells_[static_cast<std::size_t>(nc)];
            ncell.nbr[pSlot] = outside;
            int of[3], m2 = 0;
            for (int s = 0; s < 4; ++s)
                if (s != pSlot) of[m2++] = ncell.v[s];
            const int os = facetSlotIn(outside, of[0], of[1], of[2]);
            cells_[static_cast<std::size_t>(outside)].nbr[os] = nc;

            created.push_back({nc, pSlot, outside, os});
        }
    }

    // Link the internal facets (every facet containing p shows up in
    // exactly two new cells).
    for (const NewCellRec& rec : created) {
        Cell& ncell = cells_[static_cast<std::size_t>(rec.idx)];
        for (int s = 0; s < 4; ++s) {
            if (s == rec.pSlot) continue;
            int other[2], m = 0;
            for (int t = 0; t < 4; ++t)
                if (t != s && ncell.v[t] != pv) other[m++] = ncell.v[t];
            const auto key = innerKey(other[0], other[1]);
            auto it = openInner.find(key);
            if (it == openInner.end()) {
                openInner[key] = {rec.idx, s};
            } else {
                ncell.nbr[s] = it->second.first;
                cells_[static_cast<std::size_t>(it->second.first)].nbr[it->second.second] =
                    rec.idx;
                openInner.erase(it);
            }
        }
    }

    // Normalise the finite facet of each new infinite cell so its
    // positive side faces outward (checked against the apex of the
    // finite cell behind it).
    for (const NewCellRec& rec : created) {
        Cell& ncell = cells_[static_cast<std::size_t>(rec.idx)];
        if (ncell.v[3] != kInfinite) continue;
        const int behind = ncell.nbr[3];
        const Cell& bcell = cells_[static_cast<std::size_t>(behind)];
        int w = -1;
        for (int s = 0; s < 4; ++s) {
            const int v = bcell.v[s];
            if (v != ncell.v[0] && v != ncell.v[1] && v != ncell.v[2]) {
                w = v;
                break;
            }
        }
        if (orient3d(points_[static_cast<std::size_t>(ncell.v[0])],
                     points_[static_cast<std::size_t>(ncell.v[1])],
                     points_[static_cast<std::size_t>(ncell.v[2])],
                     points_[static_cast<std::size_t>(w)]) > 0) {
            std::swap(ncell.v[0], ncell.v[1]);
            std::swap(ncell.nbr[0], ncell.nbr[1]);
        }
    }

    // Retire the cavity.
    for (int c : finalCavity) {
        cells_[static_cast<std::size_t>(c)].alive = false;
        freeCells_.push_back(c);
    }

    vertexForInput_[inputIndex] = pv;
    hint_ = created.front().idx;
}

// ---------------------------------------------------------------------------
// queries
// ---------------------------------------------------------------------------

std::vector<char> Delaunay3::hullVertexFlags() const {
    std::vector<char> flags(points_.size(), 0);
    for (const Cell& cell : cells_) {
        if (!cell.alive || cell.v[3] != kInfinite) continue;
        for (int s = 0; s < 3; ++s) flags[static_cast<std::size_t>(cell.v[s])] = 1;
    }
    return flags;
}

double Delaunay3::circumradius(int c) const {
    const Cell& cell = cells_[static_cast<std::size_t>(c)];
    const Vec3& a = points_[static_cast<std::size_t>(cell.v[0])];
    const Vec3& b = points_[static_cast<std::size_t>(cell.v[1])];
    const Vec3& d = points_[static_cast<std::size_t>(cell.v[2])];
    const Vec3& e = points_[static_cast<std::size_t>(cell.v[3])];

    Eigen::Matrix3d m;
    m.row(0) = 2.0 * (b - a).transpose();
    m.row(1) = 2.0 * (d - a).transpose();
    m.row(2) = 2.0 * (e - a).transpose();
    Vec3 rhs(b.squaredNorm() - a.squaredNorm(), d.squaredNorm() - a.squaredNorm(),
             e.squaredNorm() - a.squaredNorm());
    Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
    if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();
    const Vec3 centre = lu.solve(rhs);
    return (centre - a).norm();
}

void Delaunay3::validate() const {
    auto fail = [](const std::string& what) { throw NumericError("triangulation invariant violated: " + what); };
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Cell& cell = cells_[i];
        if (!cell.alive) continue;
        for (int s = 0; s < 4; ++s)
            for (int t = s + 1; t < 4; ++t)
                if (cell.v[s] == cell.v[t]) fail("repeated vertex in cell");
        if (cell.v[3] == kInfinite) {
            const Cell& behind = cells_[static_cast<std::size_t>(cell.nbr[3])];
            if (behind.v[3] == kInfinite) fail("infinite cell backed by infinite cell");
            int w = -1;
            for (int s = 0; s < 4; ++s)
                if (behind.v[s] != cell.v[0] && behind.v[s] != cell.v[1] &&
                    behind.v[s] != cell.v[2])
                    w = behind.v[s];
            if (orient3d(points_[static_cast<std::size_t>(cell.v[0])],
                         points_[static_cast<std::size_t>(cell.v[1])],
                         points_[static_cast<std::size_t>(cell.v[2])],
                         points_[static_cast<std::size_t>(w)]) >= 0)
                fail("hull facet not outward");
        } else {
            if (orient3d(points_[static_cast<std::size_t>(cell.v[0])],
                         points_[static_cast<std::size_t>(cell.v[1])],
                         points_[static_cast<std::size_t>(cell.v[2])],
                         points_[static_cast<std::size_t>(cell.v[3])]) <= 0)
                fail("finite cell not positively oriented");
        }
        for (int k = 0; k < 4; ++k) {
            const int nb = cell.nbr[k];
            if (nb < 0 || !cells_[static_cast<std::size_t>(nb)].alive)
                fail("dangling neighbor link");
            const Cell& other = cells_[static_cast<std::size_t>(nb)];
            int back = -1;
            for (int s = 0; s < 4; ++s)
                if (other.nbr[s] == static_cast<int>(i)) back = s;
            if (back < 0) fail("neighbor link not reciprocal");
            // Shared facet must agree as a vertex set.
            int mine[3], m = 0;
            for (int s = 0; s < 4; ++s)
                if (s != k) mine[m++] = cell.v[s];
            for (int s = 0; s < 4; ++s) {
                if (s == back) continue;
                const int v = other.v[s];
                if (v != mine[0] && v != mine[1] && v != mine[2])
                    fail("shared facet mismatch");
            }
        }
    }
}

} // namespace boxdim
