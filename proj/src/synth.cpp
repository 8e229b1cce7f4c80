#include "boxdim/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>

#include "boxdim/errors.hpp"

namespace boxdim {

ShapeKind parseShapeKind(const std::string& name) {
    if (name == "single") return ShapeKind::SingleAtom;
    if (name == "octahedron") return ShapeKind::FccOctahedron;
    if (name == "cube") return ShapeKind::FccCube;
    if (name == "tetrahedron") return ShapeKind::FccTetrahedron;
    throw ConfigError("unknown shape '" + name +
                      "' (expected single, octahedron, cube or tetrahedron)");
}

const char* shapeKindName(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::SingleAtom: return "single";
        case ShapeKind::FccOctahedron: return "octahedron";
        case ShapeKind::FccCube: return "cube";
        case ShapeKind::FccTetrahedron: return "tetrahedron";
    }
    return "?";
}

namespace {

// FCC sites live on the half-unit lattice: position = (a/2)(i,j,k)
// with i+j+k even.
using LatticeIndex = std::array<int, 3>;

std::vector<LatticeIndex> octahedronSites(int order) {
    // Odd orders center on an atom, even orders on an octahedral hole
    // (shifted along +x), so every order is realisable on the lattice.
    const int shift = order % 2 == 0 ? 1 : 0;
    const int reach = order - 1;
    std::vector<LatticeIndex> sites;
    for (int i = shift - reach; i <= shift + reach; ++i)
        for (int j = -reach; j <= reach; ++j)
            for (int k = -reach; k <= reach; ++k) {
                if ((i + j + k) % 2 != 0) continue;
                if (std::abs(i - shift) + std::abs(j) + std::abs(k) > reach) continue;
                sites.push_back({i, j, k});
            }
    return sites;
}

std::vector<LatticeIndex> cubeSites(int order) {
    std::vector<LatticeIndex> sites;
    for (int i = 0; i <= 2 * order; ++i)
        for (int j = 0; j <= 2 * order; ++j)
            for (int k = 0; k <= 2 * order; ++k)
                if ((i + j + k) % 2 == 0) sites.push_back({i, j, k});
    return sites;
}

std::vector<LatticeIndex> tetrahedronSites(int order) {
    // Spanned by the three face-diagonal unit steps (1,1,0), (1,0,1),
    // (0,1,1) of the half-unit lattice.
    std::vector<LatticeIndex> sites;
    for (int a = 0; a < order; ++a)
        for (int b = 0; a + b < order; ++b)
            for (int c = 0; a + b + c < order; ++c)
                sites.push_back({a + b, a + c, b + c});
    std::sort(sites.begin(), sites.end());
    return sites;
}

} // namespace

Structure generateStructure(const ShapeSpec& spec, RadiusType radType) {
    if (spec.order < 1) throw ConfigError("shape order must be at least 1");
    if (!(spec.latticeConstant > 0.0)) throw ConfigError("lattice constant must be positive");
    const double radius = radiusFor(spec.element, radType);

    std::vector<LatticeIndex> sites;
    switch (spec.kind) {
        case ShapeKind::SingleAtom: sites.push_back({0, 0, 0}); break;
        case ShapeKind::FccOctahedron: sites = octahedronSites(spec.order); break;
        case ShapeKind::FccCube: sites = cubeSites(spec.order); break;
        case ShapeKind::FccTetrahedron: sites = tetrahedronSites(spec.order); break;
    }

    const double h = spec.latticeConstant / 2.0;
    std::vector<Atom> atoms;
    atoms.reserve(sites.size());
    for (const LatticeIndex& s : sites)
        atoms.push_back({spec.element, Vec3(h * s[0], h * s[1], h * s[2]), radius});
    return Structure(std::move(atoms));
}

BinaryGrid mengerSpongeGrid(int level) {
    if (level < 0 || level > 5)
        throw ConfigError("Menger sponge level must lie between 0 and 5");
    int res = 1;
    for (int i = 0; i < level; ++i) res *= 3;

    // Voxel edge of 1 Å keeps the count series in round numbers.
    BinaryGrid grid = BinaryGrid::empty(res, static_cast<double>(res), Vec3::Zero());
    for (int z = 0; z < res; ++z)
        for (int y = 0; y < res; ++y)
            for (int x = 0; x < res; ++x) {
                bool occupied = true;
                for (int xx = x, yy = y, zz = z; xx || yy || zz; xx /= 3, yy /= 3, zz /= 3) {
                    const int ones = (xx % 3 == 1) + (yy % 3 == 1) + (zz % 3 == 1);
                    if (ones >= 2) {
                        occupied = false;
                        break;
                    }
                }
                if (occupied) grid.set(x, y, z);
            }
    return grid;
}

} // namespace boxdim
