#pragma once

#include <string>

#include "boxdim/binary_grid.hpp"
#include "boxdim/radii.hpp"
#include "boxdim/types.hpp"

namespace boxdim {

enum class ShapeKind {
    SingleAtom,
    FccOctahedron,  // (2n^3 + n)/3 atoms at order n
    FccCube,        // ((2n+1)^3 + 1)/2 atoms at order n
    FccTetrahedron, // n(n+1)(n+2)/6 atoms at order n
};

ShapeKind parseShapeKind(const std::string& name); // throws ConfigError
const char* shapeKindName(ShapeKind kind);

struct ShapeSpec {
    ShapeKind kind = ShapeKind::SingleAtom;
    std::string element = "Pd";
    double latticeConstant = 3.89; // Å; FCC palladium
    int order = 1;
};

// Carve the requested cluster out of an FCC lattice. Atoms are
// emitted in lexicographic half-lattice-index order, so regenerating
// a spec reproduces the identical structure.
Structure generateStructure(const ShapeSpec& spec, RadiusType radType = RadiusType::Atomic);

// Menger sponge occupancy at the given construction level: a
// 3^level-edge grid where a voxel survives when no base-3 digit
// position has two or more of its coordinates equal to 1. Exactly
// 20^level voxels are occupied. Levels 0 through 5 are supported.
BinaryGrid mengerSpongeGrid(int level);

} // namespace boxdim
