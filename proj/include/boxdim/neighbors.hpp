#pragma once

#include <vector>

#include "boxdim/types.hpp"

namespace boxdim {

// Symmetric adjacency over atoms. neighbors[i] holds the indices of
// every atom j != i with |r_i - r_j| <= (R_i + R_j) * radMult, sorted
// ascending; bondLengths[i][k] is the centre distance to
// neighbors[i][k].
struct NeighborList {
    std::vector<std::vector<int>> neighbors;
    std::vector<std::vector<double>> bondLengths;

    std::size_t size() const { return neighbors.size(); }
    bool areNeighbors(int i, int j) const;
};

// Cell-list neighbor search. The cutoff for a pair is
// (R_i + R_j) * radMult with a closed comparison (<=), so two spheres
// exactly at their summed scaled radii still count. Cells are cubes of
// edge max_i(2 * R_i * radMult), which guarantees a 27-cell stencil
// sees every candidate pair. Results are identical for any thread
// count and any atom insertion order (up to the index relabelling).
NeighborList buildNeighborList(const Structure& structure, double radMult,
                               int numThreads = 1);

} // namespace boxdim
