#pragma once

#include <cstdint>
#include <vector>

namespace boxdim {

// One box-counting measurement series: how many boxes of each edge
// length touch the surface. Lengths are strictly descending (largest
// box first) and counts are positive.
struct BoxCountSeries {
    std::vector<double> lengths;      // Å
    std::vector<std::int64_t> counts; // boxes touched at that length

    std::size_t size() const { return lengths.size(); }
};

} // namespace boxdim
