#include "boxdim/grid_count.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

// OR 2x2x2 voxel blocks of `in` (edge `res`, even) into a grid of
// edge res/2.
BinaryGrid halve(const BinaryGrid& in) {
    const int res = in.resolution;
    const int half = res / 2;
    BinaryGrid out = BinaryGrid::empty(half, in.physicalEdge, in.origin);

    const std::size_t wprIn = in.wordsPerRow();
    const std::size_t wprOut = out.wordsPerRow();

    auto compressPairs = [](std::uint64_t w) -> std::uint64_t {
        // OR adjacent bit pairs, then gather the 32 even positions.
        std::uint64_t x = (w | (w >> 1)) & 0x5555555555555555ull;
        x = (x | (x >> 1)) & 0x3333333333333333ull;
        x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
        x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
        x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
        x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
        return x;
    };

    std::vector<std::uint64_t> merged(wprIn);
    for (int oz = 0; oz < half; ++oz) {
        for (int oy = 0; oy < half; ++oy) {
            const std::uint64_t* rows[4] = {
                &in.bits[(static_cast<std::size_t>(2 * oz) * res + 2 * oy) * wprIn],
                &in.bits[(static_cast<std::size_t>(2 * oz) * res + 2 * oy + 1) * wprIn],
                &in.bits[(static_cast<std::size_t>(2 * oz + 1) * res + 2 * oy) * wprIn],
                &in.bits[(static_cast<std::size_t>(2 * oz + 1) * res + 2 * oy + 1) * wprIn],
            };
            for (std::size_t w = 0; w < wprIn; ++w)
                merged[w] = rows[0][w] | rows[1][w] | rows[2][w] | rows[3][w];

            std::uint64_t* outRow =
                &out.bits[(static_cast<std::size_t>(oz) * half + oy) * wprOut];
            for (std::size_t ow = 0; ow < wprOut; ++ow) {
                const std::size_t i0 = 2 * ow;
                std::uint64_t lo = compressPairs(merged[i0]);
                std::uint64_t hi = i0 + 1 < wprIn ? compressPairs(merged[i0 + 1]) : 0;
                outRow[ow] = lo | (hi << 32);
            }
        }
    }
    return out;
}

// Direct scan: does block (bx,by,bz) of edge s contain an occupied
// voxel? Blocks tile from the grid origin; a scale that does not
// divide the resolution leaves thinner blocks on the far boundary.
std::int64_t countBlocksDirect(const BinaryGrid& grid, int s) {
    const int res = grid.resolution;
    const int blocks = (res + s - 1) / s;
    const std::size_t wpr = grid.wordsPerRow();

    // Per block column bx: the words and masks covering x in
    // [bx*s, min(bx*s + s, res)).
    struct Span {
        std::size_t word;
        std::uint64_t mask;
    };
    std::vector<std::vector<Span>> columnSpans(static_cast<std::size_t>(blocks));
    for (int bx = 0; bx < blocks; ++bx) {
        const int x0 = bx * s;
        const int x1 = std::min(x0 + s, res);
        for (int w = x0 / 64; w <= (x1 - 1) / 64; ++w) {
            const int lo = std::max(x0, w * 64) - w * 64;
            const int hi = std::min(x1, (w + 1) * 64) - w * 64; // exclusive
            const std::uint64_t mask = hi - lo == 64
                                           ? ~std::uint64_t{0}
                                           : (((std::uint64_t{1} << (hi - lo)) - 1) << lo);
            columnSpans[static_cast<std::size_t>(bx)].push_back(
                {static_cast<std::size_t>(w), mask});
        }
    }

    std::int64_t count = 0;
    for (int bz = 0; bz < blocks; ++bz)
        for (int by = 0; by < blocks; ++by)
            for (int bx = 0; bx < blocks; ++bx) {
                bool hit = false;
                const int zEnd = std::min((bz + 1) * s, res);
                const int yEnd = std::min((by + 1) * s, res);
                for (int z = bz * s; z < zEnd && !hit; ++z)
                    for (int y = by * s; y < yEnd && !hit; ++y) {
                        const std::uint64_t* row =
                            &grid.bits[(static_cast<std::size_t>(z) * res + y) * wpr];
                        for (const Span& sp : columnSpans[static_cast<std::size_t>(bx)])
                            if (row[sp.word] & sp.mask) {
                                hit = true;
                                break;
                            }
                    }
                if (hit) ++count;
            }
    return count;
}

} // namespace

BoxCountSeries countBoxesGrid(const BinaryGrid& grid, const std::vector<int>& scales) {
    if (grid.resolution < 1 || grid.bits.empty())
        throw ConfigError("cannot count boxes of an uninitialised grid");
    if (scales.empty()) throw ConfigError("no box scales given");
    for (int s : scales) {
        if (s < 1 || s > grid.resolution)
            throw ConfigError("box scale " + std::to_string(s) +
                              " is outside the grid resolution " +
                              std::to_string(grid.resolution));
    }
    std::vector<int> sorted = scales;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConfigError("duplicate box scale in the scale list");

    std::vector<std::int64_t> countAsc(sorted.size(), 0);

    // Power-of-two scales that divide the resolution share one
    // shrinking pyramid; everything else falls back to the block scan.
    BinaryGrid level; // pyramid level `levelScale`
    int levelScale = 1;
    bool levelInit = false;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const int s = sorted[i];
        if (std::has_single_bit(static_cast<unsigned>(s)) && grid.resolution % s == 0) {
            if (!levelInit) {
                level = grid;
                levelScale = 1;
                levelInit = true;
            }
            while (levelScale < s) {
                level = halve(level);
                levelScale *= 2;
            }
            countAsc[i] = static_cast<std::int64_t>(level.occupiedCount());
        } else {
            countAsc[i] = countBlocksDirect(grid, s);
        }
    }

    BoxCountSeries series;
    series.lengths.reserve(sorted.size());
    series.counts.reserve(sorted.size());
    for (std::size_t i = sorted.size(); i-- > 0;) {
        series.lengths.push_back(sorted[i] * grid.voxelEdge());
        series.counts.push_back(countAsc[i]);
    }
    return series;
}

std::vector<int> gridScaleSchedule(int resolution) {
    if (resolution < 2) throw ConfigError("grid resolution must be at least 2");
    std::vector<int> scales;
    for (int s = 1; s <= resolution / 2; s *= 2)
        if (resolution % s == 0) scales.push_back(s);
    return scales;
}

std::vector<int> snapScalesToLengths(const std::vector<double>& lengths,
                                     const BinaryGrid& grid) {
    if (lengths.empty()) throw ConfigError("no box lengths to snap to the grid");
    const int cap = std::max(1, grid.resolution / 2);
    std::vector<int> scales;
    scales.reserve(lengths.size());
    for (const double l : lengths) {
        if (l <= 0.0) throw ConfigError("box lengths must be positive");
        int s = static_cast<int>(std::llround(l / grid.voxelEdge()));
        s = std::clamp(s, 1, cap);
        if (scales.empty() || scales.back() != s) scales.push_back(s);
    }
    // Scheduled lengths arrive descending; counts want ascending scales.
    std::reverse(scales.begin(), scales.end());
    if (!std::is_sorted(scales.begin(), scales.end()))
        throw ConfigError("box lengths must be sorted descending");
    return scales;
}

} // namespace boxdim
