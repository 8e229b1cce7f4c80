#include "boxdim/exact_count.hpp"

#include <algorithm>
#include <cmath>

#include "boxdim/errors.hpp"
#include "boxdim/parallel.hpp"

namespace boxdim {

std::pair<double, double> nearFarCoord(double o, double bMin, double l) {
    const double bMax = bMin + l;
    if (o < bMin) return {bMin, bMax}; // whole interval to the right of o
    if (o > bMax) return {bMax, bMin}; // whole interval to the left of o
    return {o, bMax - o < l / 2 ? bMin : bMax};
}

namespace {

// Box indices are packed into one int64 (21 bits per axis, offset so
// negatives pack cleanly); packed order equals lexicographic order of
// the triples.
constexpr std::int64_t kPackOffset = std::int64_t{1} << 20;
constexpr std::int64_t kPackLimit = std::int64_t{1} << 21;

std::int64_t packIndex(std::int64_t ix, std::int64_t iy, std::int64_t iz) {
    const std::int64_t x = ix + kPackOffset;
    const std::int64_t y = iy + kPackOffset;
    const std::int64_t z = iz + kPackOffset;
    if (x < 0 || x >= kPackLimit || y < 0 || y >= kPackLimit || z < 0 || z >= kPackLimit)
        throw NumericError("box index out of packable range; box length too small "
                           "for this structure");
    return (x << 42) | (y << 21) | z;
}

std::array<std::int64_t, 3> unpackIndex(std::int64_t key) {
    return {(key >> 42) - kPackOffset, ((key >> 21) & (kPackLimit - 1)) - kPackOffset,
            (key & (kPackLimit - 1)) - kPackOffset};
}

void sortUnique(std::vector<std::int64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Shared scan behind exactBoxCount and exactBoxSeries. Fills sorted
// unique packed keys for the surface set (pre-subtraction) and, when
// collectBulk, the bulk set. A single-atom structure can never place
// one box in both sets (the distance tests are mutually exclusive),
// so callers interested only in |S \ B| may skip bulk collection
// then.
void scanBoxes(const Structure& structure, const NeighborList& neighborList,
               const SurfaceFlags& flags, double l, bool rmInSurf, int numThreads,
               bool collectBulk, std::vector<std::int64_t>& S, std::vector<std::int64_t>& B) {
    const Vec3 origin = structure.minXYZ();

    std::vector<int> surfaceAtoms;
    for (std::size_t i = 0; i < structure.size(); ++i)
        if (flags.isSurface[i]) surfaceAtoms.push_back(static_cast<int>(i));

    const std::size_t chunks = chunkCount(numThreads, surfaceAtoms.size());
    std::vector<std::vector<std::int64_t>> localS(chunks), localB(chunks);

    parallelChunks(numThreads, surfaceAtoms.size(),
                   [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        auto& cs = localS[chunk];
        auto& cb = localB[chunk];
        for (std::size_t si = begin; si < end; ++si) {
            const int ia = surfaceAtoms[si];
            const Atom& atom = structure[ia];
            const double R = atom.radius;
            const double R2 = R * R;
            const std::int64_t nScan = static_cast<std::int64_t>(std::ceil((R + l) / l));

            std::int64_t home[3];
            for (int ax = 0; ax < 3; ++ax)
                home[ax] =
                    static_cast<std::int64_t>(std::floor((atom.position[ax] - origin[ax]) / l));

            for (std::int64_t jx = home[0] - nScan; jx <= home[0] + nScan; ++jx)
                for (std::int64_t jy = home[1] - nScan; jy <= home[1] + nScan; ++jy)
                    for (std::int64_t jz = home[2] - nScan; jz <= home[2] + nScan; ++jz) {
                        const std::int64_t j[3] = {jx, jy, jz};
                        if (rmInSurf) {
                            Vec3 center;
                            for (int ax = 0; ax < 3; ++ax)
                                center[ax] = origin[ax] + (j[ax] + 0.5) * l;
                            if (isInnerSide(center, ia, structure, neighborList, flags))
                                continue;
                        }
                        double dNear2 = 0.0, dFar2 = 0.0;
                        for (int ax = 0; ax < 3; ++ax) {
                            const double bMin = origin[ax] + j[ax] * l;
                            const auto [near, far] = nearFarCoord(atom.position[ax], bMin, l);
                            const double dn = near - atom.position[ax];
                            const double df = far - atom.position[ax];
                            dNear2 += dn * dn;
                            dFar2 += df * df;
                        }
                        if (dNear2 < R2 && R2 < dFar2)
                            cs.push_back(packIndex(jx, jy, jz));
                        else if (collectBulk && dFar2 < R2)
                            cb.push_back(packIndex(jx, jy, jz));
                    }
        }
    });

    std::size_t totalS = 0, totalB = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        totalS += localS[c].size();
        totalB += localB[c].size();
    }
    S.clear();
    B.clear();
    S.reserve(totalS);
    B.reserve(totalB);
    for (std::size_t c = 0; c < chunks; ++c) {
        S.insert(S.end(), localS[c].begin(), localS[c].end());
        B.insert(B.end(), localB[c].begin(), localB[c].end());
        std::vector<std::int64_t>().swap(localS[c]);
        std::vector<std::int64_t>().swap(localB[c]);
    }
    sortUnique(S);
    sortUnique(B);
}

void checkInputs(const Structure& structure, const NeighborList& neighborList,
                 const SurfaceFlags& flags, double boxLen) {
    if (boxLen <= 0.0) throw ConfigError("box length must be positive");
    if (flags.size() != structure.size() || neighborList.size() != structure.size())
        throw ConfigError("surface flags / neighbor list do not match the structure");
}

} // namespace

BoxClassification exactBoxCount(const Structure& structure, const NeighborList& neighborList,
                                const SurfaceFlags& flags, double boxLen, bool rmInSurf,
                                int numThreads) {
    checkInputs(structure, neighborList, flags, boxLen);

    std::vector<std::int64_t> S, B;
    scanBoxes(structure, neighborList, flags, boxLen, rmInSurf, numThreads, true, S, B);

    std::vector<std::int64_t> kept;
    kept.reserve(S.size());
    std::set_difference(S.begin(), S.end(), B.begin(), B.end(), std::back_inserter(kept));

    BoxClassification out;
    out.origin = structure.minXYZ();
    out.boxLen = boxLen;
    out.surface.reserve(kept.size());
    for (std::int64_t key : kept) out.surface.push_back(unpackIndex(key));
    out.bulk.reserve(B.size());
    for (std::int64_t key : B) out.bulk.push_back(unpackIndex(key));
    return out;
}

std::vector<double> lengthSchedule(const Structure& structure, double minLenMult,
                                   double maxLenMult, int numBoxLen) {
    if (minLenMult <= 0.0) throw ConfigError("minLenMult must be positive");
    if (numBoxLen < 2) throw ConfigError("numBoxLen must be at least 2");
    const double minLen = minLenMult * structure.minRadius();
    const double maxLen = maxLenMult * structure.maxRadius();
    if (minLen >= maxLen)
        throw ConfigError("box length range is empty: the smallest length must be "
                          "below the largest");

    std::vector<double> lengths(static_cast<std::size_t>(numBoxLen));
    const double logMax = std::log(maxLen);
    const double logMin = std::log(minLen);
    for (int k = 0; k < numBoxLen; ++k)
        lengths[static_cast<std::size_t>(k)] =
            std::exp(logMax + (logMin - logMax) * k / (numBoxLen - 1));
    lengths.front() = maxLen;
    lengths.back() = minLen;
    return lengths;
}

BoxCountSeries exactBoxSeries(const Structure& structure, const NeighborList& neighborList,
                              const SurfaceFlags& flags, const std::vector<double>& lengths,
                              bool rmInSurf, int numThreads) {
    if (lengths.size() < 2) throw ConfigError("need at least two box lengths");
    for (std::size_t i = 1; i < lengths.size(); ++i)
        if (!(lengths[i] < lengths[i - 1]))
            throw ConfigError("box lengths must be strictly descending");

    // One atom cannot put a box in both sets, so bulk collection (and
    // the subtraction) is skipped for it; this keeps fine grids over
    // large spheres from materialising millions of interior boxes.
    const bool needBulk = structure.size() > 1;

    BoxCountSeries series;
    series.lengths = lengths;
    series.counts.reserve(lengths.size());
    std::vector<std::int64_t> S, B;
    for (double l : lengths) {
        checkInputs(structure, neighborList, flags, l);
        scanBoxes(structure, neighborList, flags, l, rmInSurf, numThreads, needBulk, S, B);
        std::int64_t count = 0;
        if (B.empty()) {
            count = static_cast<std::int64_t>(S.size());
        } else {
            auto itB = B.begin();
            for (std::int64_t key : S) {
                while (itB != B.end() && *itB < key) ++itB;
                if (itB == B.end() || *itB != key) ++count;
            }
        }
        series.counts.push_back(count);
    }
    return series;
}

} // namespace boxdim
