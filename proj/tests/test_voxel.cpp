#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "boxdim/binary_grid.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/fibonacci.hpp"
#include "boxdim/grid_count.hpp"
#include "boxdim/neighbors.hpp"
#include "boxdim/point_cloud.hpp"
#include "boxdim/synth.hpp"
#include "boxdim/types.hpp"
#include "testutil.hpp"

using namespace boxdim;

namespace {

constexpr double kPi = 3.14159265358979323846;

SurfaceFlags allSurface(std::size_t n) {
    SurfaceFlags f;
    f.isSurface.assign(n, 1);
    return f;
}

// Reference count: scan every s^3 block voxel by voxel. Blocks on the
// far boundary may be thinner when s does not divide the resolution.
std::int64_t naiveBlockCount(const BinaryGrid& g, int s) {
    const int res = g.resolution;
    std::int64_t count = 0;
    for (int bz = 0; bz < res; bz += s)
        for (int by = 0; by < res; by += s)
            for (int bx = 0; bx < res; bx += s) {
                bool hit = false;
                for (int z = bz; z < std::min(bz + s, res) && !hit; ++z)
                    for (int y = by; y < std::min(by + s, res) && !hit; ++y)
                        for (int x = bx; x < std::min(bx + s, res) && !hit; ++x)
                            hit = g.occupied(x, y, z);
                count += hit;
            }
    return count;
}

BinaryGrid randomGrid(std::mt19937& rng, int res, double fill) {
    BinaryGrid g = BinaryGrid::empty(res, static_cast<double>(res), Vec3::Zero());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int z = 0; z < res; ++z)
        for (int y = 0; y < res; ++y)
            for (int x = 0; x < res; ++x)
                if (u(rng) < fill) g.set(x, y, z);
    return g;
}

} // namespace

TEST_CASE("fibonacci directions are unit length and well separated") {
    CHECK_THROWS_AS(fibonacciSphere(0), ConfigError);
    const auto dirs = fibonacciSphere(2000);
    REQUIRE(dirs.size() == 2000);
    for (const Vec3& d : dirs) CHECK(std::abs(d.norm() - 1.0) < 1e-12);
    double minSep = 10.0;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            minSep = std::min(minSep, (dirs[i] - dirs[j]).norm());
    // Mean spacing is sqrt(4*pi/n); the spiral stays above half of it.
    CHECK(minSep > 0.5 * std::sqrt(4.0 * kPi / 2000));
}

TEST_CASE("fibonacci z coordinates sweep the poles symmetrically") {
    const int n = 10000;
    const auto dirs = fibonacciSphere(n);
    CHECK(dirs.front().z() == doctest::Approx(1.0 - 1.0 / n));
    CHECK(dirs.back().z() == doctest::Approx(-1.0 + 1.0 / n));
    for (std::size_t i = 1; i < dirs.size(); ++i) CHECK(dirs[i].z() < dirs[i - 1].z());
}

TEST_CASE("two overlapping spheres keep the expected cap fraction") {
    // Unit spheres one radius apart: the buried cap is a quarter of
    // each sphere, so 3/4 of the candidates survive.
    std::vector<Atom> atoms(2);
    atoms[0] = {"X", Vec3(0, 0, 0), 1.0};
    atoms[1] = {"X", Vec3(1, 0, 0), 1.0};
    const Structure s(std::move(atoms));
    const NeighborList nb = buildNeighborList(s, 1.2);
    const int numPoints = 10000;
    const PointCloud cloud = genSurfacePoints(s, nb, allSurface(2), numPoints, false);
    const double frac =
        static_cast<double>(cloud.size()) / (2.0 * static_cast<double>(numPoints));
    CHECK(frac == doctest::Approx(0.75).epsilon(0.02));
}

TEST_CASE("surface points are atom-major and thread independent") {
    ShapeSpec spec;
    spec.kind = ShapeKind::FccOctahedron;
    spec.order = 4;
    const Structure s = generateStructure(spec);
    const NeighborList nb = buildNeighborList(s, 1.2);
    const SurfaceFlags flags = allSurface(s.size());
    const PointCloud one = genSurfacePoints(s, nb, flags, 500, false, 1);
    for (std::size_t i = 1; i < one.size(); ++i)
        CHECK(one.ownerAtom[i] >= one.ownerAtom[i - 1]);
    for (int threads : {4, 8}) {
        const PointCloud t = genSurfacePoints(s, nb, flags, 500, false, threads);
        REQUIRE(t.size() == one.size());
        CHECK(t.ownerAtom == one.ownerAtom);
        bool same = true;
        for (std::size_t i = 0; i < t.size(); ++i)
            same = same && (t.points[i] - one.points[i]).norm() == 0;
        CHECK(same);
    }
}

TEST_CASE("every kept point lies on its sphere and outside all neighbors") {
    std::mt19937 rng(3);
    const Structure s = testutil::randomStructure(rng, 12, 5.0, 0.8, 1.5);
    const NeighborList nb = buildNeighborList(s, 1.2);
    const PointCloud cloud = genSurfacePoints(s, nb, allSurface(s.size()), 300, false);
    REQUIRE(cloud.size() > 0);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const Atom& owner = s[static_cast<std::size_t>(cloud.ownerAtom[i])];
        CHECK(std::abs((cloud.points[i] - owner.position).norm() - owner.radius) < 1e-9);
        for (int j : nb.neighbors[static_cast<std::size_t>(cloud.ownerAtom[i])]) {
            const Atom& other = s[static_cast<std::size_t>(j)];
            CHECK((cloud.points[i] - other.position).norm() >= other.radius - 1e-12);
        }
    }
}

TEST_CASE("voxelisation spans the cloud bounding cube and is thread independent") {
    std::vector<Atom> atoms(2);
    atoms[0] = {"X", Vec3(0, 0, 0), 1.0};
    atoms[1] = {"X", Vec3(4, 0, 0), 1.0};
    const Structure s(std::move(atoms));

    PointCloud cloud;
    cloud.points = {Vec3(0, 0, 0), Vec3(4, 4, 4), Vec3(-3, 1, 1), Vec3(2, 9, 2)};
    cloud.ownerAtom = {0, 1, 0, 1};

    // Cloud bounds: min (-3,0,0), max (4,9,4), so the cube edge is the
    // widest spread, 9, and the voxel edge is 9/8.
    const BinaryGrid g = voxelise(cloud, 8, s);
    CHECK(g.resolution == 8);
    CHECK(g.physicalEdge == 9.0);
    CHECK((g.origin - Vec3(-3, 0, 0)).norm() == 0);
    CHECK(g.occupied(2, 0, 0)); // (0,0,0): rel (3,0,0) / 1.125
    CHECK(g.occupied(6, 3, 3)); // (4,4,4)
    CHECK(g.occupied(0, 0, 0)); // (-3,1,1) sits on the lower corner
    CHECK(g.occupied(4, 7, 1)); // (2,9,2): y hits the far boundary, clamped to 7
    CHECK(g.occupiedCount() == 4);

    // All points coincident: the cube edge falls back to the structure range.
    PointCloud flat;
    flat.points = {Vec3(1, 1, 1), Vec3(1, 1, 1)};
    flat.ownerAtom = {0, 0};
    const BinaryGrid f = voxelise(flat, 8, s);
    CHECK(f.physicalEdge == s.maxRange());
    CHECK((f.origin - Vec3(1, 1, 1)).norm() == 0);
    CHECK(f.occupiedCount() == 1);
    CHECK(f.occupied(0, 0, 0));

    PointCloud empty;
    CHECK_THROWS_AS(voxelise(empty, 8, s), ConfigError);
    CHECK_THROWS_AS(voxelise(cloud, 1, s), ConfigError);

    std::mt19937 rng(11);
    PointCloud big;
    std::uniform_real_distribution<double> u(-1.0, 5.0);
    for (int i = 0; i < 5000; ++i) {
        big.points.emplace_back(u(rng), u(rng), u(rng));
        big.ownerAtom.push_back(0);
    }
    const BinaryGrid a = voxelise(big, 64, s, 1);
    const BinaryGrid b = voxelise(big, 64, s, 8);
    CHECK(a.bits == b.bits);
}

TEST_CASE("box counts match the naive block scan on random grids") {
    std::mt19937 rng(1234);
    SUBCASE("power of two resolutions run the pyramid") {
        for (int trial = 0; trial < 4; ++trial) {
            const BinaryGrid g = randomGrid(rng, 32, 0.002 + 0.05 * trial);
            const std::vector<int> scales = {1, 2, 4, 8, 16};
            const BoxCountSeries series = countBoxesGrid(g, scales);
            REQUIRE(series.size() == scales.size());
            // Largest box first.
            for (std::size_t i = 0; i < scales.size(); ++i) {
                const int s = scales[scales.size() - 1 - i];
                CHECK(series.lengths[i] == s * g.voxelEdge());
                CHECK(series.counts[i] == naiveBlockCount(g, s));
            }
        }
    }
    SUBCASE("non power-of-two scales use the block scan") {
        const BinaryGrid g = randomGrid(rng, 60, 0.01);
        const std::vector<int> scales = {2, 3, 5, 6, 10, 15, 20, 30};
        const BoxCountSeries series = countBoxesGrid(g, scales);
        for (std::size_t i = 0; i < scales.size(); ++i) {
            const int s = scales[scales.size() - 1 - i];
            CHECK(series.counts[i] == naiveBlockCount(g, s));
        }
    }
    SUBCASE("scales that do not divide the resolution leave partial blocks") {
        const BinaryGrid g = randomGrid(rng, 60, 0.02);
        const std::vector<int> scales = {7, 8, 13, 25, 59};
        const BoxCountSeries series = countBoxesGrid(g, scales);
        for (std::size_t i = 0; i < scales.size(); ++i) {
            const int s = scales[scales.size() - 1 - i];
            CHECK(series.counts[i] == naiveBlockCount(g, s));
        }
    }
    SUBCASE("empty and full grids") {
        BinaryGrid g = BinaryGrid::empty(16, 16.0, Vec3::Zero());
        const BoxCountSeries none = countBoxesGrid(g, {1, 2, 4});
        for (std::int64_t c : none.counts) CHECK(c == 0); // honest zeros
        for (int z = 0; z < 16; ++z)
            for (int y = 0; y < 16; ++y)
                for (int x = 0; x < 16; ++x) g.set(x, y, z);
        const BoxCountSeries series = countBoxesGrid(g, {1, 2, 4, 8});
        CHECK(series.counts[0] == 8);       // scale 8
        CHECK(series.counts[3] == 16 * 16 * 16); // scale 1
    }
}

TEST_CASE("scale validation") {
    std::mt19937 rng(5);
    const BinaryGrid g = randomGrid(rng, 16, 0.1);
    CHECK_THROWS_AS(countBoxesGrid(g, {17}), ConfigError);     // beyond the resolution
    CHECK_THROWS_AS(countBoxesGrid(g, {2, 2}), ConfigError);   // duplicate
    CHECK_THROWS_AS(countBoxesGrid(g, {}), ConfigError);       // empty
    CHECK_THROWS_AS(countBoxesGrid(g, {0, 2}), ConfigError);   // nonpositive
    // 3 does not divide 16: allowed, counted with partial boundary blocks.
    const BoxCountSeries odd = countBoxesGrid(g, {3});
    CHECK(odd.counts[0] == naiveBlockCount(g, 3));
}

TEST_CASE("physical lengths snap onto whole-voxel box scales") {
    const BinaryGrid g = BinaryGrid::empty(64, 32.0, Vec3::Zero()); // voxel edge 0.5
    // Descending lengths; 0.3 and 6.1 round to 1 and 12, 30 clamps to 32.
    const std::vector<int> scales = snapScalesToLengths({30.0, 6.1, 1.0, 0.3, 0.1}, g);
    CHECK(scales == std::vector<int>{1, 2, 12, 32});
    CHECK_THROWS_AS(snapScalesToLengths({}, g), ConfigError);
    CHECK_THROWS_AS(snapScalesToLengths({2.0, -1.0}, g), ConfigError);
    CHECK_THROWS_AS(snapScalesToLengths({1.0, 2.0, 4.0}, g), ConfigError); // ascending
}

TEST_CASE("doubling the box size can cut the count at most eightfold") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 3; ++trial) {
        const BinaryGrid g = randomGrid(rng, 64, 0.001 * (trial + 1));
        const BoxCountSeries series = countBoxesGrid(g, gridScaleSchedule(64));
        for (std::size_t i = 1; i < series.size(); ++i) {
            CHECK(series.counts[i] >= series.counts[i - 1]);     // smaller boxes: more
            CHECK(series.counts[i] <= 8 * series.counts[i - 1]);
        }
    }
}

TEST_CASE("the default scale ladder stops at half the resolution") {
    CHECK(gridScaleSchedule(8) == std::vector<int>{1, 2, 4});
    CHECK(gridScaleSchedule(1024).back() == 512);
    CHECK_THROWS_AS(gridScaleSchedule(1), ConfigError);
}

TEST_CASE("menger sponge occupancy is exactly 20^level") {
    std::int64_t expect = 1;
    for (int level = 0; level <= 4; ++level) {
        const BinaryGrid g = mengerSpongeGrid(level);
        CHECK(g.resolution == static_cast<int>(std::llround(std::pow(3.0, level))));
        CHECK(g.physicalEdge == static_cast<double>(g.resolution));
        CHECK(static_cast<std::int64_t>(g.occupiedCount()) == expect);
        expect *= 20;
    }
    CHECK_THROWS_AS(mengerSpongeGrid(-1), ConfigError);
    CHECK_THROWS_AS(mengerSpongeGrid(6), ConfigError);
}

TEST_CASE("menger sponge digit rule spot checks") {
    const BinaryGrid g = mengerSpongeGrid(2);
    CHECK(!g.occupied(4, 4, 4)); // centre: middle digit is (1,1,1)
    CHECK(g.occupied(0, 0, 0));
    CHECK(g.occupied(8, 8, 8));
    CHECK(!g.occupied(1, 1, 0)); // low digits (1,1,0)
    CHECK(g.occupied(1, 0, 0));
}
