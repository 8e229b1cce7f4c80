#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "boxdim/delaunay.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/predicates.hpp"
#include "boxdim/types.hpp"

using namespace boxdim;

TEST_CASE("orient3d signs and exact zeros") {
    const Vec3 a(0, 0, 0), b(1, 0, 0), c(0, 1, 0), d(0, 0, 1);
    CHECK(orient3d(a, b, c, d) == 1);
    CHECK(orient3d(a, c, b, d) == -1);
    CHECK(orient3d(a, b, c, Vec3(0.25, 0.25, 0)) == 0);
    // Large coplanar coordinates must still give an exact zero.
    CHECK(orient3d(Vec3(0, 0, 0), Vec3(1e8, 0, 0), Vec3(0, 1e8, 0),
                   Vec3(7e7, 3e7, 0)) == 0);
    // A one-ulp-ish offset must be seen.
    CHECK(orient3d(a, b, c, Vec3(0.25, 0.25, 1e-300)) == 1);
}

TEST_CASE("insphere agrees with the circumsphere of a regular tetrahedron") {
    const Vec3 a(0, 0, 0), b(1, 0, 0), c(0, 1, 0), d(0, 0, 1);
    REQUIRE(orient3d(a, b, c, d) == 1);
    CHECK(insphere(a, b, c, d, Vec3(0.25, 0.25, 0.25)) == 1);
    CHECK(insphere(a, b, c, d, Vec3(10, 10, 10)) == -1);
    CHECK(insphere(a, b, c, d, a) == 0);
    CHECK(insphere(a, b, c, d, Vec3(1, 1, 1)) == 0); // opposite pole of the circumsphere
}

TEST_CASE("orient2d and planar circle membership") {
    CHECK(orient2d(0, 0, 1, 0, 0, 1) == 1);
    CHECK(orient2d(0, 0, 1, 0, 2, 0) == 0);
    CHECK(orient2d(0, 0, 0, 1, 1, 0) == -1);

    // Circle through (0,0), (2,0), (0,2): centre (1,1), radius sqrt(2).
    const Vec3 a(0, 0, 0), b(2, 0, 0), c(0, 2, 0);
    CHECK(incircleCoplanar(a, b, c, Vec3(0.5, 0.5, 0)) == 1);
    CHECK(incircleCoplanar(a, b, c, Vec3(5, 5, 0)) == -1);
    CHECK(incircleCoplanar(a, b, c, Vec3(2, 2, 0)) == 0);
    // Winding must not flip the verdict.
    CHECK(incircleCoplanar(a, c, b, Vec3(0.5, 0.5, 0)) == 1);
    // Same configuration in the yz plane.
    const Vec3 a2(3, 0, 0), b2(3, 2, 0), c2(3, 0, 2);
    CHECK(incircleCoplanar(a2, b2, c2, Vec3(3, 0.5, 0.5)) == 1);
    CHECK(incircleCoplanar(a2, b2, c2, Vec3(3, 2, 2)) == 0);
}

TEST_CASE("collinear3d is exact") {
    CHECK(collinear3d(Vec3(0, 0, 0), Vec3(1, 1, 1), Vec3(7, 7, 7)));
    CHECK(collinear3d(Vec3(2, 2, 2), Vec3(2, 2, 2), Vec3(9, 1, 4)));
    CHECK(!collinear3d(Vec3(0, 0, 0), Vec3(1, 1, 1), Vec3(7, 7, 7.0000001)));
}

namespace {

// Brute-force Delaunay property: no vertex strictly inside the
// circumsphere of any finite cell.
void checkEmptyCircumspheres(const Delaunay3& dt) {
    for (std::size_t c = 0; c < dt.cells().size(); ++c) {
        const auto& cell = dt.cells()[c];
        if (!cell.alive || cell.v[3] == Delaunay3::kInfinite) continue;
        const Vec3& a = dt.vertexPoint(cell.v[0]);
        const Vec3& b = dt.vertexPoint(cell.v[1]);
        const Vec3& cc = dt.vertexPoint(cell.v[2]);
        const Vec3& d = dt.vertexPoint(cell.v[3]);
        for (std::size_t v = 0; v < dt.vertexCount(); ++v) {
            if (static_cast<int>(v) == cell.v[0] || static_cast<int>(v) == cell.v[1] ||
                static_cast<int>(v) == cell.v[2] || static_cast<int>(v) == cell.v[3])
                continue;
            CHECK(insphere(a, b, cc, d, dt.vertexPoint(static_cast<int>(v))) <= 0);
        }
    }
}

std::vector<Vec3> randomPoints(std::mt19937& rng, int n, double scale) {
    std::uniform_real_distribution<double> u(0.0, scale);
    std::vector<Vec3> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(u(rng), u(rng), u(rng));
    return pts;
}

} // namespace

TEST_CASE("triangulating random point sets keeps every circumsphere empty") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        const auto pts = randomPoints(rng, 40 + trial * 10, 10.0);
        Delaunay3 dt(pts);
        dt.validate();
        checkEmptyCircumspheres(dt);
    }
}

TEST_CASE("lattice points with their massive degeneracies triangulate cleanly") {
    std::vector<Vec3> pts;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) pts.emplace_back(x, y, z);
    Delaunay3 dt(pts);
    dt.validate();
    checkEmptyCircumspheres(dt);
    // Every lattice point must be a vertex, and the hull of a cube's
    // lattice is its outer shell.
    const std::vector<char> hull = dt.hullVertexFlags();
    std::size_t onHull = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (hull[static_cast<std::size_t>(dt.vertexForInput()[i])]) ++onHull;
    CHECK(onHull == 64 - 8); // all but the 2x2x2 interior
}

TEST_CASE("cospherical points (sphere poles and equator) still triangulate") {
    // 8 cube corners are cospherical; add the centre for spice.
    std::vector<Vec3> pts;
    for (int x : {0, 1})
        for (int y : {0, 1})
            for (int z : {0, 1}) pts.emplace_back(x, y, z);
    pts.emplace_back(0.5, 0.5, 0.5);
    Delaunay3 dt(pts);
    dt.validate();
    checkEmptyCircumspheres(dt);
    CHECK(dt.vertexCount() == 9);
}

TEST_CASE("duplicate input points collapse to one vertex") {
    std::vector<Vec3> pts = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1),
                             Vec3(0, 0, 0), Vec3(1, 0, 0)};
    Delaunay3 dt(pts);
    dt.validate();
    CHECK(dt.vertexCount() == 4);
    CHECK(dt.vertexForInput()[4] == dt.vertexForInput()[0]);
    CHECK(dt.vertexForInput()[5] == dt.vertexForInput()[1]);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(Delaunay3({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)}),
                    DegenerateInputError);
    // All collinear.
    CHECK_THROWS_AS(Delaunay3({Vec3(0, 0, 0), Vec3(1, 1, 1), Vec3(2, 2, 2), Vec3(3, 3, 3)}),
                    DegenerateInputError);
    // All coplanar.
    std::vector<Vec3> plane;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) plane.emplace_back(x, y, 0.0);
    CHECK_THROWS_AS(Delaunay3{plane}, DegenerateInputError);
}

TEST_CASE("circumradius matches hand geometry") {
    // Regular tetrahedron with edge sqrt(2) has circumradius sqrt(3)/2.
    const std::vector<Vec3> pts = {Vec3(0, 0, 0), Vec3(1, 1, 0), Vec3(1, 0, 1),
                                   Vec3(0, 1, 1)};
    Delaunay3 dt(pts);
    int finite = -1;
    for (std::size_t c = 0; c < dt.cells().size(); ++c)
        if (dt.cellAlive(static_cast<int>(c)) && dt.cellFinite(static_cast<int>(c)))
            finite = static_cast<int>(c);
    REQUIRE(finite >= 0);
    CHECK(dt.circumradius(finite) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}
