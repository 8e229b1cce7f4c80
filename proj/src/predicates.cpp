#include "boxdim/predicates.hpp"

#include <cmath>
#include <vector>

namespace boxdim {

namespace {

// ---------------------------------------------------------------------------
// Floating-point expansion arithmetic.
//
// An expansion is a sum of doubles, stored by increasing magnitude,
// whose components do not overlap in their bit ranges; the sign of the
// whole sum is the sign of its most significant nonzero component.
// The primitives below are the classical error-free transformations;
// the compound operations favour obvious correctness over speed, which
// is fine because they only run when a filter fails.
// ---------------------------------------------------------------------------

using Expansion = std::vector<double>;

inline void twoSum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void twoDiff(double a, double b, double& x, double& y) {
    x = a - b;
    const double bv = a - x;
    const double av = x + bv;
    y = (a - av) - (b - bv);
}

inline void twoProd(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

// e + b for scalar b (Shewchuk's GROW-EXPANSION); keeps components
// nonoverlapping and ordered.
Expansion grow(const Expansion& e, double b) {
    Expansion h;
    h.reserve(e.size() + 1);
    double q = b;
    for (double ei : e) {
        double sum, err;
        twoSum(q, ei, sum, err);
        if (err != 0.0) h.push_back(err);
        q = sum;
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

Expansion add(const Expansion& e, const Expansion& f) {
    Expansion r = e;
    for (double fi : f) r = grow(r, fi);
    return r;
}

Expansion scale(const Expansion& e, double b) {
    Expansion r;
    for (double ei : e) {
        double p, err;
        twoProd(ei, b, p, err);
        if (err != 0.0) r = grow(r, err);
        if (p != 0.0) r = grow(r, p);
    }
    if (r.empty()) r.push_back(0.0);
    return r;
}

Expansion mul(const Expansion& e, const Expansion& f) {
    Expansion r{0.0};
    for (double fi : f) r = add(r, scale(e, fi));
    return r;
}

Expansion sub(const Expansion& e, const Expansion& f) {
    Expansion nf;
    nf.reserve(f.size());
    for (double fi : f) nf.push_back(-fi);
    return add(e, nf);
}

Expansion diff(double a, double b) {
    double x, y;
    twoDiff(a, b, x, y);
    Expansion r;
    if (y != 0.0) r.push_back(y);
    r.push_back(x);
    return r;
}

int signOf(const Expansion& e) {
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (*it > 0.0) return 1;
        if (*it < 0.0) return -1;
    }
    return 0;
}

inline int signOf(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// det[[a,b],[c,d]] as an expansion, entries already exact expansions.
Expansion det2(const Expansion& a, const Expansion& b, const Expansion& c,
               const Expansion& d) {
    return sub(mul(a, d), mul(b, c));
}

// ---------------------------------------------------------------------------
// orient3d
// ---------------------------------------------------------------------------

int orient3dExact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    const Expansion m[3][3] = {
        {diff(b.x(), a.x()), diff(b.y(), a.y()), diff(b.z(), a.z())},
        {diff(c.x(), a.x()), diff(c.y(), a.y()), diff(c.z(), a.z())},
        {diff(d.x(), a.x()), diff(d.y(), a.y()), diff(d.z(), a.z())},
    };
    Expansion det = mul(m[0][0], det2(m[1][1], m[1][2], m[2][1], m[2][2]));
    det = sub(det, mul(m[0][1], det2(m[1][0], m[1][2], m[2][0], m[2][2])));
    det = add(det, mul(m[0][2], det2(m[1][0], m[1][1], m[2][0], m[2][1])));
    return signOf(det);
}

constexpr double kOrient3dFilter = 1e-13;

} // namespace

int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    const Vec3 u = b - a, v = c - a, w = d - a;
    const double det = u.x() * (v.y() * w.z() - v.z() * w.y()) -
                       u.y() * (v.x() * w.z() - v.z() * w.x()) +
                       u.z() * (v.x() * w.y() - v.y() * w.x());
    const double mag = std::abs(u.x()) * (std::abs(v.y() * w.z()) + std::abs(v.z() * w.y())) +
                       std::abs(u.y()) * (std::abs(v.x() * w.z()) + std::abs(v.z() * w.x())) +
                       std::abs(u.z()) * (std::abs(v.x() * w.y()) + std::abs(v.y() * w.x()));
    if (std::abs(det) > kOrient3dFilter * mag) return signOf(det);
    return orient3dExact(a, b, c, d);
}

namespace {

// ---------------------------------------------------------------------------
// insphere
// ---------------------------------------------------------------------------

int insphereExact(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
                  const Vec3& p) {
    const Vec3* pts[4] = {&a, &b, &c, &d};
    Expansion row[4][3];
    Expansion norm2[4];
    for (int i = 0; i < 4; ++i) {
        row[i][0] = diff(pts[i]->x(), p.x());
        row[i][1] = diff(pts[i]->y(), p.y());
        row[i][2] = diff(pts[i]->z(), p.z());
        norm2[i] = add(add(mul(row[i][0], row[i][0]), mul(row[i][1], row[i][1])),
                       mul(row[i][2], row[i][2]));
    }
    // Laplace expansion of det[[row_i, norm2_i]] along the last column.
    Expansion det{0.0};
    for (int i = 0; i < 4; ++i) {
        int r[3], k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) r[k++] = j;
        Expansion minor =
            mul(row[r[0]][0], det2(row[r[1]][1], row[r[1]][2], row[r[2]][1], row[r[2]][2]));
        minor = sub(minor, mul(row[r[0]][1], det2(row[r[1]][0], row[r[1]][2], row[r[2]][0],
                                                  row[r[2]][2])));
        minor = add(minor, mul(row[r[0]][2], det2(row[r[1]][0], row[r[1]][1], row[r[2]][0],
                                                  row[r[2]][1])));
        const Expansion term = mul(norm2[i], minor);
        // Sign of the cofactor for entry (i, 3): (-1)^(i+3).
        if ((i + 3) % 2 == 0)
            det = add(det, term);
        else
            det = sub(det, term);
    }
    return signOf(det);
}

constexpr double kInsphereFilter = 1e-12;

} // namespace

int insphere(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
             const Vec3& p) {
    const Vec3* pts[4] = {&a, &b, &c, &d};
    double row[4][3], norm2[4], absRow[4][3], absNorm2[4];
    for (int i = 0; i < 4; ++i) {
        for (int ax = 0; ax < 3; ++ax) {
            row[i][ax] = (*pts[i])[ax] - p[ax];
            absRow[i][ax] = std::abs(row[i][ax]);
        }
        norm2[i] = row[i][0] * row[i][0] + row[i][1] * row[i][1] + row[i][2] * row[i][2];
        absNorm2[i] = norm2[i];
    }
    auto minor3 = [](const double r0[3], const double r1[3], const double r2[3]) {
        return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
               r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
               r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    };
    auto minor3abs = [](const double r0[3], const double r1[3], const double r2[3]) {
        return r0[0] * (r1[1] * r2[2] + r1[2] * r2[1]) +
               r0[1] * (r1[0] * r2[2] + r1[2] * r2[0]) +
               r0[2] * (r1[0] * r2[1] + r1[1] * r2[0]);
    };
    double det = 0.0, mag = 0.0;
    for (int i = 0; i < 4; ++i) {
        int r[3], k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) r[k++] = j;
        const double m = minor3(row[r[0]], row[r[1]], row[r[2]]);
        const double mAbs = minor3abs(absRow[r[0]], absRow[r[1]], absRow[r[2]]);
        const double sgn = ((i + 3) % 2 == 0) ? 1.0 : -1.0;
        det += sgn * norm2[i] * m;
        mag += absNorm2[i] * mAbs;
    }
    int s;
    if (std::abs(det) > kInsphereFilter * mag)
        s = signOf(det);
    else
        s = insphereExact(a, b, c, d, p);
    // det < 0 means p inside for a positively oriented (a,b,c,d).
    return -s;
}

namespace {

// ---------------------------------------------------------------------------
// 2D predicates (used for points coplanar with a hull facet)
// ---------------------------------------------------------------------------

int orient2dExact(double ax, double ay, double bx, double by, double cx, double cy) {
    const Expansion detE = sub(mul(diff(bx, ax), diff(cy, ay)),
                               mul(diff(by, ay), diff(cx, ax)));
    return signOf(detE);
}

int incircle2dExact(const double a[2], const double b[2], const double c[2],
                    const double p[2]) {
    const double* pts[3] = {a, b, c};
    Expansion row[3][2], norm2[3];
    for (int i = 0; i < 3; ++i) {
        row[i][0] = diff(pts[i][0], p[0]);
        row[i][1] = diff(pts[i][1], p[1]);
        norm2[i] = add(mul(row[i][0], row[i][0]), mul(row[i][1], row[i][1]));
    }
    Expansion det = mul(norm2[0], det2(row[1][0], row[1][1], row[2][0], row[2][1]));
    det = sub(det, mul(norm2[1], det2(row[0][0], row[0][1], row[2][0], row[2][1])));
    det = add(det, mul(norm2[2], det2(row[0][0], row[0][1], row[1][0], row[1][1])));
    return signOf(det);
}

constexpr double kOrient2dFilter = 1e-14;
constexpr double kIncircle2dFilter = 1e-13;

int incircle2d(const double a[2], const double b[2], const double c[2],
               const double p[2]) {
    double row[3][2], norm2[3];
    const double* pts[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        row[i][0] = pts[i][0] - p[0];
        row[i][1] = pts[i][1] - p[1];
        norm2[i] = row[i][0] * row[i][0] + row[i][1] * row[i][1];
    }
    auto d2 = [](const double r0[2], const double r1[2]) {
        return r0[0] * r1[1] - r0[1] * r1[0];
    };
    auto d2abs = [](const double r0[2], const double r1[2]) {
        return std::abs(r0[0] * r1[1]) + std::abs(r0[1] * r1[0]);
    };
    const double det = norm2[0] * d2(row[1], row[2]) - norm2[1] * d2(row[0], row[2]) +
                       norm2[2] * d2(row[0], row[1]);
    const double mag = norm2[0] * d2abs(row[1], row[2]) + norm2[1] * d2abs(row[0], row[2]) +
                       norm2[2] * d2abs(row[0], row[1]);
    if (std::abs(det) > kIncircle2dFilter * mag) return signOf(det);
    return incircle2dExact(a, b, c, p);
}

} // namespace

int orient2d(double ax, double ay, double bx, double by, double cx, double cy) {
    const double det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    const double mag = std::abs((bx - ax) * (cy - ay)) + std::abs((by - ay) * (cx - ax));
    if (std::abs(det) > kOrient2dFilter * mag) return signOf(det);
    return orient2dExact(ax, ay, bx, by, cx, cy);
}

bool collinear3d(const Vec3& a, const Vec3& b, const Vec3& c) {
    // Collinear iff the cross product vanishes in all three projections.
    return orient2d(a.x(), a.y(), b.x(), b.y(), c.x(), c.y()) == 0 &&
           orient2d(a.y(), a.z(), b.y(), b.z(), c.y(), c.z()) == 0 &&
           orient2d(a.z(), a.x(), b.z(), b.x(), c.z(), c.x()) == 0;
}

int incircleCoplanar(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p) {
    // Project onto the coordinate plane where the triangle has the
    // largest footprint; the choice only needs the normal's dominant
    // axis, double precision is plenty for that.
    const Vec3 n = (b - a).cross(c - a);
    int drop = 0;
    if (std::abs(n.y()) > std::abs(n.x())) drop = 1;
    if (std::abs(n.z()) > std::abs(n[drop])) drop = 2;
    const int u = (drop + 1) % 3, v = (drop + 2) % 3;

    const double a2[2] = {a[u], a[v]}, b2[2] = {b[u], b[v]}, c2[2] = {c[u], c[v]},
                 p2[2] = {p[u], p[v]};
    const int circ = incircle2d(a2, b2, c2, p2);
    const int orient = orient2d(a2[0], a2[1], b2[0], b2[1], c2[0], c2[1]);
    return circ * orient;
}

} // namespace boxdim
