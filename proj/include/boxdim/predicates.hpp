#pragma once

#include "boxdim/types.hpp"

namespace boxdim {

// Exact-sign geometric predicates.
//
// Each predicate evaluates a determinant in plain double arithmetic
// first and accepts that sign when it clears a conservative forward
// error bound; otherwise it re-evaluates the determinant exactly with
// floating-point expansion arithmetic, so ties (sign 0) are genuine
// degeneracies and never rounding noise. Lattice inputs hit the exact
// path constantly, which is the whole point.

// Sign of det[b-a; c-a; d-a].
// +1: d lies on the side of plane(a,b,c) toward which (a,b,c) turns
//     counterclockwise (tetrahedron (a,b,c,d) is positively oriented)
//  0: coplanar
int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

// Circumsphere test for a POSITIVELY oriented tetrahedron (a,b,c,d):
// +1 if p lies strictly inside the circumsphere, -1 strictly outside,
// 0 exactly on it. Behaviour is undefined for negative orientation,
// callers must keep their tetrahedra canonical.
int insphere(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
             const Vec3& p);

// Circumcircle test for four coplanar points after projecting them
// onto the coordinate plane with the largest triangle footprint: +1
// if p is strictly inside the projected circle through (a,b,c), -1
// outside, 0 on it. For planes perpendicular to an axis this is the
// metric in-circle test; for tilted planes it is an exact, orientation
// independent tie-break (which is all the triangulation needs from
// it). (a,b,c) must not be collinear.
int incircleCoplanar(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p);

// Sign of the 2D cross product (b-a) x (c-a): +1 for counterclockwise.
int orient2d(double ax, double ay, double bx, double by, double cx, double cy);

// Exact test for three collinear (or coincident) points.
bool collinear3d(const Vec3& a, const Vec3& b, const Vec3& c);

} // namespace boxdim
