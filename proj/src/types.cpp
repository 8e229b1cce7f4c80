#include "boxdim/types.hpp"

#include <limits>

#include "boxdim/errors.hpp"

namespace boxdim {

Structure::Structure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw ConfigError("structure must contain at least one atom");

    min_ = atoms_[0].position;
    max_ = atoms_[0].position;
    minRadius_ = atoms_[0].radius;
    maxRadius_ = atoms_[0].radius;
    for (const Atom& a : atoms_) {
        min_ = min_.cwiseMin(a.position);
        max_ = max_.cwiseMax(a.position);
        minRadius_ = std::min(minRadius_, a.radius);
        maxRadius_ = std::max(maxRadius_, a.radius);
    }

    maxRange_ = (max_ - min_).maxCoeff();
    if (maxRange_ <= 0.0)
        maxRange_ = 2.0 * maxRadius_; // degenerate box: one atomic diameter
}

Bounds boundingBox(const std::vector<Vec3>& points) {
    if (points.empty())
        throw ConfigError("boundingBox of an empty point set");
    Bounds b{points[0], points[0]};
    for (const Vec3& p : points) {
        b.min = b.min.cwiseMin(p);
        b.max = b.max.cwiseMax(p);
    }
    return b;
}

} // namespace boxdim
