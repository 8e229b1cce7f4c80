#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace boxdim {

using Vec3 = Eigen::Vector3d;

// One sphere of the union: element label, centre, radius (angstrom).
struct Atom {
    std::string element;
    Vec3 position = Vec3::Zero();
    double radius = 0.0;
};

// Axis-aligned bounding box of atom centres.
struct Bounds {
    Vec3 min = Vec3::Zero();
    Vec3 max = Vec3::Zero();
};

// An ordered collection of atoms plus cached bounds. Atom order is
// preserved exactly as loaded/constructed; indices into `atoms` are
// the atom ids used throughout the library.
class Structure {
public:
    Structure() = default;
    explicit Structure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    const Atom& operator[](std::size_t i) const { return atoms_[i]; }

    // Componentwise min/max over atom centres.
    const Vec3& minXYZ() const { return min_; }
    const Vec3& maxXYZ() const { return max_; }

    // Largest axis extent of the centre bounding box. A structure with
    // no spatial extent (single atom, or all centres coincident) falls
    // back to one atomic diameter so the value is always positive.
    double maxRange() const { return maxRange_; }

    double minRadius() const { return minRadius_; }
    double maxRadius() const { return maxRadius_; }

private:
    std::vector<Atom> atoms_;
    Vec3 min_ = Vec3::Zero();
    Vec3 max_ = Vec3::Zero();
    double maxRange_ = 0.0;
    double minRadius_ = 0.0;
    double maxRadius_ = 0.0;
};

// Bounding box of a bare point set (componentwise min/max scan).
Bounds boundingBox(const std::vector<Vec3>& points);

} // namespace boxdim
