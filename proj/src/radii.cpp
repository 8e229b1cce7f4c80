#include "boxdim/radii.hpp"

#include <array>
#include <cstring>

#include "boxdim/errors.hpp"

namespace boxdim {

namespace {

struct RadiusEntry {
    const char* symbol;
    double radius; // angstrom
};

// Calculated atomic radii (Clementi, Raimondi, Reinhardt), Z = 1..54
// plus the common sixth-row metals.
constexpr std::array<RadiusEntry, 68> kAtomicRadii{{
    {"H", 0.53},  {"He", 0.31}, {"Li", 1.67}, {"Be", 1.12}, {"B", 0.87},
    {"C", 0.67},  {"N", 0.56},  {"O", 0.48},  {"F", 0.42},  {"Ne", 0.38},
    {"Na", 1.90}, {"Mg", 1.45}, {"Al", 1.18}, {"Si", 1.11}, {"P", 0.98},
    {"S", 0.88},  {"Cl", 0.79}, {"Ar", 0.71}, {"K", 2.43},  {"Ca", 1.94},
    {"Sc", 1.84}, {"Ti", 1.76}, {"V", 1.71},  {"Cr", 1.66}, {"Mn", 1.61},
    {"Fe", 1.56}, {"Co", 1.52}, {"Ni", 1.49}, {"Cu", 1.45}, {"Zn", 1.42},
    {"Ga", 1.36}, {"Ge", 1.25}, {"As", 1.14}, {"Se", 1.03}, {"Br", 0.94},
    {"Kr", 0.88}, {"Rb", 2.65}, {"Sr", 2.19}, {"Y", 2.12},  {"Zr", 2.06},
    {"Nb", 1.98}, {"Mo", 1.90}, {"Tc", 1.83}, {"Ru", 1.78}, {"Rh", 1.73},
    {"Pd", 1.69}, {"Ag", 1.65}, {"Cd", 1.61}, {"In", 1.56}, {"Sn", 1.45},
    {"Sb", 1.33}, {"Te", 1.23}, {"I", 1.15},  {"Xe", 1.08}, {"Cs", 2.98},
    {"Ba", 2.53}, {"Hf", 2.08}, {"Ta", 2.00}, {"W", 1.93},  {"Re", 1.88},
    {"Os", 1.85}, {"Ir", 1.80}, {"Pt", 1.77}, {"Au", 1.74}, {"Hg", 1.71},
    {"Tl", 1.56}, {"Pb", 1.54}, {"Bi", 1.43},
}};

// 12-coordinate metallic radii (Greenwood & Earnshaw). Only defined
// for metals; looking up a nonmetal here is an error by design.
constexpr std::array<RadiusEntry, 46> kMetallicRadii{{
    {"Li", 1.52}, {"Be", 1.12}, {"Na", 1.86}, {"Mg", 1.60}, {"Al", 1.43},
    {"K", 2.27},  {"Ca", 1.97}, {"Sc", 1.64}, {"Ti", 1.47}, {"V", 1.35},
    {"Cr", 1.29}, {"Mn", 1.37}, {"Fe", 1.26}, {"Co", 1.25}, {"Ni", 1.25},
    {"Cu", 1.28}, {"Zn", 1.37}, {"Ga", 1.53}, {"Rb", 2.48}, {"Sr", 2.15},
    {"Y", 1.82},  {"Zr", 1.60}, {"Nb", 1.47}, {"Mo", 1.40}, {"Tc", 1.35},
    {"Ru", 1.34}, {"Rh", 1.34}, {"Pd", 1.37}, {"Ag", 1.44}, {"Cd", 1.52},
    {"In", 1.67}, {"Sn", 1.58}, {"Cs", 2.65}, {"Ba", 2.17}, {"Hf", 1.59},
    {"Ta", 1.47}, {"W", 1.41},  {"Re", 1.37}, {"Os", 1.35}, {"Ir", 1.36},
    {"Pt", 1.39}, {"Au", 1.44}, {"Hg", 1.55}, {"Tl", 1.71}, {"Pb", 1.75},
    {"Bi", 1.82},
}};

const RadiusEntry* find(const std::string& element, RadiusType type) {
    if (type == RadiusType::Atomic) {
        for (const auto& e : kAtomicRadii)
            if (element == e.symbol) return &e;
    } else {
        for (const auto& e : kMetallicRadii)
            if (element == e.symbol) return &e;
    }
    return nullptr;
}

} // namespace

double radiusFor(const std::string& element, RadiusType type) {
    const RadiusEntry* e = find(element, type);
    if (!e)
        throw UnknownElementError("no " + std::string(radiusTypeName(type)) +
                                  " radius tabulated for element '" + element + "'");
    return e->radius;
}

bool hasRadius(const std::string& element, RadiusType type) {
    return find(element, type) != nullptr;
}

RadiusType parseRadiusType(const std::string& name) {
    if (name == "atomic") return RadiusType::Atomic;
    if (name == "metallic") return RadiusType::Metallic;
    throw ConfigError("unknown radius type '" + name + "' (expected atomic or metallic)");
}

const char* radiusTypeName(RadiusType type) {
    return type == RadiusType::Atomic ? "atomic" : "metallic";
}

} // namespace boxdim
