#pragma once

#include <string>

namespace boxdim {

// Which per-element sphere radius to assign to atoms.
//
// Atomic radii are the calculated single-atom values of Clementi,
// Raimondi and Reinhardt; metallic radii are the 12-coordinate values
// tabulated by Greenwood and Earnshaw (metals only).
enum class RadiusType {
    Atomic,
    Metallic,
};

// Radius in angstroms for `element` under the given convention.
// Throws UnknownElementError if the table has no entry; there is no
// fallback value on purpose.
double radiusFor(const std::string& element, RadiusType type);

// True if radiusFor() would succeed.
bool hasRadius(const std::string& element, RadiusType type);

RadiusType parseRadiusType(const std::string& name); // throws ConfigError
const char* radiusTypeName(RadiusType type);

} // namespace boxdim
