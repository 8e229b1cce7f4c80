#pragma once

#include <string>
#include <vector>

#include "boxdim/radii.hpp"
#include "boxdim/types.hpp"

namespace boxdim {

// Read a plain xyz file:
//
//   <atom count>
//   <comment line, possibly empty>
//   <element> <x> <y> <z>   (one line per atom; extra columns ignored)
//
// Every atom gets its sphere radius assigned from the radius table at
// load time, so an element missing from the table fails here rather
// than somewhere deep in a pipeline. Throws ParseError on malformed
// content (message carries the offending line number) and
// UnknownElementError for untabulated symbols.
Structure loadXyz(const std::string& path, RadiusType radType);

// Write `structure` back out in the same format. Positions are
// printed with enough digits to survive a round trip at 1e-9.
void writeXyz(const Structure& structure, const std::string& path,
              const std::string& comment = "");

// Write a bare point list as an xyz file, labelling every point with
// `label`. Used for the point-cloud / box-centre dump options.
void writeXyzPoints(const std::vector<Vec3>& points, const std::string& label,
                    const std::string& path, const std::string& comment = "");

} // namespace boxdim
