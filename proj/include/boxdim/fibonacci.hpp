#pragma once

#include <vector>

#include "boxdim/types.hpp"

namespace boxdim {

// n near-uniform unit directions from the golden-angle spiral:
// z stratified over (-1, 1), azimuth advancing by pi*(3 - sqrt 5).
// Deterministic; throws ConfigError for n < 1.
std::vector<Vec3> fibonacciSphere(int n);

} // namespace boxdim
