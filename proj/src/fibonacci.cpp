#include "boxdim/fibonacci.hpp"

#include <algorithm>
#include <cmath>

#include "boxdim/errors.hpp"

namespace boxdim {

std::vector<Vec3> fibonacciSphere(int n) {
    if (n < 1) throw ConfigError("fibonacciSphere needs at least one direction");
    const double goldenAngle = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<Vec3> dirs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = goldenAngle * i;
        dirs[static_cast<std::size_t>(i)] = Vec3(rho * std::cos(phi), rho * std::sin(phi), z);
    }
    return dirs;
}

} // namespace boxdim
