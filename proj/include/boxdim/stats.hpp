#pragma once

#include <vector>

namespace boxdim {

// Quantile of Student's t distribution: the value t with
// P(T <= t) = p for dof degrees of freedom. Computed through the
// regularized incomplete beta function, accurate to ~1e-12.
// Throws ConfigError for dof < 1 or p outside (0, 1).
double studentTQuantile(double p, int dof);

// Regularized incomplete beta function I_x(a, b), exposed for tests.
double regularizedIncompleteBeta(double a, double b, double x);

double meanOf(const std::vector<double>& v);
double medianOf(std::vector<double> v); // interpolating (type-7) median

// Remove values outside [q1 - 1.5*IQR, q3 + 1.5*IQR]; quartiles are
// interpolated (type 7). Order of survivors is preserved.
std::vector<double> iqrFilter(const std::vector<double>& v);

} // namespace boxdim
