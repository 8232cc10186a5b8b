#pragma once

#include <complex>

namespace wgqed {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz). Accurate to ~1e-13 on the
// closed upper half-plane; the lower half-plane is reached through
// w(z) = 2 exp(-z^2) - w(-z) and may overflow for large |Im z|.
std::complex<double> faddeeva_w(std::complex<double> z);

// Error function of a complex argument.
std::complex<double> cerf(std::complex<double> z);

// Scaled complementary error function exp(x^2) erfc(x) for real x.
double erfcx(double x);

}  // namespace wgqed
