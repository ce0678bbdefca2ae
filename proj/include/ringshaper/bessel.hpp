#pragma once

namespace ringshaper {

// First positive zero of J0.
inline constexpr double kBesselJ0FirstZero = 2.404825557695773;

// J0 via the Abramowitz-Stegun rational fits (9.4.1 / 9.4.3), |err| < 5e-8.
// Used in the off-axis quadratures where std::cyl_bessel_j is too slow.
double bessel_j0(double x);

}  // namespace ringshaper
