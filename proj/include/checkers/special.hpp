#pragma once

// Bessel J0, J1 and the Airy function Ai on the real line.
namespace checkers::special {

/// Power series for |z| <= 8, Miller backward recurrence beyond.
double bessel_j0(double z);
double bessel_j1(double z);

/// Maclaurin series for |lambda| <= 8, asymptotic expansions outside.
/// Accepts any finite lambda; throws OutOfRange otherwise.
double airy_ai(double lambda);

}  // namespace checkers::special
