#pragma once

#include <cstdint>

#include "checkers/lattice.hpp"

// Closed-form amplitudes for the homogeneous field u_1 on the unit lattice.
// Non-unit steps reduce to this case through a(eps x, eps t, m, eps) = a(x, t, m eps, 1).
namespace checkers::exact {

/// Diagonal coordinates: (xi_d, eta_d) names the lattice point
/// (xi_d - eta_d + 1, xi_d + eta_d + 1).
struct DiagCoords {
  std::int64_t xi_d = 0;
  std::int64_t eta_d = 0;

  LatticeIndex point() const { return {xi_d - eta_d + 1, xi_d + eta_d + 1}; }
  /// Throws InvalidArgs for points outside the reachable set.
  static DiagCoords from_point(LatticeIndex idx);
};

/// Arguments of a terminating 2F1: b <= 0; c != 0, and c < b when c < 0.
struct HypArgs {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 1;
  double z = 0.0;
};

/// Terminating Gauss series, summed up to k = |b|.
double hyp2f1_poly(const HypArgs& args);

// Binomial-sum closed forms, double precision. They cancel badly once
// xi_d + eta_d reaches a few dozen; use the *_exact variants there.
double a1_closed(DiagCoords d, double m);
double a2_closed(DiagCoords d, double m);
Amplitude amplitude_closed(DiagCoords d, double m);

// Same sums evaluated in exact rational arithmetic (the double m is taken
// at its exact binary value), rounded once at the end.
double a1_closed_exact(DiagCoords d, double m);
double a2_closed_exact(DiagCoords d, double m);
Amplitude amplitude_closed_exact(DiagCoords d, double m);

// Hypergeometric rewrites with z = 1 - (1 + m^2)^2.
double a1_hyper(DiagCoords d, double m);
double a2_hyper(DiagCoords d, double m);

inline constexpr std::int64_t kGeneratingMaxDegree = 40;

/// Coefficient of p^xi q^eta in the rational generating function of the chosen
/// component, divided by (1 + m^2)^((xi + eta) / 2).
double generating_coeff(DiagCoords d, double m, int component);

}  // namespace checkers::exact
