#pragma once

#include "checkers/lattice.hpp"

// Limit predictions for the lattice model: continuum Bessel limits,
// chirality-reversal limits, mass renormalisation and the uniform Airy
// approximation of a1.
namespace checkers::asymptotics {

/// A point strictly inside the light cone, |x| < t.
class ContinuumPoint {
 public:
  ContinuumPoint(double x, double t);
  double x() const { return x_; }
  double t() const { return t_; }

 private:
  double x_;
  double t_;
};

struct ContinuumLimit {
  double p_density;  // lim P / (4 eps^2)
  double a1_lim;     // lim a1 / (2 eps)
  double a2_lim;     // lim a2 / (2 eps)
};

/// eps -> 0 limit in the homogeneous field; Bessel argument m sqrt((t^2 - x^2) / 2).
ContinuumLimit continuum_field(const ContinuumPoint& pt, double m);
/// eps -> 0 limit without field; Bessel argument m sqrt(t^2 - x^2).
double continuum_free(const ContinuumPoint& pt, double m);

/// Zero-field mass with the same large-time distribution: (1 + m^2 eps^2)^2 = 1 + m0^2 eps^2.
double renormalized_free_mass(const LatticeParams& params);

enum class Parity { even, odd };

/// Large-time sum of a1^2 in the homogeneous field for fixed parity of t/eps.
double chirality_limit(Parity parity, const LatticeParams& params);
/// Large-time sum of a1^2 without field, 0 <= m eps <= 1.
double chirality_limit_free(const LatticeParams& params);

/// Stationary phase value on |v| < 1/n; strictly negative there.
double theta_tilde(double v, const LatticeParams& params);

/// Zero-field Airy phase on the unit lattice with unit mass, |v| < 1/sqrt(2).
double theta_free(double v);

/// Uniform Airy approximation of a1(x, t) in the homogeneous field, for
/// x/2eps even, t/2eps odd, |x/t| < 1/n and 0 < m eps <= 1.
double airy_approx_a1(LatticeIndex idx, const LatticeParams& params);

struct PhaseDerivatives {
  double f;
  double f_u;
  double f_uu;
  double f_uuu;
  double u0;  // positive critical point of f(., alpha)
};

/// f(u, alpha) = u (1/n - alpha) - omega_u with its u-derivatives, for
/// |u| <= pi / 2eps and 0 <= alpha <= 1/n.
PhaseDerivatives phase_derivatives(double u, double alpha, const LatticeParams& params);

}  // namespace checkers::asymptotics
