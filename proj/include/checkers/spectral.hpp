#pragma once

#include <complex>
#include <cstdint>

#include "checkers/lattice.hpp"

// Momentum-space picture for the homogeneous field: plane waves e^{ipx} with
// frequency omega_p, and the large-time limit distribution.
namespace checkers::spectral {

class Dispersion {
 public:
  explicit Dispersion(const LatticeParams& params);

  /// omega_p = (1/2eps) arcsin(sin 2p eps / n), principal branch.
  double omega(double p) const;
  /// cos(2 omega_p eps) = sqrt(1 - sin^2(2p eps) / n^2).
  double cos_two_omega(double p) const;
  /// omega'_p = cos 2p eps / (n cos 2 omega_p eps).
  double omega_prime(double p) const;

  const LatticeParams& params() const { return params_; }

 private:
  LatticeParams params_;
};

/// Normalised integrands a^_1(p, t), a^_2(p, t); the case split is on ti mod 4.
/// Throws MassZero for m = 0.
std::complex<double> integrand_a1(double p, std::int64_t ti, const LatticeParams& params);
std::complex<double> integrand_a2(double p, std::int64_t ti, const LatticeParams& params);

std::int64_t min_quad_points(std::int64_t ti);

/// Fourier-integral amplitude, trapezoid rule with `quad_points` nodes on [-pi/eps, pi/eps).
Amplitude amplitude_integral(LatticeIndex idx, const LatticeParams& params, std::int64_t quad_points);
Amplitude amplitude_integral(LatticeIndex idx, const LatticeParams& params);

/// (eps / 2pi) * integral of |a^_k|^2 over the period; equals sum_x a_k^2 by Parseval.
double parseval_norm(int component, std::int64_t ti, const LatticeParams& params,
                     std::int64_t quad_points);

/// Large-time position distribution in the homogeneous field.
class LimitDistribution {
 public:
  explicit LimitDistribution(const LatticeParams& params);

  double support() const { return v_max_; }
  double cdf(double v) const;
  double density(double v) const;
  /// Integral of v^r F'(v), computed after v = v_max sin(theta).
  double moment(int r) const;

 private:
  LatticeParams params_;
  double n_;
  double v_max_;
};

double limit_cdf(double v, const LatticeParams& params);
double limit_density(double v, const LatticeParams& params);
double moment_limit(int r, const LatticeParams& params);

/// Zero-field counterpart, supported on |v| <= 1/sqrt(n).
double limit_cdf_free(double v, const LatticeParams& params);

}  // namespace checkers::spectral
