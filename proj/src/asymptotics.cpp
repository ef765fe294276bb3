#include "checkers/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "checkers/numerics.hpp"
#include "checkers/special.hpp"

namespace checkers::asymptotics {

namespace {

using std::numbers::pi;

// arccos guard: rounding slack is absorbed, anything larger is a caller error.
double guarded_acos(double arg) {
  constexpr double kClampGuard = 1e-10;
  if (arg > 1.0 + kClampGuard || arg < -1.0 - kClampGuard) {
    throw OutOfSupport("velocity outside the support of the Airy phase");
  }
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

}  // namespace

ContinuumPoint::ContinuumPoint(double x, double t) : x_(x), t_(t) {
  if (!(std::abs(x) < t)) throw InvalidArgs("continuum point must satisfy |x| < t");
}

ContinuumLimit continuum_field(const ContinuumPoint& pt, double m) {
  if (!(m > 0.0)) throw InvalidArgs("mass must be > 0");
  const double x = pt.x();
  const double t = pt.t();
  const double arg = m * std::sqrt((t * t - x * x) / 2.0);
  const double j0 = special::bessel_j0(arg);
  const double j1 = special::bessel_j1(arg);
  const double ratio = (t + x) / (t - x);
  ContinuumLimit out{};
  out.p_density = m * m / 4.0 * (j0 * j0 + 2.0 * ratio * j1 * j1);
  out.a1_lim = m / 2.0 * j0;
  out.a2_lim = -m / std::sqrt(2.0) * std::sqrt(ratio) * j1;
  return out;
}

double continuum_free(const ContinuumPoint& pt, double m) {
  if (!(m > 0.0)) throw InvalidArgs("mass must be > 0");
  const double x = pt.x();
  const double t = pt.t();
  const double arg = m * std::sqrt(t * t - x * x);
  const double j0 = special::bessel_j0(arg);
  const double j1 = special::bessel_j1(arg);
  return m * m / 4.0 * (j0 * j0 + (t + x) / (t - x) * j1 * j1);
}

double renormalized_free_mass(const LatticeParams& params) {
  const double n = params.norm();
  return std::sqrt(n * n - 1.0) / params.step();
}

double chirality_limit(Parity parity, const LatticeParams& params) {
  if (!(params.mass() > 0.0)) throw InvalidArgs("mass must be > 0");
  const double c = params.coupling();
  const double base = c / std::sqrt(2.0 + c * c);
  return parity == Parity::even ? base : base / params.norm();
}

double chirality_limit_free(const LatticeParams& params) {
  const double c = params.coupling();
  if (c > 1.0) throw InvalidArgs("zero-field chirality limit needs m eps <= 1");
  return c / (2.0 * std::sqrt(params.norm()));
}

double theta_tilde(double v, const LatticeParams& params) {
  const double n = params.norm();
  const double a = std::abs(v);
  if (a > (1.0 + 1e-12) / n) throw OutOfSupport("|v| must not exceed 1/(1 + m^2 eps^2)");
  const double root = std::sqrt(n * n - 1.0);
  const double w = std::sqrt(1.0 - v * v);
  return (a * guarded_acos(a * root / w) - guarded_acos(root / (n * w))) / (2.0 * params.step());
}

double theta_free(double v) {
  const double a = std::abs(v);
  if (a >= 1.0 / std::sqrt(2.0)) throw OutOfSupport("|v| must be below 1/sqrt(2)");
  const double w = std::sqrt(1.0 - v * v);
  const double inner = 1.5 * (-a * guarded_acos(a / w) + guarded_acos(1.0 / (std::sqrt(2.0) * w)));
  return std::cbrt(inner * inner);
}

double airy_approx_a1(LatticeIndex idx, const LatticeParams& params) {
  const double c = params.coupling();
  if (!(c > 0.0) || c > 1.0) throw OutOfSupport("Airy approximation needs 0 < m eps <= 1");
  if (numerics::mod(idx.xi, 4) != 0 || numerics::mod(idx.ti, 4) != 2) {
    throw OutOfSupport("Airy approximation needs x/2eps even and t/2eps odd");
  }
  const double n = params.norm();
  const double v = static_cast<double>(idx.xi) / static_cast<double>(idx.ti);
  if (!(std::abs(v) * n < 1.0)) throw OutOfSupport("|x/t| must be below 1/(1 + m^2 eps^2)");
  const double eps = params.step();
  const double t = static_cast<double>(idx.ti) * eps;
  const double theta = theta_tilde(v, params);
  const int sign = numerics::sign_pow(numerics::floor_div(idx.xi + idx.ti + 4, 4));
  const double amp = std::sqrt(2.0) * std::sqrt(params.mass()) * eps * std::sqrt(n) *
                     std::pow(-12.0 * theta, 1.0 / 6.0) /
                     std::pow((2.0 + c * c) * (1.0 - v * v * n * n), 0.25);
  const double lambda = -std::cbrt(std::pow(-1.5 * theta * t, 2.0));
  return sign * amp / std::cbrt(t) * special::airy_ai(lambda);
}

PhaseDerivatives phase_derivatives(double u, double alpha, const LatticeParams& params) {
  const double eps = params.step();
  const double n = params.norm();
  if (std::abs(u) > pi / (2.0 * eps) * (1.0 + 1e-12)) throw OutOfRange("|u| must be <= pi/2eps");
  if (alpha < 0.0 || alpha > 1.0 / n * (1.0 + 1e-12)) throw OutOfRange("alpha must lie in [0, 1/n]");
  const double s = std::sin(2.0 * u * eps);
  const double co = std::cos(2.0 * u * eps);
  const double ratio = s / n;
  const double big_c = std::sqrt((1.0 - ratio) * (1.0 + ratio));  // cos 2 omega_u eps
  const double omega = std::asin(ratio) / (2.0 * eps);
  const double k = n * n - 1.0;
  PhaseDerivatives d{};
  d.f = u * (1.0 / n - alpha) - omega;
  d.f_u = 1.0 / n - alpha - co / (n * big_c);
  d.f_uu = k / (n * n * n) * 2.0 * eps * s / std::pow(big_c, 3);
  d.f_uuu = k / std::pow(n, 5) * 4.0 * eps * eps * co * (n * n + 2.0 * s * s) / std::pow(big_c, 5);
  const double v = 1.0 / n - alpha;
  d.u0 = std::acos(std::clamp(v * std::sqrt(k / (1.0 - v * v)), -1.0, 1.0)) / (2.0 * eps);
  return d;
}

}  // namespace checkers::asymptotics
