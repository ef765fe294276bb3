#include "checkers/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "checkers/numerics.hpp"

namespace checkers::spectral {

namespace {

using std::numbers::pi;
using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

void require_mass(const LatticeParams& params) {
  if (params.mass() == 0.0) {
    throw MassZero("Fourier representation needs m > 0 (cos 2 omega_p eps vanishes at m = 0)");
  }
}

// Everything in lattice units: theta = p eps, omega_p eps = half_angle.
struct Wave {
  double theta;
  double half_angle;  // omega_p eps
  double cos2w;       // cos 2 omega_p eps
};

Wave wave(double p, const LatticeParams& params) {
  const double theta = p * params.step();
  const double s = std::sin(2.0 * theta) / params.norm();
  return {theta, 0.5 * std::asin(s), std::sqrt((1.0 - s) * (1.0 + s))};
}

std::int64_t time_case(std::int64_t ti) { return numerics::mod(ti, 4); }

}  // namespace

Dispersion::Dispersion(const LatticeParams& params) : params_(params) {}

double Dispersion::omega(double p) const { return wave(p, params_).half_angle / params_.step(); }

double Dispersion::cos_two_omega(double p) const { return wave(p, params_).cos2w; }

double Dispersion::omega_prime(double p) const {
  const Wave w = wave(p, params_);
  return std::cos(2.0 * w.theta) / (params_.norm() * w.cos2w);
}

cplx integrand_a1(double p, std::int64_t ti, const LatticeParams& params) {
  require_mass(params);
  if (ti < 1) throw InvalidArgs("time index must be >= 1");
  const Wave w = wave(p, params);
  const double c = params.coupling();
  const double n = params.norm();
  const double t = static_cast<double>(ti);
  const double W = w.half_angle;
  switch (time_case(ti)) {
    case 1:
      return 2.0 * c * std::sin(W * (t - 1.0)) * std::sin(w.theta) / (n * w.cos2w);
    case 2:
      return c * (I * std::sin(W * (t - 2.0)) - std::cos(W * t)) / (std::sqrt(n) * w.cos2w);
    case 3:
      return 2.0 * I * c * std::cos(W * (t - 1.0)) * std::sin(w.theta) / (n * w.cos2w);
    default:
      return c * (std::cos(W * (t - 2.0)) - I * std::sin(W * t)) / (std::sqrt(n) * w.cos2w);
  }
}

cplx integrand_a2(double p, std::int64_t ti, const LatticeParams& params) {
  require_mass(params);
  if (ti < 1) throw InvalidArgs("time index must be >= 1");
  const Wave w = wave(p, params);
  const double c = params.coupling();
  const double n = params.norm();
  const double t = static_cast<double>(ti);
  const double W = w.half_angle;
  const double ratio = (c * c + std::cos(2.0 * w.theta)) / (n * w.cos2w);
  const cplx shift1 = std::exp(-I * w.theta);
  const cplx shift2 = std::exp(-2.0 * I * w.theta);
  const cplx unshift2 = std::exp(2.0 * I * w.theta);
  switch (time_case(ti)) {
    case 1:
      return shift1 * (I * std::sin(W * (t - 1.0)) * ratio - std::cos(W * (t - 1.0)));
    case 2:
      return shift2 * (I * unshift2 * std::sin(W * (t - 2.0)) - std::cos(W * t)) /
             (std::sqrt(n) * w.cos2w);
    case 3:
      return shift1 * (std::cos(W * (t - 1.0)) * ratio - I * std::sin(W * (t - 1.0)));
    default:
      return shift2 * (unshift2 * std::cos(W * (t - 2.0)) - I * std::sin(W * t)) /
             (std::sqrt(n) * w.cos2w);
  }
}

std::int64_t min_quad_points(std::int64_t ti) { return 4 * ti + 64; }

Amplitude amplitude_integral(LatticeIndex idx, const LatticeParams& params,
                             std::int64_t quad_points) {
  require_mass(params);
  if (idx.ti < 1) throw InvalidArgs("time index must be >= 1");
  if (quad_points < min_quad_points(idx.ti)) {
    throw QuadratureUnderresolved("need at least 4*ti + 64 = " +
                                  std::to_string(min_quad_points(idx.ti)) + " nodes");
  }
  const std::int64_t xi = idx.xi;
  const std::int64_t ti = idx.ti;
  // Opposite parities integrate to zero; the (-1)^(odd/2) prefactor never matters.
  if (numerics::mod(xi + ti, 2) != 0) return {};

  const std::int64_t fl = numerics::floor_div(xi + ti, 4);
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  switch (time_case(ti)) {
    case 1: e1 = (xi - 1) / 2; e2 = (xi - 1) / 2; break;
    case 2: e1 = xi / 2; e2 = (xi - 2) / 2; break;
    case 3: e1 = (xi - 1) / 2; e2 = (xi + 1) / 2; break;
    default: e1 = (xi + 2) / 2; e2 = xi / 2; break;
  }
  const int s1 = numerics::sign_pow(e1 + fl);
  const int s2 = numerics::sign_pow(e2 + fl);

  const double eps = params.step();
  const double x = static_cast<double>(xi);
  // a_k = s_k (1/2pi) int_{-pi}^{pi} e^{i theta xi} a^_k(theta / eps) d theta
  auto f1 = [&](double theta) { return std::exp(I * (theta * x)) * integrand_a1(theta / eps, ti, params); };
  auto f2 = [&](double theta) { return std::exp(I * (theta * x)) * integrand_a2(theta / eps, ti, params); };
  const cplx i1 = numerics::periodic_trapezoid(f1, -pi, 2.0 * pi, quad_points) / (2.0 * pi);
  const cplx i2 = numerics::periodic_trapezoid(f2, -pi, 2.0 * pi, quad_points) / (2.0 * pi);
  return {s1 * i1.real(), s2 * i2.real()};
}

Amplitude amplitude_integral(LatticeIndex idx, const LatticeParams& params) {
  return amplitude_integral(idx, params, 2 * min_quad_points(idx.ti));
}

double parseval_norm(int component, std::int64_t ti, const LatticeParams& params,
                     std::int64_t quad_points) {
  if (component != 1 && component != 2) throw InvalidArgs("component must be 1 or 2");
  const double eps = params.step();
  auto f = [&](double theta) {
    const cplx v = component == 1 ? integrand_a1(theta / eps, ti, params)
                                  : integrand_a2(theta / eps, ti, params);
    return std::norm(v);
  };
  return numerics::periodic_trapezoid(f, -pi, 2.0 * pi, quad_points) / (2.0 * pi);
}

LimitDistribution::LimitDistribution(const LatticeParams& params)
    : params_(params), n_(params.norm()), v_max_(1.0 / params.norm()) {
  require_mass(params);
}

double LimitDistribution::cdf(double v) const {
  if (v < -v_max_) return 0.0;
  if (v > v_max_) return 1.0;
  const double arg = (1.0 - n_ * n_ * v) / (n_ * (1.0 - v));
  return std::acos(std::clamp(arg, -1.0, 1.0)) / pi;
}

double LimitDistribution::density(double v) const {
  if (std::abs(v) > v_max_) return 0.0;
  const double inner = 1.0 - n_ * n_ * v * v;
  if (inner <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(n_ * n_ - 1.0) / (pi * (1.0 - v) * std::sqrt(inner));
}

double LimitDistribution::moment(int r) const {
  if (r < 0) throw InvalidArgs("moment order must be >= 0");
  // After v = v_max sin(theta) the integrand is smooth and symmetric about
  // theta = pi/2, so the half-period integral is half the periodic one.
  const double k = std::sqrt(n_ * n_ - 1.0) / (pi * n_);
  auto g = [&](double theta) {
    const double v = v_max_ * std::sin(theta);
    return k * std::pow(v, r) / (1.0 - v);
  };
  double prev = numerics::periodic_trapezoid(g, -pi, 2.0 * pi, 64);
  for (std::int64_t nodes = 128; nodes <= (std::int64_t{1} << 24); nodes *= 2) {
    const double cur = numerics::periodic_trapezoid(g, -pi, 2.0 * pi, nodes);
    if (std::abs(cur - prev) <= 1e-15 * std::max(1.0, std::abs(cur))) return 0.5 * cur;
    prev = cur;
  }
  throw QuadratureUnderresolved("moment quadrature did not converge");
}

double limit_cdf(double v, const LatticeParams& params) { return LimitDistribution(params).cdf(v); }

double limit_density(double v, const LatticeParams& params) {
  return LimitDistribution(params).density(v);
}

double moment_limit(int r, const LatticeParams& params) { return LimitDistribution(params).moment(r); }

double limit_cdf_free(double v, const LatticeParams& params) {
  const double n = params.norm();
  const double bound = 1.0 / std::sqrt(n);
  if (v < -bound) return 0.0;
  if (v > bound) return 1.0;
  const double arg = (1.0 - n * v) / (std::sqrt(n) * (1.0 - v));
  return std::acos(std::clamp(arg, -1.0, 1.0)) / pi;
}

}  // namespace checkers::spectral
