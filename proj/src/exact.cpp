#include "checkers/exact.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <vector>

#include "checkers/numerics.hpp"

namespace checkers::exact {

namespace {

using numerics::floor_div;
using numerics::mod;

// C(a, j), zero when a < 0, j < 0 or j > a.
double binom(std::int64_t a, std::int64_t j) {
  if (a < 0 || j < 0 || j > a) return 0.0;
  j = std::min(j, a - j);
  double r = 1.0;
  for (std::int64_t i = 1; i <= j; ++i) {
    r = r * static_cast<double>(a - j + i) / static_cast<double>(i);
  }
  return std::round(r);
}

mpz_class binom_exact(std::int64_t a, std::int64_t j) {
  if (a < 0 || j < 0 || j > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(j));
  return r;
}

int delta2(std::int64_t b) { return static_cast<int>(mod(b, 2)); }

void check_coords(DiagCoords d, double m) {
  if (d.xi_d < 0 || d.eta_d < 0) throw InvalidArgs("diagonal coordinates must be >= 0");
  if (!(m >= 0.0) || !std::isfinite(m)) throw InvalidArgs("mass must be finite and >= 0");
}

// Pieces shared by both components of the binomial closed form.
struct ClosedTerms {
  std::int64_t half_xi;     // floor(xi/2)
  std::int64_t half_eta;    // floor(eta/2)
  std::int64_t half_eta_m;  // floor((eta-1)/2)
  int d_a1;                 // delta2(xi (eta + 1))
  int d_a2;                 // delta2(xi eta)
  int sign;                 // (-1)^(xi + 1)
};

ClosedTerms closed_terms(DiagCoords d) {
  return {floor_div(d.xi_d, 2),          floor_div(d.eta_d, 2),
          floor_div(d.eta_d - 1, 2),     delta2(d.xi_d * (d.eta_d + 1)),
          delta2(d.xi_d * d.eta_d),      numerics::sign_pow(d.xi_d + 1)};
}

// n^(-(xi+eta)/2)
double inv_norm_power(double n, std::int64_t k) { return std::pow(n, -0.5 * static_cast<double>(k)); }

double to_double_with_norm(const mpq_class& value, const mpq_class& n, std::int64_t k) {
  mpq_class scaled = value;
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), n.get_den_mpz_t(), static_cast<unsigned long>(k / 2));
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), n.get_num_mpz_t(), static_cast<unsigned long>(k / 2));
  scaled *= mpq_class(den, num);
  scaled.canonicalize();
  double r = scaled.get_d();
  if (k % 2 != 0) r /= std::sqrt(n.get_d());
  return r;
}

// 2F1 with whichever of the two upper parameters terminates the series.
double hyp_terminating(std::int64_t a, std::int64_t b, std::int64_t c, double z) {
  if (b > 0) std::swap(a, b);
  return hyp2f1_poly({a, b, c, z});
}

}  // namespace

DiagCoords DiagCoords::from_point(LatticeIndex idx) {
  const std::int64_t s = idx.ti - 1 + idx.xi - 1;
  const std::int64_t diff = idx.ti - 1 - (idx.xi - 1);
  if (idx.ti < 1 || mod(s, 2) != 0 || s < 0 || diff < 0) {
    throw InvalidArgs("point (" + std::to_string(idx.xi) + ", " + std::to_string(idx.ti) +
                      ") is not reachable");
  }
  return {s / 2, diff / 2};
}

double hyp2f1_poly(const HypArgs& args) {
  if (args.b > 0) throw InvalidArgs("2F1 needs a nonpositive integer b to terminate");
  if (args.c == 0) throw InvalidArgs("2F1 needs c != 0");
  if (args.c < 0 && args.c >= args.b) throw InvalidArgs("2F1 with c < 0 needs c < b");
  numerics::CompensatedSum<double> acc;
  double term = 1.0;
  acc += term;
  for (std::int64_t k = 0; k < -args.b; ++k) {
    term *= static_cast<double>(args.a + k) * static_cast<double>(args.b + k) /
            (static_cast<double>(1 + k) * static_cast<double>(args.c + k)) * args.z;
    acc += term;
  }
  return acc.value();
}

double a1_closed(DiagCoords d, double m) {
  check_coords(d, m);
  const ClosedTerms c = closed_terms(d);
  const double n = 1.0 + m * m;
  const double w = 1.0 - n * n;
  numerics::CompensatedSum<double> acc;
  double wj = 1.0;
  for (std::int64_t j = 0; j <= c.half_xi; ++j, wj *= w) {
    acc += binom(c.half_xi, j) * binom(c.half_eta_m, j) * wj;
  }
  return c.sign * m * std::pow(n, c.d_a1) * inv_norm_power(n, d.xi_d + d.eta_d) * acc.value();
}

double a2_closed(DiagCoords d, double m) {
  check_coords(d, m);
  const ClosedTerms c = closed_terms(d);
  if (mod(d.xi_d, 2) == 0 && mod(d.eta_d, 2) == 1) return 0.0;
  const double n = 1.0 + m * m;
  const double w = 1.0 - n * n;
  const double n_a2 = std::pow(n, c.d_a2);
  const double n_a1 = std::pow(n, c.d_a1);
  numerics::CompensatedSum<double> acc;
  double wj = 1.0;
  for (std::int64_t j = 0; j <= c.half_xi; ++j, wj *= w) {
    const double inner = binom(c.half_eta, j) * n_a2 - binom(c.half_eta_m, j) * n_a1;
    acc += inner * binom(c.half_xi, j) * wj;
  }
  return c.sign * inv_norm_power(n, d.xi_d + d.eta_d) * acc.value();
}

Amplitude amplitude_closed(DiagCoords d, double m) { return {a1_closed(d, m), a2_closed(d, m)}; }

double a1_closed_exact(DiagCoords d, double m) {
  check_coords(d, m);
  const ClosedTerms c = closed_terms(d);
  const mpq_class mq(m);
  const mpq_class n = 1 + mq * mq;
  const mpq_class w = 1 - n * n;
  mpq_class sum = 0;
  mpq_class wj = 1;
  for (std::int64_t j = 0; j <= c.half_xi; ++j, wj *= w) {
    sum += mpq_class(binom_exact(c.half_xi, j) * binom_exact(c.half_eta_m, j)) * wj;
  }
  mpq_class value = c.sign * mq * sum;
  if (c.d_a1 != 0) value *= n;
  return to_double_with_norm(value, n, d.xi_d + d.eta_d);
}

double a2_closed_exact(DiagCoords d, double m) {
  check_coords(d, m);
  const ClosedTerms c = closed_terms(d);
  if (mod(d.xi_d, 2) == 0 && mod(d.eta_d, 2) == 1) return 0.0;
  const mpq_class mq(m);
  const mpq_class n = 1 + mq * mq;
  const mpq_class w = 1 - n * n;
  const mpq_class n_a2 = c.d_a2 != 0 ? n : mpq_class(1);
  const mpq_class n_a1 = c.d_a1 != 0 ? n : mpq_class(1);
  mpq_class sum = 0;
  mpq_class wj = 1;
  for (std::int64_t j = 0; j <= c.half_xi; ++j, wj *= w) {
    const mpq_class inner = binom_exact(c.half_eta, j) * n_a2 - binom_exact(c.half_eta_m, j) * n_a1;
    sum += inner * binom_exact(c.half_xi, j) * wj;
  }
  return to_double_with_norm(c.sign * sum, n, d.xi_d + d.eta_d);
}

Amplitude amplitude_closed_exact(DiagCoords d, double m) {
  return {a1_closed_exact(d, m), a2_closed_exact(d, m)};
}

double a1_hyper(DiagCoords d, double m) {
  check_coords(d, m);
  const ClosedTerms c = closed_terms(d);
  // For eta = 0 the terminating parameter flips sign and the rewrite no longer
  // holds; the straight path never reverses chirality.
  if (c.half_eta_m < 0) return 0.0;
  const double n = 1.0 + m * m;
  const double z = 1.0 - n * n;
  const double f = hyp2f1_poly({-c.half_eta_m, -c.half_xi, 1, z});
  return c.sign * m * std::pow(n, c.d_a1) * inv_norm_power(n, d.xi_d + d.eta_d) * f;
}

double a2_hyper(DiagCoords d, double m) {
  check_coords(d, m);
  const std::int64_t xi = d.xi_d;
  const std::int64_t eta = d.eta_d;
  const double n = 1.0 + m * m;
  const double z = 1.0 - n * n;
  const double scale = inv_norm_power(n, xi + eta);
  const bool xi_even = mod(xi, 2) == 0;
  const bool eta_even = mod(eta, 2) == 0;
  // On the eta = 0 row the terminating parameter flips sign and the rewrite
  // fails; the straight path contributes (-1)^(xi+1) n^(-xi/2).
  if (eta == 0) return numerics::sign_pow(xi + 1) * scale;
  if (xi_even && eta_even) {
    if (xi == 0) return 0.0;
    return -0.5 * static_cast<double>(xi) * scale * z *
           hyp_terminating(-eta / 2 + 1, -xi / 2 + 1, 2, z);
  }
  if (!xi_even && eta_even) {
    double first = 0.0;
    if (xi > 1) {
      first = static_cast<double>(xi - 1) * z * hyp_terminating(-eta / 2 + 1, -(xi - 1) / 2 + 1, 2, z);
    }
    const double second = 2.0 * m * m * hyp_terminating(-eta / 2 + 1, -(xi - 1) / 2, 1, z);
    return (first - second) * 0.5 * scale;
  }
  if (xi_even && !eta_even) return 0.0;
  return scale * m * m * hyp_terminating(-(eta - 1) / 2, -(xi - 1) / 2, 1, z);
}

double generating_coeff(DiagCoords d, double m, int component) {
  check_coords(d, m);
  if (component != 1 && component != 2) throw InvalidArgs("component must be 1 or 2");
  const std::int64_t deg = d.xi_d + d.eta_d;
  if (deg > kGeneratingMaxDegree) {
    throw TruncationExceeded("generating series truncated at total degree " +
                             std::to_string(kGeneratingMaxDegree));
  }
  const double n = 1.0 + m * m;
  const auto P = static_cast<std::size_t>(d.xi_d + 1);
  const auto Q = static_cast<std::size_t>(d.eta_d + 1);
  // Geometric series G = sum_l (p^2 + q^2 - n^2 p^2 q^2)^l, via G (1 - X) = 1.
  std::vector<double> g(P * Q, 0.0);
  auto at = [&](std::int64_t a, std::int64_t b) -> double {
    if (a < 0 || b < 0) return 0.0;
    return g[static_cast<std::size_t>(a) * Q + static_cast<std::size_t>(b)];
  };
  for (std::int64_t a = 0; a <= d.xi_d; ++a) {
    for (std::int64_t b = 0; b <= d.eta_d; ++b) {
      double v = (a == 0 && b == 0) ? 1.0 : 0.0;
      v += at(a - 2, b) + at(a, b - 2) - n * n * at(a - 2, b - 2);
      g[static_cast<std::size_t>(a) * Q + static_cast<std::size_t>(b)] = v;
    }
  }
  struct Monomial {
    std::int64_t p;
    std::int64_t q;
    double coeff;
  };
  // Numerators: -m q (1 - p + q - n p q) and (1 - q)(1 - p + q - n p q).
  const std::vector<Monomial> numerator =
      component == 1
          ? std::vector<Monomial>{{0, 1, -m}, {1, 1, m}, {0, 2, -m}, {1, 2, m * n}}
          : std::vector<Monomial>{{0, 0, 1.0}, {1, 0, -1.0}, {1, 1, 1.0 - n}, {0, 2, -1.0}, {1, 2, n}};
  numerics::CompensatedSum<double> acc;
  for (const Monomial& mono : numerator) acc += mono.coeff * at(d.xi_d - mono.p, d.eta_d - mono.q);
  // The a2 series carries the opposite overall sign to the ti = 1 seed a = -i.
  const double sign = component == 1 ? 1.0 : -1.0;
  return sign * acc.value() * inv_norm_power(n, deg);
}

}  // namespace checkers::exact
