#include "checkers/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "checkers/errors.hpp"

namespace checkers::special {

namespace {

using ld = long double;

constexpr double kSeriesBesselLimit = 8.0;
constexpr double kSeriesAiryLimit = 8.0;

// (z/2)^order sum_j (-1)^j (z/2)^{2j} / (j! (j + order)!)
double bessel_series(double z, int order) {
  const ld h = static_cast<ld>(z) / 2;
  const ld h2 = h * h;
  ld term = order == 0 ? 1.0L : h;
  ld sum = term;
  for (int j = 1; j < 200; ++j) {
    term *= -h2 / (static_cast<ld>(j) * static_cast<ld>(j + order));
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

// Backward recurrence J_{k-1} = (2k/z) J_k - J_{k+1}, normalised by
// J_0 + 2 sum_k J_{2k} = 1. Stable for every z > 0.
std::pair<double, double> bessel_miller(double z) {
  const ld x = static_cast<ld>(z);
  int start = static_cast<int>(z) + 40 + static_cast<int>(std::sqrt(40.0 * z));
  start += start % 2;
  ld next = 0.0L;  // J_{k+1}
  ld cur = 1e-300L;  // J_k
  ld norm = 0.0L;
  for (int k = start; k >= 1; --k) {
    const ld prev = (2.0L * k / x) * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (std::abs(cur) > 1e300L) {
      cur *= 1e-300L;
      next *= 1e-300L;
      norm *= 1e-300L;
    }
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0L * cur;
  }
  norm += cur;
  return {static_cast<double>(cur / norm), static_cast<double>(next / norm)};
}

double airy_maclaurin(double lambda) {
  // Ai = c1 f - c2 g with f, g the two Maclaurin solutions.
  constexpr ld c1 = 0.355028053887817239260063186004183176L;
  constexpr ld c2 = 0.258819403792806798405183560189203963L;
  const ld x = static_cast<ld>(lambda);
  const ld x3 = x * x * x;
  ld f = 1.0L;
  ld g = x;
  ld tf = 1.0L;
  ld tg = x;
  for (int k = 0; k < 400; ++k) {
    tf *= x3 / (static_cast<ld>(3 * k + 2) * (3 * k + 3));
    tg *= x3 / (static_cast<ld>(3 * k + 3) * (3 * k + 4));
    f += tf;
    g += tg;
    if (std::abs(tf) + std::abs(tg) < 1e-24L) break;
  }
  return static_cast<double>(c1 * f - c2 * g);
}

// Asymptotic series in 1/zeta, stopped at the smallest term.
struct AiryTail {
  ld even = 0.0L;  // sum (-1)^k u_{2k} / zeta^{2k}
  ld odd = 0.0L;   // sum (-1)^k u_{2k+1} / zeta^{2k+1}
  ld plain = 0.0L; // sum (-1)^k u_k / zeta^k
};

AiryTail airy_tail(ld zeta) {
  AiryTail tail;
  ld u = 1.0L;
  ld power = 1.0L;
  ld last = std::numeric_limits<long double>::infinity();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      u *= static_cast<ld>(6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0L * k * (2 * k - 1));
      power /= zeta;
    }
    const ld term = u * power;
    if (term > last) break;
    last = term;
    const int half = k / 2;
    const ld sign = half % 2 == 0 ? 1.0L : -1.0L;
    if (k % 2 == 0) {
      tail.even += sign * term;
    } else {
      tail.odd += sign * term;
    }
    tail.plain += (k % 2 == 0 ? 1.0L : -1.0L) * term;
    if (term < 1e-21L) break;
  }
  return tail;
}

}  // namespace

double bessel_j0(double z) {
  const double a = std::abs(z);
  if (a <= kSeriesBesselLimit) return bessel_series(a, 0);
  return bessel_miller(a).first;
}

double bessel_j1(double z) {
  const double a = std::abs(z);
  const double v = a <= kSeriesBesselLimit ? bessel_series(a, 1) : bessel_miller(a).second;
  return z < 0 ? -v : v;
}

double airy_ai(double lambda) {
  if (!std::isfinite(lambda)) throw OutOfRange("Airy argument must be finite");
  if (std::abs(lambda) <= kSeriesAiryLimit) return airy_maclaurin(lambda);
  constexpr ld inv_sqrt_pi = 0.564189583547756286948079451560772586L;
  if (lambda > 0.0) {
    const ld x = static_cast<ld>(lambda);
    const ld zeta = 2.0L / 3.0L * x * std::sqrt(x);
    const AiryTail tail = airy_tail(zeta);
    return static_cast<double>(0.5L * inv_sqrt_pi * std::exp(-zeta) / std::pow(x, 0.25L) * tail.plain);
  }
  const ld x = -static_cast<ld>(lambda);
  const ld zeta = 2.0L / 3.0L * x * std::sqrt(x);
  const AiryTail tail = airy_tail(zeta);
  const ld phase = zeta - std::numbers::pi_v<long double> / 4.0L;
  return static_cast<double>(inv_sqrt_pi / std::pow(x, 0.25L) *
                             (std::cos(phase) * tail.even + std::sin(phase) * tail.odd));
}

}  // namespace checkers::special
