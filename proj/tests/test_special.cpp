#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "checkers/errors.hpp"
#include "checkers/special.hpp"

using namespace checkers;
using namespace checkers::special;

namespace {

// Independent oracle: direct power series in long double.
long double j_series(int order, long double z) {
  long double term = order == 0 ? 1.0L : z / 2.0L;
  long double sum = term;
  const long double q = -(z * z) / 4.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::abs(term) < 1e-30L) break;
  }
  return sum;
}

double bisect(double (*f)(double), double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) < 0) == (f(mid) < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("Bessel values") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(bessel_j1(0.0) == 0.0);
  CHECK(bessel_j0(-3.0) == bessel_j0(3.0));
  CHECK(bessel_j1(-3.0) == -bessel_j1(3.0));
  for (double z = 0.05; z <= 20.0; z += 0.37) {
    const double scale = std::max(1.0, std::abs(z));
    CHECK(std::abs(bessel_j0(z) - static_cast<double>(j_series(0, z))) < 1e-12 * scale);
    CHECK(std::abs(bessel_j1(z) - static_cast<double>(j_series(1, z))) < 1e-12 * scale);
  }
}

TEST_CASE("first zero of J0") {
  const double zero = bisect(bessel_j0, 2.0, 3.0);
  CHECK(zero == doctest::Approx(2.404825557695773).epsilon(1e-13));
  CHECK(std::abs(bessel_j0(zero)) < 1e-14);
}

TEST_CASE("Bessel derivative identities") {
  const double h = 1e-6;
  for (int i = 0; i < 50; ++i) {
    const double z = 0.1 + (20.0 - 0.1) * (i + 0.5) / 50.0;
    const double dj0 = (bessel_j0(z + h) - bessel_j0(z - h)) / (2 * h);
    CHECK(std::abs(dj0 + bessel_j1(z)) < 1e-7);
    const double dzj1 = ((z + h) * bessel_j1(z + h) - (z - h) * bessel_j1(z - h)) / (2 * h);
    CHECK(std::abs(dzj1 - z * bessel_j0(z)) < 1e-7);
  }
}

TEST_CASE("Bessel far range") {
  // J0^2 + J1^2 ~ 2 / (pi z)
  for (double z : {40.0, 80.0, 150.0, 200.0}) {
    const double env = bessel_j0(z) * bessel_j0(z) + bessel_j1(z) * bessel_j1(z);
    CHECK(env * (std::numbers::pi * z / 2) == doctest::Approx(1.0).epsilon(1.0 / (4 * z)));
  }
  CHECK(std::abs(bessel_j0(8.0 + 1e-12) - bessel_j0(8.0 - 1e-12)) < 1e-12);
  CHECK(std::abs(bessel_j1(8.0 + 1e-12) - bessel_j1(8.0 - 1e-12)) < 1e-12);
}

TEST_CASE("Airy values") {
  const double ai0 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
  CHECK(std::abs(airy_ai(0.0) - ai0) < 1e-9);
  const double dai0 = -1.0 / (std::pow(3.0, 1.0 / 3.0) * std::tgamma(1.0 / 3.0));
  const double h = 1e-5;
  CHECK(std::abs((airy_ai(h) - airy_ai(-h)) / (2 * h) - dai0) < 1e-9);
  CHECK(airy_ai(-2.338107410459767) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(bisect(airy_ai, -3.0, -2.0) == doctest::Approx(-2.338107410459767).epsilon(1e-12));
  CHECK_THROWS_AS(airy_ai(std::numeric_limits<double>::infinity()), OutOfRange);
  CHECK_THROWS_AS(airy_ai(NAN), OutOfRange);
}

TEST_CASE("reference values") {
  // 40-digit evaluations, rounded
  struct Ref {
    double x;
    double value;
  };
  const Ref ai[] = {{-157.0, -0.12784409282455165204}, {-40.0, -0.045933923437957249632},
                    {-20.0, -0.17640612707798468959},  {-8.5, -0.33029023763020887902},
                    {-8.0, -0.052705050356386202622},  {-7.9, 0.041701883617386709387},
                    {-3.0, -0.37881429367765807435},   {1.0, 0.13529241631288141552},
                    {3.0, 0.0065911393574607191443},   {8.0, 4.6922076160992316256e-8},
                    {9.0, 2.4711684308724898433e-9},   {15.0, 2.164962520737992299e-18}};
  for (const Ref& r : ai) {
    CAPTURE(r.x);
    CHECK(std::abs(airy_ai(r.x) - r.value) < 1e-12);
  }
  const Ref j0[] = {{0.5, 0.93846980724081290423}, {5.0, -0.17759677131433830435}, {8.0, 0.17165080713755390609},
                    {12.0, 0.047689310796833536624}, {30.0, -0.086367983581040211336},
                    {100.0, 0.019985850304223122424}, {200.0, -0.015437439930565091592}};
  const Ref j1[] = {{0.5, 0.24226845767487388638}, {5.0, -0.32757913759146522204}, {8.0, 0.23463634685391462438},
                    {12.0, -0.22344710449062761237}, {30.0, -0.11875106261662293652},
                    {100.0, -0.077145352014112158033}, {200.0, -0.054304538182378222711}};
  for (const Ref& r : j0) CHECK(std::abs(bessel_j0(r.x) - r.value) < 1e-14);
  for (const Ref& r : j1) CHECK(std::abs(bessel_j1(r.x) - r.value) < 1e-14);
}

TEST_CASE("Airy decays for positive argument") {
  double prev = airy_ai(2.0);
  for (double x = 2.1; x <= 10.0; x += 0.1) {
    const double cur = airy_ai(x);
    CHECK(cur > 0.0);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("Airy differential equation") {
  const double h = 2e-4;
  for (int i = 0; i <= 100; ++i) {
    const double x = -20.0 + 25.0 * i / 100.0;
    const double second = (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / (h * h);
    CAPTURE(x);
    CHECK(std::abs(second - x * airy_ai(x)) < 1e-5);
  }
  // Across the series/asymptotic switch and far out.
  for (double x : {-8.0, 8.0, -40.0, -157.0}) {
    CAPTURE(x);
    CHECK(std::abs(airy_ai(x + 1e-12) - airy_ai(x - 1e-12)) < 1e-11);
    const double hh = 1e-3 / std::sqrt(std::abs(x));
    const double second = (airy_ai(x + hh) - 2 * airy_ai(x) + airy_ai(x - hh)) / (hh * hh);
    CHECK(std::abs(second - x * airy_ai(x)) < 1e-4 * std::abs(x));
  }
}

}  // TEST_SUITE
