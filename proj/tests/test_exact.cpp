#include <doctest.h>

#include <cmath>

#include "checkers/exact.hpp"
#include "checkers/lattice.hpp"
#include "test_support.hpp"

using namespace checkers;
using namespace checkers::exact;

TEST_SUITE("exact") {

TEST_CASE("terminating 2F1") {
  CHECK(hyp2f1_poly({5, 0, 1, 0.7}) == 1.0);
  for (double z : {-2.0, -0.3, 0.0, 0.9}) CHECK(hyp2f1_poly({-1, -1, 1, z}) == doctest::Approx(1.0 + z));
  CHECK(hyp2f1_poly({-2, -2, 1, -3.0}) == doctest::Approx(-2.0));
  // 2F1(a, -2; c; z) = 1 - 2az/c + a(a+1)z^2/(c(c+1))
  CHECK(hyp2f1_poly({3, -2, 2, 0.5}) == doctest::Approx(1.0 - 2.0 * 3 * 0.5 / 2 + 3.0 * 4 * 0.25 / 6));
  CHECK(hyp2f1_poly({-4, -1, -3, 2.0}) == doctest::Approx(1.0 - 4.0 * 2.0 / 3.0));
  CHECK_THROWS_AS(hyp2f1_poly({1, 1, 1, 0.5}), InvalidArgs);
  CHECK_THROWS_AS(hyp2f1_poly({1, -1, 0, 0.5}), InvalidArgs);
  CHECK_THROWS_AS(hyp2f1_poly({1, -3, -2, 0.5}), InvalidArgs);
}

TEST_CASE("diagonal coordinates") {
  CHECK(DiagCoords{0, 0}.point().xi == 1);
  CHECK(DiagCoords{0, 0}.point().ti == 1);
  for (std::int64_t ti = 1; ti <= 30; ++ti) {
    for (std::int64_t xi = -ti + 2; xi <= ti; xi += 2) {
      const DiagCoords d = DiagCoords::from_point({xi, ti});
      CHECK(d.point().xi == xi);
      CHECK(d.point().ti == ti);
    }
  }
  CHECK_THROWS_AS(DiagCoords::from_point({-1, 1}), InvalidArgs);
  CHECK_THROWS_AS(DiagCoords::from_point({0, 1}), InvalidArgs);
  CHECK_THROWS_AS(DiagCoords::from_point({4, 2}), InvalidArgs);
}

TEST_CASE("closed form small cases") {
  for (double m : {0.0, 0.4, 1.0, 3.0}) {
    CHECK(a1_closed({0, 0}, m) == 0.0);
    CHECK(a2_closed({0, 0}, m) == -1.0);
    CHECK(a1_closed_exact({0, 0}, m) == 0.0);
    CHECK(a2_closed_exact({0, 0}, m) == -1.0);
  }
  CHECK(a2_closed({1, 1}, 1.0) == doctest::Approx(0.5));
  CHECK(a1_closed({1, 1}, 1.0) == doctest::Approx(0.5));
  CHECK(a2_closed({1, 0}, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(a1_closed({0, 1}, 1.0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(a1_closed({-1, 0}, 1.0), InvalidArgs);
  CHECK_THROWS_AS(a2_closed({0, 0}, -1.0), InvalidArgs);
}

TEST_CASE("a2 vanishes exactly for xi even and eta odd") {
  for (double m : {0.25, 1.0, 2.0}) {
    for (std::int64_t xi = 0; xi <= 20; xi += 2) {
      for (std::int64_t eta = 1; eta <= 21; eta += 2) {
        CHECK(a2_closed({xi, eta}, m) == 0.0);
        CHECK(a2_closed_exact({xi, eta}, m) == 0.0);
        CHECK(a2_hyper({xi, eta}, m) == 0.0);
      }
    }
  }
}

TEST_CASE("hypergeometric rewrites") {
  CHECK(a2_hyper({1, 1}, 1.0) == doctest::Approx(0.5));
  CHECK(a1_hyper({3, 2}, 0.5) == doctest::Approx(a1_closed({3, 2}, 0.5)));
}

TEST_CASE("generating function coefficients") {
  CHECK(generating_coeff({0, 0}, 0.7, 2) == doctest::Approx(-1.0));
  CHECK(generating_coeff({0, 0}, 0.7, 1) == 0.0);
  CHECK(generating_coeff({0, 1}, 0.7, 1) == doctest::Approx(a1_closed({0, 1}, 0.7)));
  CHECK_THROWS_AS(generating_coeff({30, 11}, 1.0, 1), TruncationExceeded);
  CHECK_THROWS_AS(generating_coeff({1, 1}, 1.0, 3), InvalidArgs);
}

TEST_CASE("closed, hypergeometric and generating forms agree") {
  for (double m : {0.25, 0.5, 1.0, 2.0}) {
    for (std::int64_t xi = 0; xi <= 12; ++xi) {
      for (std::int64_t eta = 0; xi + eta <= 12; ++eta) {
        CAPTURE(m);
        CAPTURE(xi);
        CAPTURE(eta);
        const DiagCoords d{xi, eta};
        const double c1 = a1_closed(d, m);
        const double c2 = a2_closed(d, m);
        CHECK(std::abs(a1_hyper(d, m) - c1) < 1e-9);
        CHECK(std::abs(a2_hyper(d, m) - c2) < 1e-9);
        CHECK(std::abs(generating_coeff(d, m, 1) - c1) < 1e-9);
        CHECK(std::abs(generating_coeff(d, m, 2) - c2) < 1e-9);
        CHECK(std::abs(a1_closed_exact(d, m) - c1) < 1e-12);
        CHECK(std::abs(a2_closed_exact(d, m) - c2) < 1e-12);
      }
    }
  }
}

TEST_CASE("closed form matches the lattice recurrence up to ti = 200") {
  const GaugeField u = GaugeField::homogeneous();
  for (double m : {0.5, 1.0}) {
    const LatticeParams p(m, 1.0);
    WaveSlice s = WaveSlice::initial(u);
    for (std::int64_t ti = 1; ti <= 200; ++ti) {
      double scale = 0.0;
      for (const Amplitude& a : s.amplitudes()) scale = std::max({scale, std::abs(a.a1), std::abs(a.a2)});
      double worst = 0.0;
      for (std::int64_t xi = -ti + 2; xi <= ti; xi += 2) {
        const Amplitude e = amplitude_closed_exact(DiagCoords::from_point({xi, ti}), m);
        worst = std::max(worst, test_support::max_diff(e, s.at(xi)));
      }
      CAPTURE(m);
      CAPTURE(ti);
      CHECK(worst <= 1e-9 * scale);
      s = evolve_step(s, p, u);
    }
  }
}

TEST_CASE("double-precision closed form is accurate for moderate times") {
  const LatticeParams p(1.0, 1.0);
  const WaveSlice s = evolve_to(30, p, GaugeField::homogeneous());
  for (std::int64_t xi = -28; xi <= 30; xi += 2) {
    const DiagCoords d = DiagCoords::from_point({xi, 30});
    CHECK(test_support::max_diff(amplitude_closed(d, 1.0), s.at(xi)) < 1e-9);
  }
}

}  // TEST_SUITE
