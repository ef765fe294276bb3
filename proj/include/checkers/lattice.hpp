#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "checkers/errors.hpp"

namespace checkers {

/// Electron mass and lattice step. Every formula depends on them only through
/// the coupling m*eps and the normalisation n = 1 + (m*eps)^2.
class LatticeParams {
 public:
  LatticeParams(double mass, double step);

  double mass() const { return mass_; }
  double step() const { return step_; }
  double coupling() const { return mass_ * step_; }
  double norm() const { return 1.0 + coupling() * coupling(); }

 private:
  double mass_;
  double step_;
};

/// A lattice point in units of the step: x = xi*eps, t = ti*eps.
struct LatticeIndex {
  std::int64_t xi = 0;
  std::int64_t ti = 1;
};

/// Midpoint of an auxiliary edge in doubled lattice units, so the
/// half-integer midpoint (xi + 1/2, ti + 1/2) becomes the odd pair (2xi + 1, 2ti + 1).
struct EdgeMidpoint {
  std::int64_t x2 = 1;
  std::int64_t t2 = 1;
};

struct Amplitude {
  double a1 = 0.0;  // Re a, the reversed-chirality component
  double a2 = 0.0;  // Im a

  std::complex<double> value() const { return {a1, a2}; }
  double probability() const { return a1 * a1 + a2 * a2; }
};

/// An assignment of +-1 to auxiliary edges, evaluated lazily at edge midpoints.
class GaugeField {
 public:
  enum class Kind { trivial, homogeneous, custom };
  using Evaluator = std::function<int(EdgeMidpoint)>;

  static GaugeField trivial();
  static GaugeField homogeneous();
  /// Pseudo-random +-1 field; a pure hash of (seed, midpoint), so no storage.
  static GaugeField seeded(std::uint64_t seed);
  /// User callback; any return value other than +-1 raises InvalidArgs on use.
  static GaugeField custom(Evaluator evaluator);

  Kind kind() const { return kind_; }
  int operator()(EdgeMidpoint mid) const;

 private:
  GaugeField(Kind kind, Evaluator evaluator) : kind_(kind), evaluator_(std::move(evaluator)) {}

  Kind kind_;
  Evaluator evaluator_;
};

/// u_eps: -1 on the edge with midpoint (x, t) iff (t - x) / (4 eps) is an integer.
/// In lattice units the rule does not depend on the parameters.
GaugeField make_homogeneous_field(const LatticeParams& params);

/// All amplitudes at one time index, stored densely over xi in [-ti + 2, ti].
class WaveSlice {
 public:
  /// The ti = 1 slice: a(eps, eps) = i * u(first edge), zero elsewhere.
  static WaveSlice initial(const GaugeField& field);

  WaveSlice(std::int64_t ti, std::vector<Amplitude> amplitudes);

  std::int64_t time_index() const { return ti_; }
  std::int64_t min_x() const { return -ti_ + 2; }
  std::int64_t max_x() const { return ti_; }
  /// Zero outside the stored window.
  Amplitude at(std::int64_t xi) const;
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }

 private:
  std::int64_t ti_;
  std::vector<Amplitude> amplitudes_;
};

/// One step of the lattice Dirac equation in the field.
WaveSlice evolve_step(const WaveSlice& slice, const LatticeParams& params, const GaugeField& field);

/// Slice at time index ti >= 1, evolved from the ti = 1 seed.
WaveSlice evolve_to(std::int64_t ti, const LatticeParams& params, const GaugeField& field);

/// Largest time index accepted by amplitude_bruteforce.
inline constexpr std::int64_t kBruteforceMaxTime = 24;

/// Direct path sum over all checker paths with s1 = (eps, eps).
Amplitude amplitude_bruteforce(LatticeIndex idx, const LatticeParams& params,
                               const GaugeField& field);

/// Recurrence value at one point; O(ti^2) time, O(ti) memory.
Amplitude amplitude(LatticeIndex idx, const LatticeParams& params, const GaugeField& field);

/// a(eps x, eps t, m, eps, u_eps) == a(x, t, m eps, 1, u_1) componentwise within tol.
bool rescaling_check(std::int64_t xi, std::int64_t ti, const LatticeParams& params,
                     double tol = 1e-12);

double probability(LatticeIndex idx, const LatticeParams& params, const GaugeField& field);

// Observables of a single slice.
double total_probability(const WaveSlice& slice);
/// Sum of P over x <= v t.
double cdf_empirical(const WaveSlice& slice, double v);
/// Sum of (x/t)^r P.
double moment(const WaveSlice& slice, int r);
/// Sum of a1^2.
double chirality_reversal_prob(const WaveSlice& slice);

double cdf_empirical(std::int64_t ti, double v, const LatticeParams& params, const GaugeField& field);
double moment(std::int64_t ti, int r, const LatticeParams& params, const GaugeField& field);
double chirality_reversal_prob(std::int64_t ti, const LatticeParams& params, const GaugeField& field);

}  // namespace checkers
