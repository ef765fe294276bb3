#include "checkers/lattice.hpp"

#include <cmath>
#include <string>

#include "checkers/numerics.hpp"

namespace checkers {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// The up-left edge entering (xi, ti + 1) comes from (xi + 1, ti).
EdgeMidpoint up_left_into(std::int64_t xi, std::int64_t ti_next) {
  return {2 * xi + 1, 2 * ti_next - 1};
}

// The up-right edge entering (xi, ti + 1) comes from (xi - 1, ti).
EdgeMidpoint up_right_into(std::int64_t xi, std::int64_t ti_next) {
  return {2 * xi - 1, 2 * ti_next - 1};
}

}  // namespace

LatticeParams::LatticeParams(double mass, double step) : mass_(mass), step_(step) {
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw InvalidArgs("mass must be finite and >= 0");
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgs("step must be finite and > 0");
}

GaugeField GaugeField::trivial() {
  return GaugeField(Kind::trivial, [](EdgeMidpoint) { return 1; });
}

GaugeField GaugeField::homogeneous() {
  // (t - x) / 4 in lattice units is (t2 - x2) / 8 in doubled units.
  return GaugeField(Kind::homogeneous,
                    [](EdgeMidpoint m) { return numerics::mod(m.t2 - m.x2, 8) == 0 ? -1 : 1; });
}

GaugeField GaugeField::seeded(std::uint64_t seed) {
  return GaugeField(Kind::custom, [seed](EdgeMidpoint m) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(m.x2));
    h = splitmix64(h ^ static_cast<std::uint64_t>(m.t2));
    return (h >> 63) != 0U ? -1 : 1;
  });
}

GaugeField GaugeField::custom(Evaluator evaluator) {
  if (!evaluator) throw InvalidArgs("custom gauge field needs an evaluator");
  return GaugeField(Kind::custom, std::move(evaluator));
}

int GaugeField::operator()(EdgeMidpoint mid) const {
  const int v = evaluator_(mid);
  if (v != 1 && v != -1) {
    throw InvalidArgs("gauge field value at (" + std::to_string(mid.x2) + "/2, " +
                      std::to_string(mid.t2) + "/2) is " + std::to_string(v) + ", not +-1");
  }
  return v;
}

GaugeField make_homogeneous_field(const LatticeParams&) { return GaugeField::homogeneous(); }

WaveSlice::WaveSlice(std::int64_t ti, std::vector<Amplitude> amplitudes)
    : ti_(ti), amplitudes_(std::move(amplitudes)) {
  if (ti < 1) throw InvalidArgs("time index must be >= 1");
  if (static_cast<std::int64_t>(amplitudes_.size()) != 2 * ti - 1) {
    throw InvalidArgs("slice must hold 2*ti - 1 amplitudes");
  }
}

WaveSlice WaveSlice::initial(const GaugeField& field) {
  return WaveSlice(1, {Amplitude{0.0, static_cast<double>(field(EdgeMidpoint{1, 1}))}});
}

Amplitude WaveSlice::at(std::int64_t xi) const {
  if (xi < min_x() || xi > max_x()) return {};
  return amplitudes_[static_cast<std::size_t>(xi - min_x())];
}

WaveSlice evolve_step(const WaveSlice& slice, const LatticeParams& params, const GaugeField& field) {
  const std::int64_t next = slice.time_index() + 1;
  const double c = params.coupling();
  const double scale = 1.0 / std::sqrt(params.norm());
  std::vector<Amplitude> out(static_cast<std::size_t>(2 * next - 1));
  const std::int64_t lo = -next + 2;
  for (std::int64_t xi = lo; xi <= next; ++xi) {
    if (numerics::mod(xi + next, 2) != 0) continue;
    const Amplitude right = slice.at(xi + 1);
    const Amplitude left = slice.at(xi - 1);
    Amplitude& a = out[static_cast<std::size_t>(xi - lo)];
    if (right.a1 != 0.0 || right.a2 != 0.0) {
      a.a1 = scale * field(up_left_into(xi, next)) * (right.a1 + c * right.a2);
    }
    if (left.a1 != 0.0 || left.a2 != 0.0) {
      a.a2 = scale * field(up_right_into(xi, next)) * (left.a2 - c * left.a1);
    }
  }
  return WaveSlice(next, std::move(out));
}

WaveSlice evolve_to(std::int64_t ti, const LatticeParams& params, const GaugeField& field) {
  if (ti < 1) throw InvalidArgs("time index must be >= 1");
  WaveSlice slice = WaveSlice::initial(field);
  while (slice.time_index() < ti) slice = evolve_step(slice, params, field);
  return slice;
}

Amplitude amplitude_bruteforce(LatticeIndex idx, const LatticeParams& params,
                               const GaugeField& field) {
  if (idx.ti < 1) throw InvalidArgs("time index must be >= 1");
  if (idx.ti > kBruteforceMaxTime) {
    throw TimeTooLarge("path enumeration limited to ti <= " + std::to_string(kBruteforceMaxTime));
  }
  // After the fixed first move the remaining ti - 1 moves contain `lefts` up-left moves.
  const std::int64_t free_moves = idx.ti - 1;
  const std::int64_t twice_lefts = free_moves - (idx.xi - 1);
  if (twice_lefts < 0 || numerics::mod(twice_lefts, 2) != 0 || twice_lefts / 2 > free_moves) {
    return {};
  }
  const auto lefts = static_cast<unsigned>(twice_lefts / 2);
  const double c = params.coupling();
  const int first = field(EdgeMidpoint{1, 1});

  numerics::CompensatedSum<double> re;
  numerics::CompensatedSum<double> im;
  const std::uint64_t limit = std::uint64_t{1} << free_moves;
  // Gosper's hack walks all masks with exactly `lefts` bits set; bit k set means move k+2 is up-left.
  std::uint64_t mask = lefts == 0 ? 0 : (std::uint64_t{1} << lefts) - 1;
  while (mask < limit) {
    std::int64_t x = 1;
    std::int64_t t = 1;
    bool prev_left = false;
    int turns = 0;
    int sign = first;
    for (std::int64_t k = 0; k < free_moves; ++k) {
      const bool left = ((mask >> k) & 1U) != 0U;
      if (left != prev_left) ++turns;
      prev_left = left;
      const std::int64_t nx = left ? x - 1 : x + 1;
      sign *= field(EdgeMidpoint{x + nx, 2 * t + 1});
      x = nx;
      ++t;
    }
    // i * (-i c)^turns
    const double w = sign * std::pow(c, turns);
    switch (turns % 4) {
      case 0: im += w; break;
      case 1: re += w; break;
      case 2: im -= w; break;
      default: re -= w; break;
    }
    if (mask == 0) break;
    const std::uint64_t lowest = mask & (~mask + 1);
    const std::uint64_t ripple = mask + lowest;
    mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
  }
  const double scale = std::pow(params.norm(), 0.5 * static_cast<double>(1 - idx.ti));
  return {scale * re.value(), scale * im.value()};
}

Amplitude amplitude(LatticeIndex idx, const LatticeParams& params, const GaugeField& field) {
  return evolve_to(idx.ti, params, field).at(idx.xi);
}

bool rescaling_check(std::int64_t xi, std::int64_t ti, const LatticeParams& params, double tol) {
  const Amplitude lhs = amplitude({xi, ti}, params, make_homogeneous_field(params));
  const LatticeParams unit(params.coupling(), 1.0);
  const Amplitude rhs = amplitude({xi, ti}, unit, make_homogeneous_field(unit));
  return std::abs(lhs.a1 - rhs.a1) <= tol && std::abs(lhs.a2 - rhs.a2) <= tol;
}

double probability(LatticeIndex idx, const LatticeParams& params, const GaugeField& field) {
  return amplitude(idx, params, field).probability();
}

double total_probability(const WaveSlice& slice) {
  numerics::CompensatedSum<double> acc;
  for (const Amplitude& a : slice.amplitudes()) acc += a.probability();
  return acc.value();
}

double cdf_empirical(const WaveSlice& slice, double v) {
  const double bound = v * static_cast<double>(slice.time_index());
  const double guard = 1e-9 * std::max(1.0, std::abs(bound));
  numerics::CompensatedSum<double> acc;
  for (std::int64_t xi = slice.min_x(); xi <= slice.max_x(); ++xi) {
    if (static_cast<double>(xi) > bound + guard) break;
    acc += slice.at(xi).probability();
  }
  return acc.value();
}

double moment(const WaveSlice& slice, int r) {
  if (r < 0) throw InvalidArgs("moment order must be >= 0");
  const auto t = static_cast<double>(slice.time_index());
  numerics::CompensatedSum<double> acc;
  for (std::int64_t xi = slice.min_x(); xi <= slice.max_x(); ++xi) {
    const double p = slice.at(xi).probability();
    if (p == 0.0) continue;
    acc += std::pow(static_cast<double>(xi) / t, r) * p;
  }
  return acc.value();
}

double chirality_reversal_prob(const WaveSlice& slice) {
  numerics::CompensatedSum<double> acc;
  for (const Amplitude& a : slice.amplitudes()) acc += a.a1 * a.a1;
  return acc.value();
}

double cdf_empirical(std::int64_t ti, double v, const LatticeParams& params, const GaugeField& field) {
  return cdf_empirical(evolve_to(ti, params, field), v);
}

double moment(std::int64_t ti, int r, const LatticeParams& params, const GaugeField& field) {
  return moment(evolve_to(ti, params, field), r);
}

double chirality_reversal_prob(std::int64_t ti, const LatticeParams& params, const GaugeField& field) {
  return chirality_reversal_prob(evolve_to(ti, params, field));
}

}  // namespace checkers
