#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <type_traits>

namespace checkers::numerics {

/// Neumaier compensated accumulator.
template <typename T>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(T value) {
    const T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator-=(T value) { return *this += -value; }
  T value() const { return sum_ + comp_; }
  explicit operator T() const { return value(); }

 private:
  T sum_{};
  T comp_{};
};

/// Trapezoid rule on the full period [lo, lo + period) with `nodes` equispaced
/// samples. Spectrally accurate for smooth periodic integrands.
template <typename F>
auto periodic_trapezoid(F&& f, double lo, double period, std::int64_t nodes) {
  using R = decltype(f(lo));
  const double h = period / static_cast<double>(nodes);
  if constexpr (std::is_same_v<R, std::complex<double>>) {
    CompensatedSum<double> re;
    CompensatedSum<double> im;
    for (std::int64_t k = 0; k < nodes; ++k) {
      const R v = f(lo + h * static_cast<double>(k));
      re += v.real();
      im += v.imag();
    }
    return R(re.value() * h, im.value() * h);
  } else {
    CompensatedSum<R> acc;
    for (std::int64_t k = 0; k < nodes; ++k) acc += f(lo + h * static_cast<double>(k));
    return acc.value() * h;
  }
}

/// Floor division for signed integers.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Non-negative remainder.
constexpr std::int64_t mod(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a % b;
  return r < 0 ? r + (b < 0 ? -b : b) : r;
}

constexpr int sign_pow(std::int64_t exponent) { return mod(exponent, 2) == 0 ? 1 : -1; }

}  // namespace checkers::numerics
