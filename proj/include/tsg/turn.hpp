#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "tsg/error.hpp"

namespace tsg {

/// An angle stored as an exact fraction of a full revolution, reduced mod 1.
/// Invariant: 0 <= num < den, gcd(num, den) == 1, den >= 1.
class turn {
 public:
  constexpr turn() : num_(0), den_(1) {}

  static turn of(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(errc::invalid_params, "turn with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    num %= den;
    if (num < 0) num += den;
    std::int64_t g = std::gcd(num, den);
    turn t;
    t.num_ = num / g;
    t.den_ = den / g;
    return t;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_half() const { return num_ * 2 == den_; }

  turn operator+(turn o) const { return of(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  turn operator-(turn o) const { return of(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  turn operator-() const { return of(-num_, den_); }

  /// Half the angle, taken in [0, 1/2).
  turn half() const { return of(num_, 2 * den_); }
  /// Twice the angle, mod 1.
  turn doubled() const { return of(2 * num_, den_); }

  turn times(std::int64_t k) const { return of(num_ * k, den_); }

  /// Least k >= 1 with k*this == 0; the order of the rotation by this angle.
  std::int64_t order() const { return den_; }

  friend bool operator==(turn a, turn b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(turn a, turn b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  std::int64_t num_, den_;
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace tsg
