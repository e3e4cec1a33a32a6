#pragma once

#include <cstdint>

namespace permharmonic {

struct OpCounts {
  std::uint64_t mult = 0;
  std::uint64_t add = 0;

  bool operator==(const OpCounts &) const = default;
};

/**
 * A double that tallies its own arithmetic into an OpCounts owned by the
 * caller. Each binary * or / costs one multiplication and each binary + or -
 * one addition, whether the other operand is a CountedScalar or a plain
 * double. Negation, construction and copies are free.
 *
 * When two counted operands carry different tallies the left one wins.
 */
class CountedScalar {
public:
  CountedScalar() = default;
  CountedScalar(double value, OpCounts *counts) : value_(value), counts_(counts) {}

  double value() const { return value_; }
  OpCounts *counts() const { return counts_; }

  CountedScalar operator-() const { return {-value_, counts_}; }

  friend CountedScalar operator+(const CountedScalar &a, const CountedScalar &b) {
    auto *c = a.pick(b);
    tick_add(c);
    return {a.value_ + b.value_, c};
  }
  friend CountedScalar operator-(const CountedScalar &a, const CountedScalar &b) {
    auto *c = a.pick(b);
    tick_add(c);
    return {a.value_ - b.value_, c};
  }
  friend CountedScalar operator*(const CountedScalar &a, const CountedScalar &b) {
    auto *c = a.pick(b);
    tick_mult(c);
    return {a.value_ * b.value_, c};
  }
  friend CountedScalar operator/(const CountedScalar &a, const CountedScalar &b) {
    auto *c = a.pick(b);
    tick_mult(c);
    return {a.value_ / b.value_, c};
  }

  friend CountedScalar operator+(const CountedScalar &a, double b) { return a + CountedScalar(b, nullptr); }
  friend CountedScalar operator+(double a, const CountedScalar &b) { return CountedScalar(a, nullptr) + b; }
  friend CountedScalar operator-(const CountedScalar &a, double b) { return a - CountedScalar(b, nullptr); }
  friend CountedScalar operator-(double a, const CountedScalar &b) { return CountedScalar(a, nullptr) - b; }
  friend CountedScalar operator*(const CountedScalar &a, double b) { return a * CountedScalar(b, nullptr); }
  friend CountedScalar operator*(double a, const CountedScalar &b) { return CountedScalar(a, nullptr) * b; }
  friend CountedScalar operator/(const CountedScalar &a, double b) { return a / CountedScalar(b, nullptr); }

  CountedScalar &operator+=(const CountedScalar &b) { return *this = *this + b; }
  CountedScalar &operator-=(const CountedScalar &b) { return *this = *this - b; }
  CountedScalar &operator*=(const CountedScalar &b) { return *this = *this * b; }

private:
  OpCounts *pick(const CountedScalar &other) const {
    return counts_ ? counts_ : other.counts_;
  }
  static void tick_add(OpCounts *c) {
    if (c)
      ++c->add;
  }
  static void tick_mult(OpCounts *c) {
    if (c)
      ++c->mult;
  }

  double value_ = 0.0;
  OpCounts *counts_ = nullptr;
};

} // namespace permharmonic
