#pragma once

#include <compare>
#include <limits>
#include <string>

namespace subnorm {

// A value in [0, +inf] with an explicit infinity state. Generators take the
// value INF at 0, so infinity here is structural rather than an overflow.
class ExtendedValue {
 public:
  constexpr ExtendedValue() noexcept = default;

  // Throws DomainError for NaN or negative input. +inf maps to INF.
  ExtendedValue(double v);  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedValue infinity() noexcept {
    ExtendedValue e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }

  // Throws DomainError when infinite.
  double value() const;

  // +inf for INF.
  constexpr double to_double() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  std::string to_string() const;

  // Saturating: INF absorbs, and finite sums past the float range become INF.
  friend ExtendedValue operator+(ExtendedValue a, ExtendedValue b) noexcept;

  friend constexpr bool operator==(ExtendedValue a, ExtendedValue b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedValue a,
                                                    ExtendedValue b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline constexpr ExtendedValue kInf = ExtendedValue::infinity();

}  // namespace subnorm
