#ifndef DI9_RATIONAL_HPP
#define DI9_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace di9 {

/// Exact rational number with normalized representation: den > 0,
/// gcd(|num|, den) == 1. Equality is structural.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Accepts "n" or "n/d" with optional leading '-' on n; d must be positive.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator-() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A moment of time: either an exact rational or the distinguished ALWAYS,
/// which sits below every rational and marks timelines decided from eternity.
class TimePoint {
 public:
  TimePoint(Rational moment) : always_(false), moment_(moment) {}  // NOLINT: implicit
  static TimePoint always() { return TimePoint(); }

  // Accepts rational syntax or the word "always".
  static TimePoint parse(std::string_view text);

  bool is_always() const { return always_; }
  const Rational& moment() const;  // throws std::logic_error on ALWAYS

  std::string str() const;

  friend bool operator==(const TimePoint&, const TimePoint&) = default;
  std::strong_ordering operator<=>(const TimePoint& other) const;

 private:
  TimePoint() : always_(true) {}
  bool always_;
  Rational moment_;
};

}  // namespace di9

#endif
