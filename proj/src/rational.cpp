#include "di9/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "di9/errors.hpp"

namespace di9 {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.begin(), text.end(), value);
  if (ec != std::errc() || ptr != text.end())
    throw ParseError("malformed rational: " + std::string(whole), 0);
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) throw ParseError("malformed rational (denominator must be positive): " + std::string(text), 0);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  // Cross-multiplication in 128-bit to avoid overflow.
  const __int128 lhs = static_cast<__int128>(num_) * other.den_;
  const __int128 rhs = static_cast<__int128>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
  return *this + (-other);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

TimePoint TimePoint::parse(std::string_view text) {
  if (text == "always") return always();
  return TimePoint(Rational::parse(text));
}

const Rational& TimePoint::moment() const {
  if (always_) throw std::logic_error("ALWAYS has no rational moment");
  return moment_;
}

std::string TimePoint::str() const { return always_ ? "always" : moment_.str(); }

std::strong_ordering TimePoint::operator<=>(const TimePoint& other) const {
  if (always_ && other.always_) return std::strong_ordering::equal;
  if (always_) return std::strong_ordering::less;
  if (other.always_) return std::strong_ordering::greater;
  return moment_ <=> other.moment_;
}

}  // namespace di9
