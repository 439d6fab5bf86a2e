#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace thlab {

/// Exact fraction in lowest terms with a positive denominator.
///
/// Arithmetic is carried out in 128-bit intermediates and reduced; a result
/// that does not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by design of literals
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Accepts "p", "p/q", and plain decimals such as "0.3" or "-1.25"
  /// (converted exactly).  Throws ParseError.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double whose binary expansion fits in 62 bits of
  /// denominator; other values are rounded to the nearest multiple of 2^-62.
  static Rational from_double(double value);

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Smallest integer not below this value.
  std::int64_t ceil() const noexcept;
  std::int64_t floor() const noexcept;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace thlab
