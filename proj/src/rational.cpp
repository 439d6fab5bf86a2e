#include "thlab/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "thlab/errors.hpp"

namespace thlab {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax)
    throw std::overflow_error("Rational: value does not fit in 64 bits");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<__int128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(
      static_cast<__int128>(a.num_) * b.den_ +
          static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(
      static_cast<__int128>(a.num_) * b.den_ -
          static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 0);

  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::int64_t value = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (!part.empty() && part.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw ParseError("invalid integer '" + std::string(part) + "'", offset);
    return value;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), 0);
    std::int64_t den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (frac.empty() || frac.size() > 18)
      throw ParseError("unsupported decimal '" + std::string(text) + "'", dot);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t w = (whole.empty() || whole == "-" || whole == "+")
                         ? 0
                         : parse_int(whole, 0);
    std::int64_t f = parse_int(frac, dot + 1);
    if (f < 0 || frac.front() == '-' || frac.front() == '+')
      throw ParseError("invalid decimal fraction", dot + 1);
    Rational magnitude = Rational(w < 0 ? -w : w) + Rational(f, scale);
    return negative ? -magnitude : magnitude;
  }

  return Rational(parse_int(text, 0));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value))
    throw std::domain_error("Rational: non-finite double");
  int exp = 0;
  double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5,1)
  // 53-bit integer mantissa: value = m * 2^(exp - 53)
  auto m = static_cast<__int128>(std::ldexp(mant, 53));
  int shift = exp - 53;
  if (shift >= 0) {
    if (shift > 62) throw std::overflow_error("Rational: double too large");
    return from_wide(m << shift, 1);
  }
  int down = -shift;
  if (down <= 62) return from_wide(m, static_cast<__int128>(1) << down);
  // Round to the 2^-62 grid, half to even.
  int extra = down - 62;
  if (extra >= 120) return Rational(0);
  __int128 q = m >> extra;
  __int128 rem = m - (q << extra);
  __int128 half = static_cast<__int128>(1) << (extra - 1);
  if (rem > half || (rem == half && (q & 1))) ++q;
  return from_wide(q, static_cast<__int128>(1) << 62);
}

}  // namespace thlab
