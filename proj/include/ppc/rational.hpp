#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ppc {

using int128 = __int128;
using uint128 = unsigned __int128;

namespace detail {

constexpr uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

// Exact rational p/q with q > 0 and gcd(|p|, q) = 1. Arithmetic runs through
// 128-bit intermediates; a reduced result that does not fit back into 64 bits
// throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

  static Rational make(int128 n, int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    uint128 un = n < 0 ? uint128(-n) : uint128(n);
    if (un != 0) {
      uint128 g = detail::gcd128(un, uint128(d));
      if (g > 1) {
        n /= int128(g);
        d /= int128(g);
      }
    } else {
      d = 1;
    }
    constexpr int128 kMax = INT64_MAX;
    constexpr int128 kMin = INT64_MIN;
    if (d > kMax || n > kMax || n < kMin)
      throw std::overflow_error("Rational: reduced value does not fit in 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  // Exact conversion: every finite double is p/2^k. Throws when the reduced
  // denominator would exceed 2^62 (values far below 2^-62).
  static Rational from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("Rational::from_double: non-finite value");
    if (v == 0.0) return Rational();
    int exp = 0;
    double fr = std::frexp(v, &exp);
    auto mant = static_cast<std::int64_t>(std::ldexp(fr, 53));  // exact, |mant| < 2^53
    int e2 = exp - 53;
    if (e2 >= 0) {
      if (e2 > 10) throw std::overflow_error("Rational::from_double: value too large");
      return make(int128(mant) << e2, 1);
    }
    int k = -e2;
    int tz = std::countr_zero(static_cast<std::uint64_t>(std::llabs(mant)));
    int shift = tz < k ? tz : k;
    mant >>= shift;
    k -= shift;
    if (k > 62) throw std::overflow_error("Rational::from_double: denominator exceeds 2^62");
    return make(mant, int128(1) << k);
  }

  // Accepts "p/q", an integer, or a plain decimal such as "0.25".
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Representative in [0,1).
  Rational mod1() const {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    Rational out;
    out.num_ = r;
    out.den_ = den_;  // gcd(num mod den, den) = gcd(num, den) = 1
    return out;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(int128(a.num_) * b.den_ + int128(b.num_) * a.den_, int128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(int128(a.num_) * b.den_ - int128(b.num_) * a.den_, int128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return make(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int128 l = int128(a.num_) * b.den_;
    int128 r = int128(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

// lcm with an overflow check; throws std::overflow_error.
inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("lcm_checked: arguments must be positive");
  uint128 g = detail::gcd128(uint128(a), uint128(b));
  uint128 l = uint128(a) / g * uint128(b);
  if (l > uint128(INT64_MAX)) throw std::overflow_error("lcm_checked: overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace ppc
