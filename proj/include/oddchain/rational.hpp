#ifndef ODDCHAIN_RATIONAL_HPP
#define ODDCHAIN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"

namespace oddchain {

namespace detail {

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OverflowError("integer overflow in exact arithmetic");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in exact arithmetic");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN)
    throw OverflowError("integer overflow in exact arithmetic");
  return -a;
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace detail

/// Exact rational over 64-bit integers. Always in lowest terms with a
/// positive denominator, so structural equality is numeric equality.
/// Intermediate products are computed in 128 bits; results that do not fit
/// back into 64 bits raise OverflowError.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit from integer

  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational &a, const Rational &b) {
    if (a.den_ == 1 && b.den_ == 1)
      return Rational(detail::checked_add(a.num_, b.num_));
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator-(const Rational &a) {
    Rational r;
    r.num_ = detail::checked_neg(a.num_);
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

  friend Rational operator*(const Rational &a, const Rational &b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0) throw Error("division by zero");
    __int128 n = static_cast<__int128>(a.num_) * b.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return from_wide(n, d);
  }

  friend bool operator==(const Rational &, const Rational &) = default;

  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  /// Midpoint (a+b)/2, computed without intermediate overflow of a+b.
  friend Rational midpoint(const Rational &a, const Rational &b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_ * 2;
    return from_wide(n, d);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow(n);
    r.den_ = detail::narrow(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error("zero denominator");
    *this = from_wide(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace oddchain

template <> struct std::hash<oddchain::Rational> {
  std::size_t operator()(const oddchain::Rational &r) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

#endif // ODDCHAIN_RATIONAL_HPP
