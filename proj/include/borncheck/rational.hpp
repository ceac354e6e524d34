#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "borncheck/errors.hpp"

namespace borncheck {

// Exact rational number. Stored in lowest terms with a positive denominator;
// numerator and denominator are arbitrary-precision integers. Equality is
// value equality.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const Int& num, const Int& den);
  Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

  // Accepts "7", "-3/4", "2.50" (finite decimals are exact rationals).
  // Rejects everything else, including scientific notation and zero
  // denominators.
  static Rational parse(std::string_view text);

  Int numerator() const { return boost::multiprecision::numerator(value_); }
  Int denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // "p/q", or just "p" when the value is integral.
  std::string str() const;

  // Decimal rendering for convenience columns, truncated to at most
  // `max_places` fractional digits with trailing zeros removed.
  std::string decimal(unsigned max_places = 6) const;

  friend Rational operator-(const Rational& a) { return Rational(-a.value_); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_.is_zero()) fail(Errc::DivisionByZero, "divide by zero");
    return Rational(a.value_ / b.value_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep v) : value_(std::move(v)) {}

  Rep value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace borncheck
