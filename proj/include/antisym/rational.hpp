#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace antisym {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer) : value_(integer) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Wraps an mpq that is already canonical. Skips the gcd.
  static Rational from_canonical(mpq_class value);

  /// Parses "p", "-p", "p/q", "-p/q" (decimal digits, q != 0).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  const mpq_class& mpq() const { return value_; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  /// Display-only decimal approximation.
  double approx() const { return value_.get_d(); }

  Rational operator-() const { return from_canonical(-value_); }
  Rational abs() const { return from_canonical(::abs(value_)); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

/// 2^-k and 3^-k as exact rationals.
Rational pow2_inverse(std::uint64_t k);
Rational pow3_inverse(std::uint64_t k);

}  // namespace antisym

template <>
struct std::hash<antisym::Rational> {
  std::size_t operator()(const antisym::Rational& r) const noexcept { return r.hash(); }
};
