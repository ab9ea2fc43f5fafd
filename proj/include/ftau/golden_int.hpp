#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ftau {

using BigInt = boost::multiprecision::cpp_int;

// An element a + b*t of Z[t], where t = (sqrt(5) - 1) / 2 is the positive
// root of x^2 + x = 1. Coordinates are exact and unbounded; {1, t} is a
// basis, so equality is componentwise.
class GoldenInt {
 public:
  GoldenInt() = default;
  GoldenInt(BigInt a) : a_(std::move(a)) {}  // NOLINT: integers embed in Z[t]
  GoldenInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}
  GoldenInt(int a) : a_(a) {}  // NOLINT
  GoldenInt(int a, int b) : a_(a), b_(b) {}

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }

  /// t^n for any integer n, using t^-1 = 1 + t.
  static GoldenInt tau_pow(std::int64_t n);

  static const GoldenInt& zero();
  static const GoldenInt& one();

  /// Sign of the real number a + b*t, decided with integer arithmetic only.
  int sign() const;

  GoldenInt& operator+=(const GoldenInt& o);
  GoldenInt& operator-=(const GoldenInt& o);
  GoldenInt& operator*=(const GoldenInt& o);

  friend GoldenInt operator+(GoldenInt x, const GoldenInt& y) { return x += y; }
  friend GoldenInt operator-(GoldenInt x, const GoldenInt& y) { return x -= y; }
  friend GoldenInt operator*(GoldenInt x, const GoldenInt& y) { return x *= y; }
  friend GoldenInt operator-(const GoldenInt& x) { return GoldenInt(-x.a_, -x.b_); }

  friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
  // Order of the represented reals.
  friend std::strong_ordering operator<=>(const GoldenInt& x, const GoldenInt& y);

  /// Parses `<int>[(+|-)<int>t]`, e.g. "2-3t" or "5".
  static GoldenInt parse(std::string_view text);
  /// Canonical spelling, always with both coordinates: "0+1t".
  std::string format() const;
  /// Decimal value truncated toward -infinity after `digits` fractional
  /// digits. Display only.
  std::string approx(int digits = 30) const;

 private:
  BigInt a_;
  BigInt b_;
};

int sign(const GoldenInt& x);
std::strong_ordering cmp(const GoldenInt& x, const GoldenInt& y);

}  // namespace ftau
