#include "ftau/golden_int.hpp"

#include <array>
#include <cctype>

#include "ftau/errors.hpp"

namespace ftau {

namespace {

constexpr std::int64_t kCachedPowers = 128;

GoldenInt pow_by_squaring(GoldenInt base, std::uint64_t e) {
  GoldenInt result = GoldenInt::one();
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

// t^n for n in [-kCachedPowers, kCachedPowers].
const std::array<GoldenInt, 2 * kCachedPowers + 1>& power_table() {
  static const auto table = [] {
    std::array<GoldenInt, 2 * kCachedPowers + 1> t;
    t[kCachedPowers] = GoldenInt(1, 0);
    for (std::int64_t n = 1; n <= kCachedPowers; ++n) {
      t[kCachedPowers + n] = t[kCachedPowers + n - 1] * GoldenInt(0, 1);
      t[kCachedPowers - n] = t[kCachedPowers - n + 1] * GoldenInt(1, 1);
    }
    return t;
  }();
  return table;
}

int sign_of(const BigInt& v) { return v.sign(); }

}  // namespace

const GoldenInt& GoldenInt::zero() {
  static const GoldenInt z(0, 0);
  return z;
}

const GoldenInt& GoldenInt::one() {
  static const GoldenInt o(1, 0);
  return o;
}

GoldenInt GoldenInt::tau_pow(std::int64_t n) {
  if (n >= -kCachedPowers && n <= kCachedPowers) {
    return power_table()[static_cast<std::size_t>(n + kCachedPowers)];
  }
  if (n > 0) return pow_by_squaring(GoldenInt(0, 1), static_cast<std::uint64_t>(n));
  return pow_by_squaring(GoldenInt(1, 1), static_cast<std::uint64_t>(-(n + 1)) + 1);
}

GoldenInt& GoldenInt::operator+=(const GoldenInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenInt& GoldenInt::operator-=(const GoldenInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + bt)(c + dt) = ac + (ad + bc)t + bd t^2, and t^2 = 1 - t.
GoldenInt& GoldenInt::operator*=(const GoldenInt& o) {
  BigInt bd = b_ * o.b_;
  BigInt na = a_ * o.a_ + bd;
  BigInt nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

// 2(a + bt) = (2a - b) + b*sqrt(5). When the two summands disagree in sign,
// the larger of (2a - b)^2 and 5b^2 decides.
int GoldenInt::sign() const {
  if (b_.is_zero()) return sign_of(a_);
  const BigInt rational = 2 * a_ - b_;
  const int sr = sign_of(rational);
  const int si = sign_of(b_);
  if (sr >= 0 && si >= 0) return 1;
  if (sr <= 0 && si <= 0) return -1;
  const BigInt lhs = rational * rational;
  const BigInt rhs = 5 * b_ * b_;
  // lhs == rhs is impossible for b != 0 since sqrt(5) is irrational.
  return lhs > rhs ? sr : si;
}

int sign(const GoldenInt& x) { return x.sign(); }

std::strong_ordering operator<=>(const GoldenInt& x, const GoldenInt& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering cmp(const GoldenInt& x, const GoldenInt& y) { return x <=> y; }

GoldenInt GoldenInt::parse(std::string_view text) {
  std::size_t pos = 0;
  auto read_digits = [&](BigInt& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected digits in golden integer", pos);
    out = BigInt(std::string(text.substr(start, pos - start)));
  };

  BigInt a;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  read_digits(a);
  if (negative) a = -a;
  if (pos == text.size()) return GoldenInt(std::move(a), 0);

  if (text[pos] != '+' && text[pos] != '-') {
    throw ParseError("expected '+' or '-' before the t coefficient", pos);
  }
  const bool b_negative = text[pos] == '-';
  ++pos;
  BigInt b;
  read_digits(b);
  if (b_negative) b = -b;
  if (pos == text.size() || text[pos] != 't') {
    throw ParseError("expected 't' after the t coefficient", pos);
  }
  ++pos;
  if (pos != text.size()) throw ParseError("trailing characters in golden integer", pos);
  return GoldenInt(std::move(a), std::move(b));
}

std::string GoldenInt::format() const {
  std::string out = a_.str();
  out += b_.sign() < 0 ? '-' : '+';
  out += BigInt(boost::multiprecision::abs(b_)).str();
  out += 't';
  return out;
}

// floor(10^digits * (p + b*sqrt(5)) / 2) computed with an integer square
// root, then printed as a fixed-point decimal.
std::string GoldenInt::approx(int digits) const {
  if (digits < 0) digits = 0;
  const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  const BigInt rational = (2 * a_ - b_) * scale;
  const BigInt radicand = 5 * b_ * b_ * scale * scale;
  BigInt root = boost::multiprecision::sqrt(radicand);
  if (b_.sign() < 0) root = -(root + (root * root == radicand ? 0 : 1));
  BigInt numerator = rational + root;
  // floor division by 2
  BigInt scaled = numerator >= 0 ? BigInt(numerator / 2) : BigInt(-((-numerator + 1) / 2));

  std::string out;
  if (scaled < 0) {
    out += '-';
    scaled = -scaled;
  }
  const BigInt whole = scaled / scale;
  out += whole.str();
  if (digits > 0) {
    std::string frac = BigInt(scaled % scale).str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace ftau
