#include "ftau/characters.hpp"

namespace ftau {

Rational eval_character(const Character& chi, const Word& w) {
  return chi.a * lambda_of(w) + chi.b * rho_of(w);
}

// The basis of Hom(K, R) is (lambda|_K, rho|_K), so evaluation on elements
// of K is the same formula.
Rational eval_character(const CharacterOnK& psi, const Word& w) {
  return psi.a * lambda_of(w) + psi.b * rho_of(w);
}

CharacterClass make_class(const BigInt& a, const BigInt& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroCharacterError();
  const BigInt g = boost::multiprecision::abs(boost::multiprecision::gcd(a, b));
  return CharacterClass{a / g, b / g};
}

CharacterClass class_of(const Character& chi) {
  if (chi.is_zero()) throw ZeroCharacterError();
  // Multiply through by the (positive) product of denominators.
  const BigInt da = boost::multiprecision::denominator(chi.a);
  const BigInt db = boost::multiprecision::denominator(chi.b);
  const BigInt a = boost::multiprecision::numerator(chi.a) * db;
  const BigInt b = boost::multiprecision::numerator(chi.b) * da;
  return make_class(a, b);
}

CharacterClass antipode(const CharacterClass& c) { return CharacterClass{-c.a, -c.b}; }

Character to_character(const CharacterClass& c) { return Character{Rational(c.a), Rational(c.b)}; }

CharacterOnK restrict_to_K(const Character& chi) { return CharacterOnK{chi.a, chi.b}; }

Rational lifted_value_on_y0(const CharacterOnK& psi) {
  static const Word y0_squared = {Letter::x(0), Letter::x(1)};
  return eval_character(psi, y0_squared) / 2;
}

// chi(y0) = -a + b and chi(x1) = b for chi = a*lambda + b*rho.
Character lift_from_K(const CharacterOnK& psi) {
  const Rational on_y0 = lifted_value_on_y0(psi);
  const Rational on_x1 = eval_character(psi, Word{Letter::x(1)});
  return Character{on_x1 - on_y0, on_x1};
}

bool in_sqrt_commutator(const Word& w) { return lambda_of(w) == 0 && rho_of(w) == 0; }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::size_t p = 0;
    if (p < part.size() && (part[p] == '-' || part[p] == '+')) ++p;
    if (p == part.size()) throw ParseError("expected digits in rational", offset + p);
    for (std::size_t q = p; q < part.size(); ++q) {
      if (part[q] < '0' || part[q] > '9') throw ParseError("unexpected character in rational", offset + q);
    }
    std::string digits(part[0] == '+' ? part.substr(1) : part);
    return BigInt(digits);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  const BigInt num = parse_int(text.substr(0, slash), 0);
  const BigInt den = parse_int(text.substr(slash + 1), slash + 1);
  if (den.is_zero()) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

Character parse_character(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected 'a,b'", text.size());
  Character chi;
  chi.a = parse_rational(text.substr(0, comma));
  try {
    chi.b = parse_rational(text.substr(comma + 1));
  } catch (const ParseError& e) {
    throw ParseError("malformed second coordinate", comma + 1 + e.position());
  }
  return chi;
}

std::string format_rational(const Rational& r) {
  const BigInt den = boost::multiprecision::denominator(r);
  std::string out = boost::multiprecision::numerator(r).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::string format_character(const Character& chi) {
  return format_rational(chi.a) + "," + format_rational(chi.b);
}

std::string format_class(const CharacterClass& c) { return c.a.str() + "," + c.b.str(); }

}  // namespace ftau
