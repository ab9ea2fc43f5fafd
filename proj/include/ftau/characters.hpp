#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ftau/errors.hpp"
#include "ftau/words.hpp"

namespace ftau {

using Rational = boost::multiprecision::cpp_rational;

class ZeroCharacterError : public UserError {
 public:
  ZeroCharacterError() : UserError("the zero character has no class on the character sphere") {}
};

// chi = a*lambda + b*rho, where lambda(f) = log_t f'(0) and
// rho(f) = log_t f'(1). These two span Hom(F_t, R).
struct Character {
  Rational a;
  Rational b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const Character&, const Character&) = default;

  static Character lambda() { return {1, 0}; }
  static Character rho() { return {0, 1}; }
};

// A point of the character sphere: a primitive integer pair, so that two
// characters share a class exactly when one is a positive multiple of the
// other.
struct CharacterClass {
  BigInt a;
  BigInt b;

  friend bool operator==(const CharacterClass&, const CharacterClass&) = default;
};

// A character of the index-2 subgroup K = <x0, x1, y1, x2, y2, ...> in the
// basis (lambda|_K, rho|_K).
struct CharacterOnK {
  Rational a;
  Rational b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const CharacterOnK&, const CharacterOnK&) = default;
};

Rational eval_character(const Character& chi, const Word& w);
Rational eval_character(const CharacterOnK& psi, const Word& w);

/// Throws ZeroCharacterError for the zero character.
CharacterClass class_of(const Character& chi);
/// Throws ZeroCharacterError unless (a, b) is nonzero; rescales to primitive.
CharacterClass make_class(const BigInt& a, const BigInt& b);
CharacterClass antipode(const CharacterClass& c);
Character to_character(const CharacterClass& c);

/// Restriction to K. In the chosen bases this is the identity on
/// coordinates.
CharacterOnK restrict_to_K(const Character& chi);

/// Extension of a character of K to F_t. Every standard generator except y0
/// lies in K and keeps its value; y0^2 = x0 x1 lies in K, so the extension
/// sends y0 to psi(x0 x1) / 2. The coordinates are read back from the
/// values on y0 and x1.
Character lift_from_K(const CharacterOnK& psi);
/// Value of lift_from_K(psi) on y0.
Rational lifted_value_on_y0(const CharacterOnK& psi);

/// Whether some power of w lies in the commutator subgroup, i.e. its
/// abelian image is torsion. Since (lambda, rho) is injective on the free
/// part, this is lambda(w) = rho(w) = 0.
bool in_sqrt_commutator(const Word& w);

/// "p/q" or an integer.
Rational parse_rational(std::string_view text);
/// "a,b" with rational entries, e.g. "1/2,-3".
Character parse_character(std::string_view text);
std::string format_rational(const Rational& r);
std::string format_character(const Character& chi);
std::string format_class(const CharacterClass& c);

}  // namespace ftau
