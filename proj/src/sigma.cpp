#include "ftau/sigma.hpp"

#include <limits>

namespace ftau {

bool sigma_membership(const CharacterClass& c, std::uint32_t n) {
  if (n == 0) throw DomainError("Sigma^n is defined for n >= 1");
  if (c.a.is_zero() && c.b.is_zero()) throw ZeroCharacterError();
  const CharacterClass p = make_class(c.a, c.b);
  if (n == 1) {
    const bool minus_lambda = p.a == -1 && p.b.is_zero();
    const bool minus_rho = p.a.is_zero() && p.b == -1;
    return !minus_lambda && !minus_rho;
  }
  return p.a.sign() > 0 || p.b.sign() > 0;
}

bool sigma_membership_K(const CharacterClass& c_on_K, std::uint32_t n) {
  return sigma_membership(c_on_K, n);
}

SigmaVerdict sigma_verdict(const CharacterClass& c) {
  return SigmaVerdict{sigma_membership(c, 1), sigma_membership(c, 2)};
}

std::string to_string(KernelType t) {
  switch (t) {
    case KernelType::F_INFTY:
      return "F_INFTY";
    case KernelType::FG_NOT_FP2:
      return "FG_NOT_FP2";
    case KernelType::NOT_FG:
      return "NOT_FG";
  }
  return "?";
}

KernelType kernel_coabelian_type(const Character& chi) {
  if (chi.is_zero()) throw ZeroCharacterError();
  const int s = chi.a.sign() * chi.b.sign();
  if (s < 0) return KernelType::F_INFTY;
  if (s > 0) return KernelType::FG_NOT_FP2;
  return KernelType::NOT_FG;
}

Word kernel_witness(const Character& chi) {
  if (chi.a.is_zero() || chi.b.is_zero()) {
    throw DomainError("kernel witnesses need a character with both coordinates nonzero");
  }
  const CharacterClass c = class_of(chi);
  constexpr auto limit = std::numeric_limits<std::int64_t>::max();
  if (boost::multiprecision::abs(c.a) > limit || boost::multiprecision::abs(c.b) > limit) {
    throw DomainError("character coordinates too large for an explicit witness");
  }
  static const Word w_f = {Letter::y(0), Letter::x(0, -1)};  // (lambda, rho) = (1, 0)
  static const Word w_g = {Letter::x(1)};                    // (lambda, rho) = (0, 1)
  const auto p = static_cast<std::int64_t>(c.b);
  const auto q = -static_cast<std::int64_t>(c.a);
  return concat(power(w_f, p), power(w_g, q));
}

}  // namespace ftau
