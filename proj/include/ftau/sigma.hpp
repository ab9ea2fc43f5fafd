#pragma once

#include <cstdint>
#include <string>

#include "ftau/characters.hpp"

namespace ftau {

// Decision procedures for the Sigma (BNSR) invariants of F_t and of its
// index-2 subgroup K.
//
// These encode the known classification, they do not compute Sigma from
// first principles:
//   Sigma^1   = S(F_t) minus {[-lambda], [-rho]}
//   Sigma^n   = Sigma^1 minus {[-(a lambda + b rho)] : a, b > 0}  (n >= 2)
// with the homotopical and homological (over Z) invariants equal. For
// 2 < n < infinity the value is forced by the chain
// Sigma^2 ⊇ Sigma^n ⊇ Sigma^infinity = Sigma^2.
// K has the same invariants under restriction, which is the identity in
// the (lambda|_K, rho|_K) coordinates.

struct SigmaVerdict {
  bool in_sigma1 = false;
  bool in_sigma_infty = false;

  friend bool operator==(const SigmaVerdict&, const SigmaVerdict&) = default;
};

/// n >= 1; throws DomainError for n == 0 and ZeroCharacterError for (0, 0).
bool sigma_membership(const CharacterClass& c, std::uint32_t n);
bool sigma_membership_K(const CharacterClass& c_on_K, std::uint32_t n);
SigmaVerdict sigma_verdict(const CharacterClass& c);

enum class KernelType : std::uint8_t {
  F_INFTY,      // both [chi] and [-chi] in Sigma^infinity
  FG_NOT_FP2,   // both in Sigma^1, not both in Sigma^2
  NOT_FG,       // one of them outside Sigma^1
};

std::string to_string(KernelType t);

/// Finiteness type of ker(chi) for a nonzero rational character, decided by
/// the sign of ab.
KernelType kernel_coabelian_type(const Character& chi);

/// An element t0 in ker(chi) with |lambda(t0)| minimal and nonzero, for
/// chi = a lambda + b rho with ab != 0. With (A, B) the primitive class of
/// chi, t0 = (y0 x0^-1)^B x1^-A, so (lambda, rho)(t0) = (B, -A).
/// Throws DomainError when a or b is zero.
Word kernel_witness(const Character& chi);

}  // namespace ftau
