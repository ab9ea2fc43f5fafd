#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ftau/errors.hpp"
#include "ftau/pl_homeo.hpp"

namespace ftau {

enum class Family : std::uint8_t { X, Y };

// One signed generator x_i^{+-1} or y_i^{+-1}.
struct Letter {
  Family family = Family::X;
  std::uint32_t index = 0;
  std::int8_t sign = 1;

  static constexpr Letter x(std::uint32_t i, int s = 1) { return {Family::X, i, static_cast<std::int8_t>(s)}; }
  static constexpr Letter y(std::uint32_t i, int s = 1) { return {Family::Y, i, static_cast<std::int8_t>(s)}; }

  constexpr bool positive() const { return sign > 0; }
  constexpr Letter inverse() const { return {family, index, static_cast<std::int8_t>(-sign)}; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Whitespace-separated terms `('x'|'y')<index>['^'<int>]`.
Word parse_word(std::string_view text);
/// Groups runs of equal letters into exponents: [y0, y0] -> "y0^2".
std::string format_word(const Word& w);

Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, std::int64_t n);

/// Left-to-right product of the generators' homeomorphisms.
PLHomeo eval_word(const Word& w);
PLHomeo eval_letter(const Letter& l);

Word free_reduce(const Word& w);

class ShiftUnderflow : public UserError {
 public:
  using UserError::UserError;
};

/// Adds m to every index. Throws ShiftUnderflow if an index would become
/// negative.
Word shift(const Word& w, std::int64_t m);

std::uint32_t max_index(const Word& w);

/// Relator pairs (a_j b_i, b_i a_{j+1}) for 0 <= i < j <= n, a, b in {x, y},
/// followed by (y_i y_i, x_i x_{i+1}) for 0 <= i <= n.
std::vector<std::pair<Word, Word>> relations_up_to(std::uint32_t n);

// ---------------------------------------------------------------------------
// Normal forms
//
// The unique form
//   x_0^{i_0} y_0^{e_0} x_1^{i_1} y_1^{e_1} ... x_n^{i_n} y_n^{e_n}
//     x_m^{-j_m} ... x_0^{-j_0}
// with e_k in {0, 1} and
//   (1) i_k != 0 != j_k implies one of i_{k+1}, j_{k+1}, e_k, e_{k+1} != 0;
//   (2) no subword x_k y_k x_{k+2} u x_{k+1}^-1 x_k^-1 where u avoids the
//       indices k+1 and k+2.

struct PositiveEntry {
  std::uint32_t index = 0;
  std::uint32_t x_exponent = 0;
  bool y_flag = false;

  friend bool operator==(const PositiveEntry&, const PositiveEntry&) = default;
};

struct NegativeEntry {
  std::uint32_t index = 0;
  std::uint32_t x_exponent = 0;

  friend bool operator==(const NegativeEntry&, const NegativeEntry&) = default;
};

struct NormalForm {
  // Indices with i_k or e_k nonzero, ascending.
  std::vector<PositiveEntry> positive;
  // Indices with j_k nonzero, descending.
  std::vector<NegativeEntry> negative;

  std::uint32_t i(std::uint32_t k) const;
  std::uint32_t j(std::uint32_t k) const;
  bool epsilon(std::uint32_t k) const;

  Word to_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

class NormalFormError : public UserError {
 public:
  NormalFormError(const std::string& what, std::size_t position)
      : UserError(what + " at letter " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Decomposes a word in normal form; NormalFormError names the first
/// offending letter otherwise.
NormalForm to_normal_form_data(const Word& w);
bool is_normal_form(const Word& w);

class StepLimitExceeded : public std::runtime_error {
 public:
  StepLimitExceeded(std::uint64_t limit, Word partial)
      : std::runtime_error("normalization exceeded the step limit of " + std::to_string(limit)),
        partial_(std::move(partial)) {}
  const Word& partial() const noexcept { return partial_; }

 private:
  Word partial_;
};

inline constexpr std::uint64_t kDefaultStepLimit = 100000;

/// Rewrites w into its normal form. Throws StepLimitExceeded (carrying the
/// partially rewritten word) after `step_limit` rewrite steps.
Word normalize(const Word& w, std::uint64_t step_limit = kDefaultStepLimit);

// ---------------------------------------------------------------------------
// Abelian invariants

// Image in Z^2 + Z/2 in the basis (y0, x1, z), z = y1 - x1.
struct AbelElt {
  std::int64_t u = 0;
  std::int64_t v = 0;
  bool z = false;

  AbelElt& operator+=(const AbelElt& o) {
    u += o.u;
    v += o.v;
    z = z != o.z;
    return *this;
  }
  friend bool operator==(const AbelElt&, const AbelElt&) = default;
};

AbelElt abelianize(const Letter& l);
AbelElt abelianize(const Word& w);

/// log_t f'(0) and log_t f'(1) of the element, summed letter by letter.
std::int64_t lambda_of(const Word& w);
std::int64_t rho_of(const Word& w);

enum class Coset : std::uint8_t { K, Y0K };

/// Signed number of y0 letters mod 2.
int coset_parity(const Word& w);
Coset coset_of(const Word& w);

}  // namespace ftau
