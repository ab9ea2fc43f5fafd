#pragma once

#include <cstdint>
#include <string>

#include "ftau/words.hpp"

namespace ftau {

// K = <x0, x1, y1, x2, y2, ...> has index 2 in F_t, and is an ascending HNN
// extension of F_t[1] = <x1, y1, x2, y2, ...> with stable letter x0^-1:
// x0^-1 g x0 = sigma(g) for g in F_t[1].

/// sigma(x_n) = x_{n+1}, sigma(y_n) = y_{n+1}.
Word sigma_endo(const Word& w);

// x0^a * core * x0^-b, core using indices >= 1 only.
struct HnnForm {
  std::uint64_t a = 0;
  Word core;
  std::uint64_t b = 0;

  Word to_word() const;
  friend bool operator==(const HnnForm&, const HnnForm&) = default;
};

class AlphabetError : public UserError {
 public:
  using UserError::UserError;
};

/// Collects x0 letters to the front and x0^-1 letters to the back using
/// g x0 = x0 sigma(g) and x0^-1 g = sigma(g) x0^-1. Throws AlphabetError on
/// y0^{+-1}.
HnnForm hnn_rewrite(const Word& w);

/// Britton-style reduction: while a, b > 0 and the normalized core only uses
/// indices >= 2, replaces (a, core, b) by (a-1, sigma^-1(core), b-1). The
/// returned core is in normal form.
HnnForm hnn_reduce(const HnnForm& h, std::uint64_t step_limit = kDefaultStepLimit);

std::string format_hnn(const HnnForm& h);

bool in_K(const Word& w);

enum class Membership : std::uint8_t { No, Yes, Unknown };

/// Membership in F_t[m] by inspecting the normal form: it is also the
/// normal form inside the shifted copy, so it uses no index below m.
/// Unknown when normalization hits the step limit.
Membership in_Ftau_m(const Word& w, std::uint32_t m, std::uint64_t step_limit = kDefaultStepLimit);

std::string to_string(Membership m);

}  // namespace ftau
