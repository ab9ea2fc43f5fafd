#include "ftau/subgroups.hpp"

#include <algorithm>

namespace ftau {

Word sigma_endo(const Word& w) { return shift(w, 1); }

Word HnnForm::to_word() const {
  Word w(a, Letter::x(0));
  w.insert(w.end(), core.begin(), core.end());
  w.insert(w.end(), b, Letter::x(0, -1));
  return w;
}

// Scans left to right keeping the prefix as x0^a core x0^-b.
HnnForm hnn_rewrite(const Word& w) {
  HnnForm h;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Letter& l = w[p];
    if (l.index == 0 && l.family == Family::Y) {
      throw AlphabetError("y0 is not in the HNN alphabet of K (letter " + std::to_string(p) + ")");
    }
    if (l.index != 0) {
      // x0^-b g = sigma^b(g) x0^-b
      h.core.push_back(Letter{l.family, l.index + static_cast<std::uint32_t>(h.b), l.sign});
    } else if (!l.positive()) {
      ++h.b;
    } else if (h.b > 0) {
      --h.b;
    } else {
      // core x0 = x0 sigma(core)
      h.core = sigma_endo(h.core);
      ++h.a;
    }
  }
  h.core = free_reduce(h.core);
  return h;
}

HnnForm hnn_reduce(const HnnForm& h, std::uint64_t step_limit) {
  HnnForm out{h.a, normalize(h.core, step_limit), h.b};
  auto min_index = [](const Word& w) {
    std::uint32_t m = UINT32_MAX;
    for (const auto& l : w) m = std::min(m, l.index);
    return m;
  };
  while (out.a > 0 && out.b > 0 && min_index(out.core) >= 2) {
    --out.a;
    --out.b;
    out.core = normalize(shift(out.core, -1), step_limit);
  }
  return out;
}

std::string format_hnn(const HnnForm& h) {
  return "a=" + std::to_string(h.a) + " core=" + (h.core.empty() ? "1" : format_word(h.core)) +
         " b=" + std::to_string(h.b);
}

bool in_K(const Word& w) { return coset_parity(w) == 0; }

Membership in_Ftau_m(const Word& w, std::uint32_t m, std::uint64_t step_limit) {
  try {
    const Word nf = normalize(w, step_limit);
    const bool inside = std::all_of(nf.begin(), nf.end(), [m](const Letter& l) { return l.index >= m; });
    return inside ? Membership::Yes : Membership::No;
  } catch (const StepLimitExceeded&) {
    return Membership::Unknown;
  }
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::No:
      return "no";
    case Membership::Yes:
      return "yes";
    case Membership::Unknown:
      return "unknown";
  }
  return "?";
}

}  // namespace ftau
