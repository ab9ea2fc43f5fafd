#pragma once

#include <algorithm>
#include <random>

#include "ftau/pl_homeo.hpp"
#include "ftau/words.hpp"

namespace ftau::testing {

inline Letter random_letter(std::mt19937_64& rng, std::uint32_t max_index, bool allow_y0 = true) {
  std::uniform_int_distribution<std::uint32_t> idx(0, max_index);
  std::bernoulli_distribution coin(0.5);
  while (true) {
    Letter l{coin(rng) ? Family::X : Family::Y, idx(rng), static_cast<std::int8_t>(coin(rng) ? 1 : -1)};
    if (!allow_y0 && l.family == Family::Y && l.index == 0) continue;
    return l;
  }
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_index, bool allow_y0 = true) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  Word w(len(rng));
  for (auto& l : w) l = random_letter(rng, max_index, allow_y0);
  return w;
}

// Random product of at most max_len generators and inverses, as a
// homeomorphism.
inline PLHomeo random_element(std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_index) {
  return eval_word(random_word(rng, max_len, max_index));
}

// Applies `moves` random moves that preserve the group element: insert a
// relator (l r^-1 or r l^-1), insert a cancelling pair, substitute one side
// of a relation for an occurrence of the other, or free-reduce.
inline Word perturb(const Word& w, std::mt19937_64& rng, int moves, std::uint32_t max_rel_index = 6) {
  static const auto rels = relations_up_to(max_rel_index);
  std::uniform_int_distribution<std::size_t> pick_rel(0, rels.size() - 1);
  std::uniform_int_distribution<int> pick_move(0, 3);
  std::bernoulli_distribution coin(0.5);
  Word out = w;
  for (int m = 0; m < moves; ++m) {
    auto [l, r] = rels[pick_rel(rng)];
    if (coin(rng)) std::swap(l, r);
    std::uniform_int_distribution<std::size_t> at(0, out.size());
    const auto pos = out.begin() + static_cast<std::ptrdiff_t>(at(rng));
    switch (pick_move(rng)) {
      case 0: {
        const Word relator = concat(l, inverse(r));
        out.insert(pos, relator.begin(), relator.end());
        break;
      }
      case 1: {
        const Letter g = random_letter(rng, max_rel_index);
        out.insert(pos, {g, g.inverse()});
        break;
      }
      case 2: {
        auto hit = std::search(out.begin(), out.end(), l.begin(), l.end());
        if (hit == out.end()) {
          out.insert(pos, {l.front(), l.front().inverse()});
        } else {
          hit = out.erase(hit, hit + static_cast<std::ptrdiff_t>(l.size()));
          out.insert(hit, r.begin(), r.end());
        }
        break;
      }
      default:
        out = free_reduce(out);
        break;
    }
  }
  return out;
}

// Example maps f and g with (lambda, rho) profiles (1, 0) and (0, 1).
inline PLHomeo li_f() {
  const auto t = [](int n) { return GoldenInt::tau_pow(n); };
  return PLHomeo::from_pieces({
      {GoldenInt::zero(), GoldenInt::zero(), 1},
      {t(2), t(3), -1},
      {t(1), t(1), 0},
  });
}

inline PLHomeo li_g() {
  const auto t = [](int n) { return GoldenInt::tau_pow(n); };
  return PLHomeo::from_pieces({
      {GoldenInt::zero(), GoldenInt::zero(), 0},
      {t(2), t(2), -1},
      {t(1), t(2) + t(2), 1},
  });
}

}  // namespace ftau::testing
