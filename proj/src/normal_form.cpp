#include <algorithm>
#include <optional>

#include "ftau/words.hpp"

namespace ftau {

namespace {

// A word is "sorted" when it reads
//   x_0^{i_0} y_0^{e_0} ... x_n^{i_n} y_n^{e_n} x_m^{-j_m} ... x_0^{-j_0}
// as a letter sequence. Returns the position of the first letter breaking
// that shape.
std::optional<std::size_t> first_shape_violation(const Word& w, NormalForm* out, std::string* why) {
  NormalForm nf;
  std::size_t p = 0;
  for (; p < w.size() && w[p].positive(); ++p) {
    const Letter& l = w[p];
    if (!nf.positive.empty()) {
      const PositiveEntry& last = nf.positive.back();
      if (l.index < last.index) {
        if (why) *why = "positive letters are not in ascending index order";
        return p;
      }
      if (l.index == last.index && last.y_flag) {
        if (why) *why = l.family == Family::Y ? "y exponent above 1" : "x letter after y at the same index";
        return p;
      }
    }
    if (nf.positive.empty() || nf.positive.back().index != l.index) {
      nf.positive.push_back(PositiveEntry{l.index, 0, false});
    }
    if (l.family == Family::X) {
      ++nf.positive.back().x_exponent;
    } else {
      nf.positive.back().y_flag = true;
    }
  }
  for (; p < w.size(); ++p) {
    const Letter& l = w[p];
    if (l.positive()) {
      if (why) *why = "positive letter after the negative part";
      return p;
    }
    if (l.family == Family::Y) {
      if (why) *why = "inverse y letter";
      return p;
    }
    if (!nf.negative.empty() && l.index > nf.negative.back().index) {
      if (why) *why = "negative letters are not in descending index order";
      return p;
    }
    if (nf.negative.empty() || nf.negative.back().index != l.index) {
      nf.negative.push_back(NegativeEntry{l.index, 0});
    }
    ++nf.negative.back().x_exponent;
  }
  if (out) *out = std::move(nf);
  return std::nullopt;
}

enum class ViolationKind { Condition1, Condition2 };

struct Violation {
  ViolationKind kind;
  std::uint32_t k;
  std::size_t last_x_k;         // position of the rightmost positive x_k
  std::size_t first_x_k_inv;    // position of the leftmost x_k^-1
};

// Finds the violation of conditions (1)/(2) with the smallest k in a sorted
// word; condition (1) is reported first at equal k.
std::optional<Violation> first_condition_violation(const Word& w, const NormalForm& nf) {
  std::size_t split = 0;
  while (split < w.size() && w[split].positive()) ++split;

  std::size_t offset = 0;  // start of index-k block in the positive part
  for (const auto& entry : nf.positive) {
    const std::uint32_t k = entry.index;
    const std::uint32_t ik = entry.x_exponent;
    const std::uint32_t jk = nf.j(k);
    if (ik == 0 || jk == 0) {
      offset += ik + (entry.y_flag ? 1 : 0);
      continue;
    }
    const std::size_t a = offset + ik - 1;
    std::size_t b = split;
    for (const auto& neg : nf.negative) {
      if (neg.index <= k) break;
      b += neg.x_exponent;
    }

    if (!entry.y_flag && nf.i(k + 1) == 0 && nf.j(k + 1) == 0 && !nf.epsilon(k + 1)) {
      return Violation{ViolationKind::Condition1, k, a, b};
    }
    // x_k y_k x_{k+2} u x_{k+1}^-1 x_k^-1
    if (entry.y_flag && nf.i(k + 1) == 0 && !nf.epsilon(k + 1) && nf.i(k + 2) > 0 &&
        nf.j(k + 1) > 0) {
      const bool u_avoids = std::none_of(w.begin() + static_cast<std::ptrdiff_t>(a + 3),
                                         w.begin() + static_cast<std::ptrdiff_t>(b - 1),
                                         [k](const Letter& l) { return l.index == k + 1 || l.index == k + 2; });
      if (u_avoids) return Violation{ViolationKind::Condition2, k, a, b};
    }
    offset += ik + (entry.y_flag ? 1 : 0);
  }
  return std::nullopt;
}

class Rewriter {
 public:
  Rewriter(Word w, std::uint64_t limit) : w_(std::move(w)), limit_(limit) {}

  Word run() {
    expand_inverse_y();
    while (true) {
      sort();
      NormalForm nf;
      first_shape_violation(w_, &nf, nullptr);
      const auto v = first_condition_violation(w_, nf);
      if (!v) return std::move(w_);
      tick();
      reduce(*v);
    }
  }

 private:
  void tick() {
    if (++steps_ > limit_) throw StepLimitExceeded(limit_, w_);
  }

  // y_i^-1 = y_i x_{i+1}^-1 x_i^-1, from y_i^2 = x_i x_{i+1}.
  void expand_inverse_y() {
    Word out;
    out.reserve(w_.size());
    for (const auto& l : w_) {
      if (l.family == Family::Y && !l.positive()) {
        tick();
        out.push_back(Letter::y(l.index));
        out.push_back(Letter::x(l.index + 1, -1));
        out.push_back(Letter::x(l.index, -1));
      } else {
        out.push_back(l);
      }
    }
    w_ = std::move(out);
  }

  // Rewrite of the adjacent pair (a, b), or nullopt when the pair is
  // already in sorted order.
  static std::optional<Word> rewrite_pair(const Letter& a, const Letter& b) {
    const std::uint32_t i = a.index;
    const std::uint32_t j = b.index;
    if (!a.positive() && b.positive()) {
      // a = x_i^-1 (inverse y letters were expanded up front).
      if (j > i) return Word{Letter{b.family, j + 1, 1}, a};
      if (j < i) return Word{b, Letter::x(i + 1, -1)};
      if (b.family == Family::X) return Word{};
      // x_i^-1 y_i = x_{i+1} y_i^-1 = x_{i+1} y_i x_{i+1}^-1 x_i^-1
      return Word{Letter::x(i + 1), Letter::y(i), Letter::x(i + 1, -1), Letter::x(i, -1)};
    }
    if (a.positive() && b.positive()) {
      if (j < i) return Word{b, Letter{a.family, i + 1, 1}};
      if (j == i && a.family == Family::Y) {
        if (b.family == Family::Y) return Word{Letter::x(i), Letter::x(i + 1)};
        // y_i x_i = x_i y_i x_{i+2} x_{i+1}^-1
        return Word{Letter::x(i), Letter::y(i), Letter::x(i + 2), Letter::x(i + 1, -1)};
      }
      return std::nullopt;
    }
    if (a.positive() && !b.positive()) {
      if (a == b.inverse()) return Word{};
      return std::nullopt;
    }
    // x_i^-1 x_j^-1 = x_{j+1}^-1 x_i^-1 for i < j
    if (i < j) return Word{Letter::x(j + 1, -1), a};
    return std::nullopt;
  }

  // Leftmost-redex rewriting. Positions left of the cursor never hold a
  // redex, so after a rewrite at p the scan resumes at p - 1.
  void sort() {
    std::size_t p = 0;
    while (p + 1 < w_.size()) {
      auto repl = rewrite_pair(w_[p], w_[p + 1]);
      if (!repl) {
        ++p;
        continue;
      }
      tick();
      const auto at = w_.begin() + static_cast<std::ptrdiff_t>(p);
      w_.erase(at, at + 2);
      w_.insert(w_.begin() + static_cast<std::ptrdiff_t>(p), repl->begin(), repl->end());
      p = p == 0 ? 0 : p - 1;
    }
  }

  // (1): x_k v x_k^-1 = sigma^-1(v) when v only uses indices >= k+2.
  // (2): x_k y_k x_{k+2} u x_{k+1}^-1 x_k^-1 = y_k sigma^-2(u), using
  //      x_k y_k x_{k+2} = y_k x_k x_{k+1}.
  void reduce(const Violation& v) {
    const auto first = w_.begin() + static_cast<std::ptrdiff_t>(v.last_x_k);
    const auto last = w_.begin() + static_cast<std::ptrdiff_t>(v.first_x_k_inv) + 1;
    Word replacement;
    if (v.kind == ViolationKind::Condition1) {
      replacement = shift(Word(first + 1, last - 1), -1);
    } else {
      replacement.push_back(Letter::y(v.k));
      const Word u = shift(Word(first + 3, last - 2), -2);
      replacement.insert(replacement.end(), u.begin(), u.end());
    }
    const auto at = w_.erase(first, last);
    w_.insert(at, replacement.begin(), replacement.end());
  }

  Word w_;
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

}  // namespace

std::uint32_t NormalForm::i(std::uint32_t k) const {
  for (const auto& e : positive) {
    if (e.index == k) return e.x_exponent;
  }
  return 0;
}

std::uint32_t NormalForm::j(std::uint32_t k) const {
  for (const auto& e : negative) {
    if (e.index == k) return e.x_exponent;
  }
  return 0;
}

bool NormalForm::epsilon(std::uint32_t k) const {
  for (const auto& e : positive) {
    if (e.index == k) return e.y_flag;
  }
  return false;
}

Word NormalForm::to_word() const {
  Word w;
  for (const auto& e : positive) {
    w.insert(w.end(), e.x_exponent, Letter::x(e.index));
    if (e.y_flag) w.push_back(Letter::y(e.index));
  }
  for (const auto& e : negative) w.insert(w.end(), e.x_exponent, Letter::x(e.index, -1));
  return w;
}

NormalForm to_normal_form_data(const Word& w) {
  NormalForm nf;
  std::string why;
  if (auto bad = first_shape_violation(w, &nf, &why)) throw NormalFormError(why, *bad);
  if (auto v = first_condition_violation(w, nf)) {
    throw NormalFormError(std::string(v->kind == ViolationKind::Condition1 ? "condition (1)" : "condition (2)") +
                              " fails for k = " + std::to_string(v->k),
                          v->last_x_k);
  }
  return nf;
}

bool is_normal_form(const Word& w) {
  NormalForm nf;
  if (first_shape_violation(w, &nf, nullptr)) return false;
  return !first_condition_violation(w, nf);
}

Word normalize(const Word& w, std::uint64_t step_limit) {
  return Rewriter(w, step_limit).run();
}

}  // namespace ftau
