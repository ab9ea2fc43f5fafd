#include "ftau/words.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace ftau {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

template <typename Int>
Int read_number(std::string_view text, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == digits) throw ParseError(std::string("expected ") + what, digits);
  Int value{};
  const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos) {
    throw ParseError(std::string(what) + " out of range", start);
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;

    const char head = text[pos];
    if (head != 'x' && head != 'y') throw ParseError("expected generator 'x' or 'y'", pos);
    ++pos;
    if (pos < text.size() && !is_digit(text[pos])) throw ParseError("expected generator index", pos);
    const auto index = read_number<std::uint32_t>(text, pos, "generator index");
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t at = pos;
      exponent = read_number<std::int64_t>(text, pos, "exponent");
      if (exponent > kMaxExponent || exponent < -kMaxExponent) {
        throw ParseError("exponent magnitude too large", at);
      }
    }
    if (pos < text.size() && !is_space(text[pos])) {
      throw ParseError("expected whitespace between terms", pos);
    }
    const Letter base{head == 'x' ? Family::X : Family::Y, index, 1};
    const Letter l = exponent < 0 ? base.inverse() : base;
    for (std::int64_t n = 0; n < (exponent < 0 ? -exponent : exponent); ++n) w.push_back(l);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t p = 0; p < w.size();) {
    std::size_t run = 1;
    while (p + run < w.size() && w[p + run] == w[p]) ++run;
    if (!out.empty()) out += ' ';
    out += w[p].family == Family::X ? 'x' : 'y';
    out += std::to_string(w[p].index);
    if (w[p].sign < 0) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += '^' + std::to_string(run);
    }
    p += run;
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out(u);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word power(const Word& w, std::int64_t n) {
  const Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out.insert(out.end(), base.begin(), base.end());
  return out;
}

PLHomeo eval_letter(const Letter& l) {
  PLHomeo g = l.family == Family::X ? generator_x(l.index) : generator_y(l.index);
  return l.positive() ? g : g.inverse();
}

PLHomeo eval_word(const Word& w) {
  PLHomeo f;
  for (const auto& l : w) f = compose(f, eval_letter(l));
  return f;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word shift(const Word& w, std::int64_t m) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    const std::int64_t idx = static_cast<std::int64_t>(l.index) + m;
    if (idx < 0) {
      throw ShiftUnderflow("shifting by " + std::to_string(m) + " makes the index of " +
                           format_word({l}) + " negative");
    }
    if (idx > std::numeric_limits<std::uint32_t>::max()) {
      throw ShiftUnderflow("shifting by " + std::to_string(m) + " overflows the index of " +
                           format_word({l}));
    }
    out.push_back(Letter{l.family, static_cast<std::uint32_t>(idx), l.sign});
  }
  return out;
}

std::uint32_t max_index(const Word& w) {
  std::uint32_t m = 0;
  for (const auto& l : w) m = std::max(m, l.index);
  return m;
}

std::vector<std::pair<Word, Word>> relations_up_to(std::uint32_t n) {
  std::vector<std::pair<Word, Word>> rels;
  constexpr Family fams[] = {Family::X, Family::Y};
  for (std::uint32_t j = 1; j <= n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      for (Family a : fams) {
        for (Family b : fams) {
          rels.emplace_back(Word{{a, j, 1}, {b, i, 1}}, Word{{b, i, 1}, {a, j + 1, 1}});
        }
      }
    }
  }
  for (std::uint32_t i = 0; i <= n; ++i) {
    rels.emplace_back(Word{Letter::y(i), Letter::y(i)}, Word{Letter::x(i), Letter::x(i + 1)});
  }
  return rels;
}

// x0 -> (2, -1, 0), x_j -> (0, 1, 0), y0 -> (1, 0, 0), y_j -> (0, 1, 1).
AbelElt abelianize(const Letter& l) {
  AbelElt e;
  if (l.family == Family::X) {
    e = l.index == 0 ? AbelElt{2, -1, false} : AbelElt{0, 1, false};
  } else {
    e = l.index == 0 ? AbelElt{1, 0, false} : AbelElt{0, 1, true};
  }
  if (!l.positive()) {
    e.u = -e.u;
    e.v = -e.v;
  }
  return e;
}

AbelElt abelianize(const Word& w) {
  AbelElt sum;
  for (const auto& l : w) sum += abelianize(l);
  return sum;
}

std::int64_t lambda_of(const Word& w) {
  std::int64_t total = 0;
  for (const auto& l : w) {
    if (l.index != 0) continue;
    total += (l.family == Family::X ? -2 : -1) * l.sign;
  }
  return total;
}

std::int64_t rho_of(const Word& w) {
  std::int64_t total = 0;
  for (const auto& l : w) total += l.sign;
  return total;
}

int coset_parity(const Word& w) {
  int parity = 0;
  for (const auto& l : w) {
    if (l.family == Family::Y && l.index == 0) parity ^= 1;
  }
  return parity;
}

Coset coset_of(const Word& w) { return coset_parity(w) == 0 ? Coset::K : Coset::Y0K; }

}  // namespace ftau
