#include <gtest/gtest.h>

#include <chrono>
#include <map>

#include "ftau/words.hpp"
#include "support.hpp"

namespace ftau {
namespace {

Word w(std::string_view text) { return parse_word(text); }

std::string key_of(const PLHomeo& f) {
  std::string key;
  for (const auto& p : f.pieces()) {
    key += p.left.format() + ':' + p.value.format() + ':' + std::to_string(p.slope_exponent) + ';';
  }
  return key;
}

TEST(NormalFormTest, IsNormalFormExamples) {
  EXPECT_TRUE(is_normal_form(w("x0 y0 x1 x0^-1")));
  EXPECT_FALSE(is_normal_form(w("x0 x0^-1")));
  EXPECT_FALSE(is_normal_form(w("y0 x2 y1")));
  EXPECT_TRUE(is_normal_form({}));
  EXPECT_TRUE(is_normal_form(w("x0 x1")));
  EXPECT_TRUE(is_normal_form(w("x0 x2")));
  EXPECT_FALSE(is_normal_form(w("y0 y0")));
  EXPECT_FALSE(is_normal_form(w("y0^-1")));
  EXPECT_FALSE(is_normal_form(w("x1^-1 x2^-1")));
  EXPECT_FALSE(is_normal_form(w("x1^-1 x0")));
  EXPECT_TRUE(is_normal_form(w("x1^-1 x0^-1")));
  // condition (1) is met by j_{k+1}
  EXPECT_TRUE(is_normal_form(w("x0 x1^-1 x0^-1")));
  // condition (2): x0 y0 x2 x1^-1 x0^-1 with empty middle
  EXPECT_FALSE(is_normal_form(w("x0 y0 x2 x1^-1 x0^-1")));
  // a middle letter indexed 2 blocks condition (2)
  EXPECT_TRUE(is_normal_form(w("x0 y0 x2 y2 x1^-1 x0^-1")));
}

TEST(NormalFormTest, DecompositionData) {
  const NormalForm nf = to_normal_form_data(w("x0 y0 x1 x0^-1"));
  EXPECT_EQ(nf.i(0), 1u);
  EXPECT_TRUE(nf.epsilon(0));
  EXPECT_EQ(nf.i(1), 1u);
  EXPECT_FALSE(nf.epsilon(1));
  EXPECT_EQ(nf.j(0), 1u);
  EXPECT_EQ(nf.j(1), 0u);
  EXPECT_EQ(nf.i(7), 0u);
  EXPECT_EQ(nf.to_word(), w("x0 y0 x1 x0^-1"));

  const NormalForm big = to_normal_form_data(w("x0^3 y2 x5^2 y5 x4^-2 x1^-1"));
  ASSERT_EQ(big.positive.size(), 3u);
  EXPECT_EQ(big.positive[0], (PositiveEntry{0, 3, false}));
  EXPECT_EQ(big.positive[1], (PositiveEntry{2, 0, true}));
  EXPECT_EQ(big.positive[2], (PositiveEntry{5, 2, true}));
  ASSERT_EQ(big.negative.size(), 2u);
  EXPECT_EQ(big.negative[0], (NegativeEntry{4, 2}));
  EXPECT_EQ(big.negative[1], (NegativeEntry{1, 1}));
}

TEST(NormalFormTest, ErrorsNameFirstOffendingLetter) {
  const auto position_of = [](std::string_view text) -> std::size_t {
    try {
      to_normal_form_data(parse_word(text));
    } catch (const NormalFormError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for '" << text << "'";
    return 0;
  };
  EXPECT_EQ(position_of("y0 x2 y1"), 2u);
  EXPECT_EQ(position_of("x0 x0^-1"), 0u);
  EXPECT_EQ(position_of("x1^-1 x2"), 1u);
  EXPECT_EQ(position_of("y0 y0"), 1u);
  EXPECT_EQ(position_of("x2 y1^-1"), 1u);
}

TEST(NormalizeTest, Examples) {
  EXPECT_TRUE(normalize(w("x0 x0^-1")).empty());
  EXPECT_EQ(normalize(w("y0 y0")), w("x0 x1"));
  EXPECT_EQ(normalize(w("x1 x0")), w("x0 x2"));
  EXPECT_EQ(normalize(w("x0^-1 x1 x0")), w("x2"));
  EXPECT_EQ(normalize(w("y0^-1 y0")), Word{});
  EXPECT_EQ(normalize(w("x0 y0 x2 x1^-1 x0^-1")), w("y0"));
  EXPECT_TRUE(normalize({}).empty());
}

TEST(NormalizeTest, SoundAndNormal) {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 500; ++n) {
    const Word word = testing::random_word(rng, 20, 6);
    const Word nf = normalize(word);
    ASSERT_TRUE(is_normal_form(nf)) << format_word(word) << " -> " << format_word(nf);
    ASSERT_EQ(eval_word(nf), eval_word(word)) << format_word(word);
    ASSERT_EQ(normalize(nf), nf);
  }
}

TEST(NormalizeTest, UniqueUnderRelationMoves) {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 500; ++n) {
    const Word word = testing::random_word(rng, 15, 5);
    const Word other = testing::perturb(word, rng, 5);
    ASSERT_EQ(eval_word(other), eval_word(word));
    ASSERT_EQ(normalize(other), normalize(word)) << format_word(word) << " vs " << format_word(other);
  }
}

// Every word of length <= 4 over x0..x2, y0..y2 and inverses: normal forms
// coincide exactly when the homeomorphisms do.
TEST(NormalizeTest, ExhaustiveShortWords) {
  std::vector<Letter> alphabet;
  for (std::uint32_t i = 0; i <= 2; ++i)
    for (int s : {1, -1}) {
      alphabet.push_back(Letter::x(i, s));
      alphabet.push_back(Letter::y(i, s));
    }
  std::map<std::string, Word> nf_of_element;
  std::map<Word, std::string> element_of_nf;
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= 4; ++len) {
    std::vector<Word> next;
    for (const Word& word : layer) {
      const std::string key = key_of(eval_word(word));
      const Word nf = normalize(word);
      const auto [it, fresh] = nf_of_element.emplace(key, nf);
      ASSERT_EQ(it->second, nf) << format_word(word);
      const auto [jt, fresh_nf] = element_of_nf.emplace(nf, key);
      ASSERT_EQ(jt->second, key) << format_word(word);
      if (len < 4)
        for (const Letter& l : alphabet) {
          next.push_back(word);
          next.back().push_back(l);
        }
    }
    layer = std::move(next);
  }
  EXPECT_EQ(nf_of_element.size(), element_of_nf.size());
}

TEST(NormalizeTest, Deterministic) {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 50; ++n) {
    const Word word = testing::random_word(rng, 25, 6);
    ASSERT_EQ(normalize(word), normalize(word));
  }
}

TEST(NormalizeTest, StepLimit) {
  const Word word = w("y3^-1 x2^-1 y1^-1 x0 y0^-1 x4 y2^-1");
  EXPECT_NO_THROW(normalize(word));
  try {
    normalize(word, 3);
    FAIL() << "expected StepLimitExceeded";
  } catch (const StepLimitExceeded& e) {
    EXPECT_FALSE(e.partial().empty());
    EXPECT_EQ(eval_word(e.partial()), eval_word(word));
  }
}

TEST(NormalizeTest, EpsilonZeroIsCosetParity) {
  std::mt19937_64 rng(44);
  for (int n = 0; n < 200; ++n) {
    const Word word = testing::random_word(rng, 20, 6);
    const NormalForm nf = to_normal_form_data(normalize(word));
    ASSERT_EQ(nf.epsilon(0) ? 1 : 0, coset_parity(word)) << format_word(word);
  }
}

TEST(NormalizeTest, LongWordsStayFast) {
  std::mt19937_64 rng(45);
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n < 20; ++n) {
    const Word word = testing::random_word(rng, 60, 8);
    ASSERT_EQ(eval_word(normalize(word)), eval_word(word));
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(30));
}

}  // namespace
}  // namespace ftau
