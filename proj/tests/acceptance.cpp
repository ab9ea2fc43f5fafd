// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "ftau/characters.hpp"
#include "ftau/golden_int.hpp"
#include "ftau/pl_homeo.hpp"
#include "ftau/sigma.hpp"
#include "ftau/subgroups.hpp"
#include "ftau/words.hpp"
#include "support.hpp"

using namespace ftau;

namespace {

// A criterion returns an empty string on success, a failure detail otherwise.
using Check = std::function<std::string()>;

struct Criterion {
  int id;
  std::string name;
  Check check;
  double time_limit_s;  // 0 for none
};

#define REQUIRE(cond, detail)          \
  do {                                 \
    if (!(cond)) {                     \
      std::ostringstream os_;          \
      os_ << detail;                   \
      return os_.str();                \
    }                                  \
  } while (false)

std::string relations() {
  const auto rels = relations_up_to(8);
  REQUIRE(rels.size() == 153, "expected 153 relation pairs, got " << rels.size());
  for (const auto& [l, r] : rels) {
    REQUIRE(eval_word(l) == eval_word(r), format_word(l) << " != " << format_word(r));
  }
  return {};
}

std::string generator_facts() {
  REQUIRE(generator_x(0).slope_exponent_at_zero() == -2, "x0 slope at 0");
  for (std::uint32_t i = 0; i <= 8; ++i) {
    REQUIRE(generator_x(i).slope_exponent_at_one() == 1, "x" << i << " slope at 1");
    REQUIRE(generator_y(i).slope_exponent_at_one() == 1, "y" << i << " slope at 1");
  }
  return {};
}

std::string character_homomorphism() {
  std::mt19937_64 rng(1001);
  for (int n = 0; n < 1000; ++n) {
    const Word w = testing::random_word(rng, 30, 6);
    const PLHomeo f = eval_word(w);
    REQUIRE(lambda_of(w) == f.slope_exponent_at_zero(), "lambda on " << format_word(w));
    REQUIRE(rho_of(w) == f.slope_exponent_at_one(), "rho on " << format_word(w));
  }
  return {};
}

std::string normal_forms() {
  std::mt19937_64 rng(1002);
  for (int n = 0; n < 500; ++n) {
    const Word w = testing::random_word(rng, 30, 6);
    const Word nf = normalize(w);  // throws on step-limit exhaustion
    REQUIRE(is_normal_form(nf), "not normal: " << format_word(nf));
    REQUIRE(eval_word(nf) == eval_word(w), "element changed for " << format_word(w));
  }
  for (int n = 0; n < 500; ++n) {
    const Word w = testing::random_word(rng, 20, 6);
    const Word other = testing::perturb(w, rng, 6);
    REQUIRE(eval_word(other) == eval_word(w), "perturbation changed the element");
    REQUIRE(normalize(other) == normalize(w), format_word(w) << " vs " << format_word(other));
  }
  return {};
}

std::string nu_automorphism() {
  REQUIRE(nu(testing::li_f()) == testing::li_g(), "nu(f) != g");
  std::mt19937_64 rng(1005);
  for (int n = 0; n < 200; ++n) {
    const PLHomeo f = testing::random_element(rng, 20, 6);
    REQUIRE(nu(nu(f)) == f, "nu^2 != id");
    REQUIRE(nu(f).slope_exponent_at_zero() == f.slope_exponent_at_one(), "lambda(nu f) != rho(f)");
  }
  return {};
}

std::string coset_structure() {
  std::mt19937_64 rng(1006);
  for (int n = 0; n < 500; ++n) {
    const Word w = testing::random_word(rng, 20, 6);
    REQUIRE(coset_parity(testing::perturb(w, rng, 6)) == coset_parity(w), "parity moved: " << format_word(w));
  }
  for (int n = 0; n < 200; ++n) {
    const Word w = testing::random_word(rng, 20, 6);
    const int p = coset_parity(w);
    const int q = coset_parity(concat(parse_word("y0"), w));
    REQUIRE((p == 0) != (q == 0), "both or neither of w, y0 w in K: " << format_word(w));
    REQUIRE(to_normal_form_data(normalize(w)).epsilon(0) == (p == 1), "epsilon_0 mismatch: " << format_word(w));
  }
  return {};
}

std::string hnn() {
  std::mt19937_64 rng(1007);
  for (int n = 0; n < 500; ++n) {
    const Word w = testing::random_word(rng, 40, 6, false);
    const PLHomeo f = eval_word(w);
    const HnnForm h = hnn_rewrite(w);
    const HnnForm r = hnn_reduce(h);
    for (const HnnForm* form : {&h, &r}) {
      REQUIRE(eval_word(form->to_word()) == f, "element changed for " << format_word(w));
      for (const auto& l : form->core) REQUIRE(l.index != 0, "index-0 letter in core of " << format_word(w));
    }
  }
  return {};
}

std::string character_lift() {
  REQUIRE(lift_from_K(restrict_to_K(Character::lambda())) == Character::lambda(), "e(lambda|K) != lambda");
  REQUIRE(lift_from_K(restrict_to_K(Character::rho())) == Character::rho(), "e(rho|K) != rho");
  const Word x0x1 = parse_word("x0 x1");
  const Word y0 = parse_word("y0");
  for (int i = -10; i <= 10; ++i) {
    for (int j = -10; j <= 10; ++j) {
      const CharacterOnK psi{Rational(i, 3), Rational(j, 7)};
      const Character chi = lift_from_K(psi);
      REQUIRE(restrict_to_K(chi) == psi, "restrict(lift) != id at " << i << "," << j);
      REQUIRE(eval_character(chi, y0) == eval_character(psi, x0x1) / 2, "e(psi)(y0) at " << i << "," << j);
    }
  }
  return {};
}

std::string sigma_oracle() {
  for (std::uint32_t n : {1u, 2u, 10u}) {
    REQUIRE(sigma_membership({1, 0}, n) && sigma_membership({0, 1}, n), "[lambda], [rho] not in Sigma^" << n);
  }
  REQUIRE(!sigma_membership({-1, 0}, 1) && !sigma_membership({0, -1}, 1), "[-lambda] or [-rho] in Sigma^1");
  REQUIRE(sigma_membership({-1, -1}, 1) && !sigma_membership({-1, -1}, 2), "(-1,-1) not in Sigma^1 minus Sigma^2");
  std::mt19937_64 rng(1009);
  std::uniform_int_distribution<long> coef(-40, 40);
  for (int k = 0; k < 200;) {
    const long a = coef(rng), b = coef(rng);
    if (a == 0 && b == 0) continue;
    ++k;
    const CharacterClass c = make_class(a, b);
    const CharacterClass flipped{c.b, c.a};
    for (std::uint32_t n = 1; n <= 8; ++n) {
      REQUIRE(sigma_membership(c, n + 1) <= sigma_membership(c, n), "chain fails at " << format_class(c));
      REQUIRE(sigma_membership(c, n) == sigma_membership(flipped, n), "nu-symmetry fails at " << format_class(c));
    }
  }
  for (int i = -6; i <= 6; ++i) {
    for (int j = -6; j <= 6; ++j) {
      if (i == 0 && j == 0) continue;
      const Character chi{Rational(i, 5), Rational(j, 2)};
      const int s = i * j;
      const KernelType expected = s < 0 ? KernelType::F_INFTY : s > 0 ? KernelType::FG_NOT_FP2 : KernelType::NOT_FG;
      REQUIRE(kernel_coabelian_type(chi) == expected, "kernel type at " << format_character(chi));
    }
  }
  return {};
}

std::string kernel_witnesses() {
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<long> num(-7, 7);
  std::uniform_int_distribution<long> den(1, 6);
  for (int k = 0; k < 50;) {
    const Character chi{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (chi.a == 0 || chi.b == 0) continue;
    ++k;
    const Word t0 = kernel_witness(chi);
    REQUIRE(eval_character(chi, t0) == 0, "chi(t0) != 0 for " << format_character(chi));
    REQUIRE(lambda_of(t0) != 0, "lambda(t0) = 0 for " << format_character(chi));
    const CharacterClass c = class_of(chi);
    const long A = c.a.convert_to<long>(), B = c.b.convert_to<long>();
    long best = 0;
    for (long p = -50; p <= 50; ++p)
      for (long q = -50; q <= 50; ++q)
        if (p != 0 && A * p + B * q == 0 && (best == 0 || std::abs(p) < best)) best = std::abs(p);
    REQUIRE(std::abs(lambda_of(t0)) == best, "|lambda(t0)| = " << lambda_of(t0) << ", lattice minimum " << best);
  }
  return {};
}

std::string golden_ring() {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  std::mt19937_64 rng(1011);
  std::uniform_int_distribution<long> small(-1000000, 1000000);
  auto random_golden = [&] { return GoldenInt(small(rng), small(rng)); };
  for (int n = 0; n < 10000; ++n) {
    const GoldenInt x = random_golden(), y = random_golden(), z = random_golden();
    REQUIRE((x + y) + z == x + (y + z), "additive associativity");
    REQUIRE(x + y == y + x, "additive commutativity");
    REQUIRE((x * y) * z == x * (y * z), "multiplicative associativity");
    REQUIRE(x * y == y * x, "multiplicative commutativity");
    REQUIRE(x * (y + z) == x * y + x * z, "distributivity");
    REQUIRE(x + GoldenInt::zero() == x && x * GoldenInt::one() == x, "identities");
    REQUIRE(x + (-x) == GoldenInt::zero(), "additive inverse");
  }
  for (int m = -30; m <= 30; ++m)
    for (int n = -30; n <= 30; ++n)
      REQUIRE(GoldenInt::tau_pow(m) * GoldenInt::tau_pow(n) == GoldenInt::tau_pow(m + n), "tau_pow " << m << "," << n);
  const Decimal tau = (boost::multiprecision::sqrt(Decimal(5)) - 1) / 2;
  std::uniform_int_distribution<long> big(-1000000000, 1000000000);
  for (int n = 0; n < 10000; ++n) {
    const long a = big(rng), b = big(rng);
    const Decimal v = Decimal(a) + Decimal(b) * tau;
    const int expected = v > 0 ? 1 : (v < 0 ? -1 : 0);
    REQUIRE(GoldenInt(a, b).sign() == expected, "sign of " << a << "+" << b << "t");
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "relations up to index 8 hold exactly", relations, 5.0},
      {2, "generator boundary slopes", generator_facts, 0},
      {3, "lambda and rho are the boundary slope exponents", character_homomorphism, 0},
      {4, "normal form soundness and uniqueness", normal_forms, 60.0},
      {5, "nu automorphism", nu_automorphism, 0},
      {6, "coset structure of K", coset_structure, 0},
      {7, "HNN rewriting preserves elements", hnn, 0},
      {8, "character lift from K", character_lift, 0},
      {9, "Sigma oracle", sigma_oracle, 0},
      {10, "kernel witnesses are minimal", kernel_witnesses, 0},
      {11, "golden ring arithmetic", golden_ring, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      detail = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.time_limit_s) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
    std::cout << (detail.empty() ? "PASS" : "FAIL") << "  AC" << c.id << "  " << c.name << "  (" << timing << ")";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << '\n';
    failures += detail.empty() ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
