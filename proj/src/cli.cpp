#include "ftau/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "ftau/json_io.hpp"

namespace ftau::cli {

namespace {

using Json = nlohmann::json;
namespace jio = ftau::json;

enum class Format { Text, Json, Tsv };

struct Settings {
  std::uint64_t step_limit = kDefaultStepLimit;
  std::uint32_t max_index = 64;
  Format format = Format::Text;
};

std::string schema(const std::string& command) { return "ftau." + command + "/1"; }

std::string word_text(const Word& w) { return w.empty() ? "1" : format_word(w); }

Word read_word(const std::string& text, const Settings& s) {
  Word w = parse_word(text);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].index > s.max_index) {
      throw DomainError("letter " + std::to_string(p) + " has index " + std::to_string(w[p].index) +
                        " above --max-index " + std::to_string(s.max_index));
    }
  }
  return w;
}

void print_homeo(std::ostream& out, const PLHomeo& f, const Settings& s, const std::string& command) {
  const auto pieces = f.pieces();
  switch (s.format) {
    case Format::Json: {
      Json j = jio::pl_homeo(f);
      j["schema"] = schema(command);
      j["lambda"] = f.slope_exponent_at_zero();
      j["rho"] = f.slope_exponent_at_one();
      out << j.dump() << '\n';
      break;
    }
    case Format::Tsv:
      out << "left\tvalue\tslope_exponent\n";
      for (const auto& p : pieces) out << p.left.format() << '\t' << p.value.format() << '\t' << p.slope_exponent << '\n';
      break;
    case Format::Text:
      for (std::size_t k = 0; k < pieces.size(); ++k) {
        const GoldenInt& right = k + 1 < pieces.size() ? pieces[k + 1].left : GoldenInt::one();
        out << '[' << pieces[k].left.format() << ", " << right.format() << "] value=" << pieces[k].value.format()
            << " slope=t^" << pieces[k].slope_exponent << '\n';
      }
      break;
  }
}

void print_scalar(std::ostream& out, const Settings& s, const std::string& command, const std::string& key,
                  Json value, const std::string& text) {
  if (s.format == Format::Json) {
    out << Json{{"schema", schema(command)}, {key, std::move(value)}}.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

std::string in_out(bool in) { return in ? "in" : "out"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact computations in the golden mean Thompson group F_t", "ftau"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--step-limit", s.step_limit, "Rewrite-step budget for normalization")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-index", s.max_index, "Largest generator index accepted in input words");
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"tsv", Format::Tsv}};
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));

  std::function<void()> action;
  std::string word1, word2, target, family;
  std::string coord_a, coord_b;
  std::optional<std::string> at;
  std::uint32_t index = 0;
  std::uint32_t sigma_n = 0;
  int depth = 2;
  bool on_k = false;
  bool reduce = false;

  auto parse_chi = [&] { return Character{parse_rational(coord_a), parse_rational(coord_b)}; };

  auto* eval_cmd = app.add_subcommand("eval", "Print the PL homeomorphism of a word");
  eval_cmd->add_option("word", word1)->required();
  eval_cmd->add_option("--at", at, "Evaluate at a point of [0, 1] given as a+bt");
  eval_cmd->callback([&] {
    action = [&] {
      const PLHomeo f = eval_word(read_word(word1, s));
      if (!at) return print_homeo(out, f, s, "eval");
      const GoldenInt x = GoldenInt::parse(*at);
      const GoldenInt fx = f(x);
      if (s.format == Format::Json) {
        out << Json{{"schema", schema("eval")}, {"x", jio::golden(x)}, {"value", jio::golden(fx)}}.dump() << '\n';
      } else {
        out << fx.format() << '\n';
      }
    };
  });

  auto* compose_cmd = app.add_subcommand("compose", "Product of two words (first acts first)");
  compose_cmd->add_option("first", word1)->required();
  compose_cmd->add_option("second", word2)->required();
  compose_cmd->callback([&] {
    action = [&] {
      print_homeo(out, compose(eval_word(read_word(word1, s)), eval_word(read_word(word2, s))), s, "compose");
    };
  });

  auto* gen_cmd = app.add_subcommand("gen", "Print the generator x_i or y_i");
  gen_cmd->add_option("family", family)->required()->check(CLI::IsMember({"x", "y"}));
  gen_cmd->add_option("index", index)->required();
  gen_cmd->callback([&] {
    action = [&] {
      if (index > s.max_index) throw DomainError("index above --max-index");
      print_homeo(out, family == "x" ? generator_x(index) : generator_y(index), s, "gen");
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite a word into its normal form");
  normalize_cmd->add_option("word", word1)->required();
  normalize_cmd->callback([&] {
    action = [&] {
      const Word nf = normalize(read_word(word1, s), s.step_limit);
      if (s.format == Format::Json) {
        out << Json{{"schema", schema("normalize")},
                    {"word", format_word(nf)},
                    {"normal_form", jio::normal_form(to_normal_form_data(nf))}}
                   .dump()
            << '\n';
      } else {
        out << word_text(nf) << '\n';
      }
    };
  });

  auto* check_cmd = app.add_subcommand("nf-check", "Check whether a word is in normal form");
  check_cmd->add_option("word", word1)->required();
  check_cmd->callback([&] {
    action = [&] {
      const Word w = read_word(word1, s);
      Json j{{"schema", schema("nf-check")}, {"word", format_word(w)}};
      std::string text;
      try {
        j["normal_form"] = jio::normal_form(to_normal_form_data(w));
        j["normal"] = true;
        text = "normal";
      } catch (const NormalFormError& e) {
        j["normal"] = false;
        j["error"] = {{"position", e.position()}, {"message", e.what()}};
        text = std::string("not normal: ") + e.what();
      }
      if (s.format == Format::Json) {
        out << j.dump() << '\n';
      } else {
        out << text << '\n';
      }
    };
  });

  auto* char_cmd = app.add_subcommand("char", "Evaluate a*lambda + b*rho on a word");
  char_cmd->add_option("a", coord_a)->required();
  char_cmd->add_option("b", coord_b)->required();
  char_cmd->add_option("word", word1)->required();
  char_cmd->callback([&] {
    action = [&] {
      const Rational v = eval_character(parse_chi(), read_word(word1, s));
      print_scalar(out, s, "char", "value", format_rational(v), format_rational(v));
    };
  });

  auto* abel_cmd = app.add_subcommand("abel", "Image in the abelianization Z^2 + Z/2 (basis y0, x1, z)");
  abel_cmd->add_option("word", word1)->required();
  abel_cmd->callback([&] {
    action = [&] {
      const Word w = read_word(word1, s);
      const AbelElt e = abelianize(w);
      if (s.format == Format::Json) {
        out << Json{{"schema", schema("abel")}, {"abel", jio::abel(e)}, {"lambda", lambda_of(w)}, {"rho", rho_of(w)}}
                   .dump()
            << '\n';
      } else {
        out << '(' << e.u << ", " << e.v << ", " << (e.z ? 1 : 0) << ")\n";
      }
    };
  });

  auto* sigma_cmd = app.add_subcommand("sigma", "Sigma-invariant membership of the class of a*lambda + b*rho");
  sigma_cmd->add_option("a", coord_a)->required();
  sigma_cmd->add_option("b", coord_b)->required();
  sigma_cmd->add_option("--n", sigma_n, "Report Sigma^n for this n >= 1 as well");
  sigma_cmd->add_flag("--on-K", on_k, "Interpret (a, b) as a character of K");
  sigma_cmd->callback([&] {
    action = [&] {
      const Character chi = parse_chi();
      const CharacterClass c = class_of(chi);
      auto member = [&](std::uint32_t n) { return on_k ? sigma_membership_K(c, n) : sigma_membership(c, n); };
      const bool s1 = member(1);
      const bool sinf = member(2);
      if (s.format == Format::Json) {
        Json j{{"schema", schema("sigma")},
               {"group", on_k ? "K" : "F_tau"},
               {"class", Json::array({jio::big_int(c.a), jio::big_int(c.b)})},
               {"sigma1", s1},
               {"sigma_infty", sinf},
               {"kernel_type", to_string(kernel_coabelian_type(chi))}};
        if (sigma_n != 0) j["sigma_n"] = {{"n", sigma_n}, {"member", member(sigma_n)}};
        out << j.dump() << '\n';
      } else {
        out << "Sigma1: " << in_out(s1) << "; Sigma_infty: " << in_out(sinf);
        if (sigma_n != 0) out << "; Sigma^" << sigma_n << ": " << in_out(member(sigma_n));
        out << '\n';
      }
    };
  });

  auto* kernel_cmd = app.add_subcommand("kernel-type", "Finiteness type of the kernel of a*lambda + b*rho");
  kernel_cmd->add_option("a", coord_a)->required();
  kernel_cmd->add_option("b", coord_b)->required();
  kernel_cmd->callback([&] {
    action = [&] {
      const std::string t = to_string(kernel_coabelian_type(parse_chi()));
      print_scalar(out, s, "kernel-type", "kernel_type", t, t);
    };
  });

  auto* witness_cmd = app.add_subcommand("witness", "Kernel element with minimal nonzero |lambda|");
  witness_cmd->add_option("a", coord_a)->required();
  witness_cmd->add_option("b", coord_b)->required();
  witness_cmd->callback([&] {
    action = [&] {
      const Word t0 = kernel_witness(parse_chi());
      if (s.format == Format::Json) {
        out << Json{{"schema", schema("witness")},
                    {"word", format_word(t0)},
                    {"lambda", lambda_of(t0)},
                    {"rho", rho_of(t0)}}
                   .dump()
            << '\n';
      } else {
        out << word_text(t0) << '\n';
      }
    };
  });

  auto* coset_cmd = app.add_subcommand("coset", "Coset of K containing the word");
  coset_cmd->add_option("word", word1)->required();
  coset_cmd->callback([&] {
    action = [&] {
      const std::string c = coset_of(read_word(word1, s)) == Coset::K ? "K" : "y0K";
      print_scalar(out, s, "coset", "coset", c, c);
    };
  });

  auto* hnn_cmd = app.add_subcommand("hnn", "Rewrite a word of K as x0^a core x0^-b");
  hnn_cmd->add_option("word", word1)->required();
  hnn_cmd->add_flag("--reduce", reduce, "Apply Britton reduction afterwards");
  hnn_cmd->callback([&] {
    action = [&] {
      HnnForm h = hnn_rewrite(read_word(word1, s));
      if (reduce) h = hnn_reduce(h, s.step_limit);
      if (s.format == Format::Json) {
        Json j = jio::hnn(h);
        j["schema"] = schema("hnn");
        out << j.dump() << '\n';
      } else {
        out << format_hnn(h) << '\n';
      }
    };
  });

  int exit_code = kOk;
  auto* member_cmd = app.add_subcommand("member", "Membership in K or in F_tau[m]");
  member_cmd->add_option("word", word1)->required();
  member_cmd->add_option("target", target, "K, or a positive integer m for F_tau[m]")->required();
  member_cmd->callback([&] {
    action = [&] {
      const Word w = read_word(word1, s);
      Membership m;
      if (target == "K") {
        m = in_K(w) ? Membership::Yes : Membership::No;
      } else {
        std::uint32_t level = 0;
        try {
          std::size_t used = 0;
          const unsigned long v = std::stoul(target, &used);
          if (used != target.size() || v == 0 || v > UINT32_MAX) throw std::invalid_argument(target);
          level = static_cast<std::uint32_t>(v);
        } catch (const std::logic_error&) {
          throw DomainError("member target must be K or a positive integer, got '" + target + "'");
        }
        m = in_Ftau_m(w, level, s.step_limit);
      }
      print_scalar(out, s, "member", "member", to_string(m), to_string(m));
      if (m == Membership::Unknown) {
        err << "normalization exceeded the step limit of " << s.step_limit << '\n';
        exit_code = kStepLimit;
      }
    };
  });

  auto* plot_cmd = app.add_subcommand("plot-data", "TSV of graph points of the word's homeomorphism");
  plot_cmd->add_option("word", word1)->required();
  plot_cmd->add_option("--depth", depth, "Golden subdivision levels per piece")->check(CLI::Range(0, 12));
  plot_cmd->callback([&] {
    action = [&] {
      const PLHomeo f = eval_word(read_word(word1, s));
      out << "x\tf(x)\tx_decimal\tf(x)_decimal\n";
      for (const auto& [x, fx] : sample_graph(f, depth)) {
        out << x.format() << '\t' << fx.format() << '\t' << x.approx(30) << '\t' << fx.approx(30) << '\n';
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }

  s.format = formats.at(format_name);
  try {
    if (action) action();
  } catch (const StepLimitExceeded& e) {
    err << "error: " << e.what() << "; partial word: " << word_text(e.partial()) << '\n';
    return kStepLimit;
  } catch (const UserError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }
  return exit_code;
}

}  // namespace ftau::cli
