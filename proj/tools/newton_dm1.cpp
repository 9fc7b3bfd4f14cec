// newton-dm1: words, Newton polygons, specialization chains, and the
// exhaustive verification campaigns, from the command line.
//
// Exit codes: 0 success; 1 parse or usage error; 2 precondition violated;
// 3 internal invariant violation or verification counterexamples.

#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dm1/campaigns.hpp"
#include "dm1/json_io.hpp"
#include "dm1/moves.hpp"
#include "dm1/newton.hpp"
#include "dm1/specialization.hpp"
#include "dm1/word.hpp"

namespace {

using namespace dm1;

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  const size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw parse_error("cannot parse \"" + text + "\" as a rational p/q");
  }
}

std::string render_word_text(const Word& w) {
  const FVPermutation p = fv_permutation(w);
  std::ostringstream pos_row, bit_row;
  pos_row << "positions";
  bit_row << "word     ";
  for (int i = 0; i < w.size(); ++i) {
    const std::string label = std::to_string(i + 1);
    pos_row << ' ' << label;
    bit_row << ' ' << std::string(label.size() - 1, ' ') << (w.one_at(i) ? '1' : '0');
  }
  std::ostringstream f_row, v_row;
  for (int i = 0; i < w.size(); ++i) {
    std::ostringstream& row = w.one_at(i) ? v_row : f_row;
    row << ' ' << (i + 1) << "->" << (p.succ[static_cast<size_t>(i)] + 1);
  }
  std::ostringstream out;
  out << pos_row.str() << "\n" << bit_row.str() << "\n";
  out << "F        " << (f_row.str().empty() ? " (none)" : f_row.str()) << "\n";
  out << "V^-1     " << (v_row.str().empty() ? " (none)" : v_row.str()) << "\n";
  for (const CyclicWord& c : cycle_decomposition(w)) {
    out << "cycle    (";
    // Traverse in arrow order starting from the smallest position.
    int cur = c.positions.front();
    for (size_t k = 0; k < c.positions.size(); ++k) {
      if (k > 0) out << ' ';
      out << cur + 1;
      cur = p.succ[static_cast<size_t>(cur)];
    }
    out << ") = " << c.word.str() << "\n";
  }
  return out.str();
}

std::string render_word_dot(const Word& w) {
  const FVPermutation p = fv_permutation(w);
  std::ostringstream out;
  out << "digraph fv {\n  rankdir=LR;\n";
  for (int i = 0; i < w.size(); ++i) {
    out << "  p" << (i + 1) << " [label=\"" << (i + 1) << ":" << (w.one_at(i) ? '1' : '0')
        << "\"];\n";
  }
  for (int i = 0; i < w.size(); ++i) {
    out << "  p" << (i + 1) << " -> p" << (p.succ[static_cast<size_t>(i)] + 1) << " [label=\""
        << (w.one_at(i) ? "V^-1" : "F") << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DM1 words, Newton polygons, and verified specialization chains"};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- word ----
  CLI::App* word_cmd = app.add_subcommand("word", "operations on 0/1 words");
  word_cmd->require_subcommand(1);
  std::string word_arg;
  std::vector<std::string> word_args;
  bool dot = false;

  CLI::App* w_show = word_cmd->add_subcommand("show", "print the (F, V^-1) diagram");
  w_show->add_option("word", word_arg, "0/1 word")->required();
  w_show->add_flag("--dot", dot, "emit a Graphviz digraph");
  w_show->callback([&] {
    action = [&] {
      const Word w = Word::parse(word_arg);
      std::cout << (dot ? render_word_dot(w) : render_word_text(w));
      return 0;
    };
  });

  CLI::App* w_sum = word_cmd->add_subcommand("sum", "direct sum (merge) of words");
  w_sum->add_option("words", word_args, "two or more 0/1 words")->expected(-2);
  w_sum->callback([&] {
    action = [&] {
      std::vector<Word> parts;
      for (const std::string& s : word_args) parts.push_back(Word::parse(s));
      std::cout << direct_sum(parts).str() << "\n";
      return 0;
    };
  });

  CLI::App* w_minus = word_cmd->add_subcommand("minus", "swap the leftmost \"01\" to \"10\"");
  w_minus->add_option("word", word_arg, "0/1 word")->required();
  w_minus->callback([&] {
    action = [&] {
      std::cout << minus(Word::parse(word_arg)).str() << "\n";
      return 0;
    };
  });

  CLI::App* w_cycles = word_cmd->add_subcommand("cycles", "indecomposable summands");
  w_cycles->add_option("word", word_arg, "0/1 word")->required();
  w_cycles->callback([&] {
    action = [&] {
      for (const CyclicWord& c : cycle_decomposition(Word::parse(word_arg))) {
        std::cout << c.word.str() << "\n";
      }
      return 0;
    };
  });

  CLI::App* w_ell = word_cmd->add_subcommand("ell", "number of inversions ell(w)");
  w_ell->add_option("word", word_arg, "0/1 word")->required();
  w_ell->callback([&] {
    action = [&] {
      std::cout << length_ell(Word::parse(word_arg)) << "\n";
      return 0;
    };
  });

  CLI::App* w_dual = word_cmd->add_subcommand("dual", "reverse and flip");
  w_dual->add_option("word", word_arg, "0/1 word")->required();
  w_dual->callback([&] {
    action = [&] {
      std::cout << dual(Word::parse(word_arg)).str() << "\n";
      return 0;
    };
  });

  // ---- np ----
  CLI::App* np_cmd = app.add_subcommand("np", "operations on Newton polygons");
  np_cmd->require_subcommand(1);
  std::string np_a, np_b, x_arg;
  long long enum_h = 0, enum_d = 0;

  CLI::App* np_eval = np_cmd->add_subcommand("eval", "value of the graph at x");
  np_eval->add_option("polygon", np_a, "polygon, e.g. \"(3,5)+(3,2)\"")->required();
  np_eval->add_option("x", x_arg, "abscissa (integer or p/q)")->required();
  np_eval->callback([&] {
    action = [&] {
      std::cout << format_rational(parse_np(np_a).eval(parse_rational(x_arg))) << "\n";
      return 0;
    };
  });

  CLI::App* np_c = np_cmd->add_subcommand("c", "c(zeta, xi) = twice the area between");
  np_c->add_option("zeta", np_a, "upper polygon")->required();
  np_c->add_option("xi", np_b, "lower polygon")->required();
  np_c->callback([&] {
    action = [&] {
      std::cout << c_value(parse_np(np_a), parse_np(np_b)) << "\n";
      return 0;
    };
  });

  CLI::App* np_sat = np_cmd->add_subcommand("saturated", "no polygon strictly between");
  np_sat->add_option("zeta", np_a, "upper polygon")->required();
  np_sat->add_option("xi", np_b, "lower polygon")->required();
  np_sat->callback([&] {
    action = [&] {
      std::cout << (is_saturated(parse_np(np_a), parse_np(np_b)) ? "true" : "false") << "\n";
      return 0;
    };
  });

  CLI::App* np_enum = np_cmd->add_subcommand("enumerate", "all polygons from (0,0) to (h,d)");
  np_enum->add_option("height", enum_h, "height")->required();
  np_enum->add_option("dim", enum_d, "dimension")->required();
  np_enum->callback([&] {
    action = [&] {
      for (const NewtonPolygon& np : enumerate_nps(enum_h, enum_d)) {
        std::cout << format_np(np) << "\n";
      }
      return 0;
    };
  });

  CLI::App* np_minword = np_cmd->add_subcommand("minword", "minimal word of the class");
  np_minword->add_option("polygon", np_a, "polygon")->required();
  np_minword->callback([&] {
    action = [&] {
      std::cout << minimal_word(parse_np(np_a)).str() << "\n";
      return 0;
    };
  });

  // ---- chain ----
  CLI::App* chain_cmd = app.add_subcommand("chain", "specialization chain from zeta up to xi");
  std::string chain_zeta, chain_xi;
  bool chain_json = false, chain_verify = false;
  chain_cmd->add_option("zeta", chain_zeta, "upper (more special) polygon")->required();
  chain_cmd->add_option("xi", chain_xi, "lower (more generic) polygon")->required();
  chain_cmd->add_flag("--json", chain_json, "emit the chain with witnesses as JSON");
  chain_cmd->add_flag("--verify", chain_verify, "re-verify the chain and fail loudly");
  chain_cmd->callback([&] {
    action = [&] {
      const Chain ch = chain_general(parse_np(chain_zeta), parse_np(chain_xi));
      if (chain_verify) {
        const CheckResult vc = verify_chain(ch);
        if (!vc.ok) {
          std::cerr << "chain verification failed: " << vc.reason << "\n";
          return 3;
        }
      }
      if (chain_json) {
        std::cout << chain_to_json(ch).dump(2) << "\n";
      } else {
        std::cout << "method " << method_name(ch.method) << "\n";
        std::cout << "c " << c_value(ch.zeta, ch.xi) << "\n";
        for (const Word& w : ch.words) std::cout << w.str() << "\n";
      }
      return 0;
    };
  });

  // ---- verify ----
  CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive verification campaigns");
  std::string campaign;
  long long hmax = -1;
  uint64_t seed = kAlgebraSeed;
  int jobs = 0;
  bool verify_json = false;
  verify_cmd
      ->add_option("campaign", campaign,
                   "one of: theorem, prop4, props123, dimension, axioms, order, lemma42, algebra")
      ->required();
  verify_cmd->add_option("--hmax", hmax, "height bound (lemma42: coordinate bound)");
  verify_cmd->add_option("--seed", seed, "seed for the randomized algebra checks");
  verify_cmd->add_option("--jobs", jobs, "worker threads (default: NEWTON_DM1_JOBS or hardware)");
  verify_cmd->add_flag("--json", verify_json, "emit the report as JSON");
  verify_cmd->callback([&] {
    action = [&] {
      struct Bounds {
        long long def;
        long long cap;
      };
      const std::map<std::string, Bounds> bounds{
          {"theorem", {kPolygonHmax, kPolygonHmax}}, {"prop4", {kPolygonHmax, kPolygonHmax}},
          {"props123", {kPolygonHmax, kPolygonHmax}}, {"dimension", {kPolygonHmax, kPolygonHmax}},
          {"axioms", {kWordHmax, kWordHmax}},        {"order", {9, kWordHmax}},
          {"lemma42", {8, 10}},                      {"algebra", {0, 0}},
      };
      const auto it = bounds.find(campaign);
      if (it == bounds.end()) {
        std::cerr << "unknown campaign \"" << campaign << "\"\n";
        return 1;
      }
      if (hmax < 0) hmax = it->second.def;
      if (campaign != "algebra" && (hmax < 1 || hmax > it->second.cap)) {
        std::cerr << "--hmax for " << campaign << " must be in [1, " << it->second.cap << "]\n";
        return 1;
      }
      Report r;
      if (campaign == "theorem") {
        r = verify_theorem_campaign(hmax, jobs);
      } else if (campaign == "prop4") {
        r = verify_prop4_campaign(hmax, jobs);
      } else if (campaign == "props123") {
        r = verify_props123_campaign(hmax);
      } else if (campaign == "dimension") {
        r = verify_dimension_campaign(hmax);
      } else if (campaign == "axioms") {
        r = verify_axioms_campaign(hmax);
      } else if (campaign == "order") {
        r = verify_order_campaign(hmax);
      } else if (campaign == "lemma42") {
        r = verify_lemma42_campaign(hmax);
      } else {
        r = verify_algebra_campaign(seed);
      }
      if (verify_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
      } else {
        std::cout << report_text(r);
      }
      return r.ok() ? 0 : 3;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return action();
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
