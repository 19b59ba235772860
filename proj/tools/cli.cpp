#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <regex>

#include "aisemi/algebra.hpp"
#include "aisemi/algebra_io.hpp"
#include "aisemi/builtins.hpp"
#include "aisemi/error.hpp"
#include "aisemi/flat.hpp"
#include "aisemi/homomorphism.hpp"
#include "aisemi/identity.hpp"
#include "aisemi/isoterm.hpp"
#include "aisemi/pattern.hpp"
#include "aisemi/satisfaction.hpp"
#include "aisemi/separation.hpp"
#include "aisemi/word.hpp"

namespace aisemi::cli {

namespace {

constexpr const char* kIdentityGrammar =
    "identity := term ('=' | '<=') (term | '0'); term := word ('+' word)*; "
    "word := letters separated by spaces";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FiniteAiSemiring resolve_algebra(const std::string& arg) {
  if (auto b = find_builtin(arg)) return std::move(*b);
  if (!std::filesystem::exists(arg)) {
    std::string names;
    for (auto n : builtin_names()) names += " " + std::string(n);
    throw UsageError("no builtin algebra or file named '" + arg +
                     "' (builtins:" + names + ")");
  }
  try {
    return load_algebra(arg);
  } catch (const Error& e) {
    throw UsageError(arg + ": " + e.what());
  }
}

// wN, wN' (or wpN) and zN stand for the word families when they make up a
// whole argument; anything else is parsed as letters.
Word resolve_word(const std::string& arg, bool split_chars = false) {
  static const std::regex zimin_re(R"(z(\d+))");
  static const std::regex wn_re(R"(w(\d+))");
  static const std::regex wnp_re(R"(w(\d+)'|wp(\d+))");
  std::smatch m;
  try {
    if (std::regex_match(arg, m, zimin_re)) return zimin(std::stoul(m[1]));
    if (std::regex_match(arg, m, wn_re)) return wn(std::stoul(m[1]));
    if (std::regex_match(arg, m, wnp_re)) {
      return wn_prime(std::stoul(m[1].matched ? m[1].str() : m[2].str()));
    }
    return Word::parse(arg, split_chars);
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad word '" + arg + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw UsageError("bad word '" + arg + "': index out of range");
  }
}

std::string format_map(const FiniteAiSemiring& from,
                       const FiniteAiSemiring& to, const Embedding& map) {
  std::string out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ' ';
    out += from.element_name(element(i)) + "->" + to.element_name(map[i]);
  }
  return out;
}

int verdict_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds:
      return kPass;
    case VerdictStatus::fails:
      return kFail;
    case VerdictStatus::inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

void write_file(const std::string& path, const FiniteAiSemiring& s) {
  try {
    save_algebra(path, s);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite additively idempotent semirings: identities, "
               "isoterms and the w_n separation family",
               "aisemi"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  int code = kPass;
  std::function<void()> action;

  // algebra check|show|order
  auto* algebra = app.add_subcommand("algebra", "Inspect an algebra");
  algebra->require_subcommand(1);
  std::string alg_name;
  for (const char* what : {"check", "show", "order"}) {
    auto* sub = algebra->add_subcommand(
        what, std::string(what) == "check" ? "Validate the semiring axioms"
              : std::string(what) == "show"
                  ? "Print the Cayley tables"
                  : "Print the Hasse diagram of the natural order");
    sub->add_option("algebra", alg_name, "Builtin name or table file")
        ->required();
    sub->callback([&, what = std::string(what)] {
      action = [&, what] {
        const FiniteAiSemiring s = resolve_algebra(alg_name);
        if (what == "show") {
          out << format_algebra(s);
          return;
        }
        const ValidationReport rep = validate_axioms(s);
        if (!rep.ok) {
          for (const auto& v : rep.violations) {
            out << "violation: " << describe(s, v) << "\n";
          }
          code = kFail;
          return;
        }
        if (what == "check") {
          out << "ok\n";
        } else {
          out << hasse_diagram(s, natural_order(s));
        }
      };
    });
  }

  // flat build
  auto* flat = app.add_subcommand("flat", "Flat semirings S(W) and M(W)");
  flat->require_subcommand(1);
  auto* flat_build = flat->add_subcommand("build", "Build S(W) or M(W)");
  std::vector<std::string> flat_words;
  bool flat_monoid = false;
  bool flat_split = false;
  std::string flat_out;
  std::string flat_name;
  flat_build->add_option("words", flat_words, "Words of W");
  flat_build->add_flag("--monoid", flat_monoid, "Include the empty word");
  flat_build->add_flag("--split-chars", flat_split,
                       "Treat every character as a letter");
  flat_build->add_option("-o,--output", flat_out, "Write the tables here");
  flat_build->add_option("--name", flat_name, "Algebra name");
  flat_build->callback([&] {
    action = [&] {
      std::vector<Word> words;
      for (const auto& w : flat_words) words.push_back(resolve_word(w, flat_split));
      FlatOptions options;
      options.monoid = flat_monoid;
      options.name = flat_name;
      const FlatSemiring f = build_flat(words, options);
      if (flat_out.empty()) {
        out << format_algebra(f.algebra());
      } else {
        write_file(flat_out, f.algebra());
        out << "wrote " << flat_out << " (" << f.algebra().size()
            << " elements)\n";
      }
    };
  });

  // word zimin|wn|wnprime|free
  auto* word = app.add_subcommand("word", "Word families and freeness");
  word->require_subcommand(1);
  std::size_t word_n = 0;
  for (const char* family : {"zimin", "wn", "wnprime"}) {
    auto* sub = word->add_subcommand(family, std::string("Print ") + family +
                                                 "(N)");
    sub->add_option("N", word_n, "Index")->required()->check(
        CLI::PositiveNumber);
    sub->callback([&, family = std::string(family)] {
      action = [&, family] {
        try {
          const Word w = family == "zimin" ? zimin(word_n)
                         : family == "wn"  ? wn(word_n)
                                           : wn_prime(word_n);
          out << w.str() << "\n";
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      };
    });
  }
  auto* free = word->add_subcommand(
      "free", "Decide whether the target contains a value of the pattern");
  std::string pattern_arg;
  std::string target_arg;
  bool free_monoid = false;
  free->add_option("pattern", pattern_arg, "Pattern word")->required();
  free->add_option("target", target_arg, "Target word")->required();
  free->add_flag("--monoid", free_monoid, "Letters may map to the empty word");
  free->callback([&] {
    action = [&] {
      const Word pattern = resolve_word(pattern_arg);
      const Word target = resolve_word(target_arg);
      PatternOptions options;
      options.monoid_mode = free_monoid;
      options.node_budget = SatOptions::from_environment().node_budget;
      const PatternSearch r = find_embedding_value(pattern, target, options);
      switch (r.status) {
        case MatchStatus::none:
          out << "free\n";
          break;
        case MatchStatus::found: {
          const auto order = letters_by_first_occurrence(pattern);
          out << "contains a value: " << r.match->substitution.str(order)
              << " at positions " << r.match->begin << ".."
              << r.match->begin + r.match->length << "\n";
          code = kFail;
          break;
        }
        case MatchStatus::inconclusive:
          out << "inconclusive: node budget exhausted after " << r.nodes
              << " nodes\n";
          code = kInconclusive;
          break;
      }
    };
  });

  // sat
  auto* sat = app.add_subcommand("sat", "Decide an identity by exhaustive "
                                        "evaluation");
  std::string sat_alg;
  std::string sat_identity;
  SatOptions sat_options = SatOptions::from_environment();
  sat->add_option("algebra", sat_alg, "Builtin name or table file")
      ->required();
  sat->add_option("identity", sat_identity, kIdentityGrammar)->required();
  sat->add_option("--threads", sat_options.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  sat->add_option("--max-assignments", sat_options.max_assignments,
                  "Give up above this many assignments");
  sat->callback([&] {
    action = [&] {
      const FiniteAiSemiring s = resolve_algebra(sat_alg);
      Identity id = [&] {
        try {
          return parse_identity(sat_identity);
        } catch (const ParseError& e) {
          throw UsageError(std::string("parse error ") + e.what() + "\n" +
                           kIdentityGrammar);
        }
      }();
      const Verdict v = satisfies(s, id, sat_options);
      out << format_verdict(v, s) << "\n";
      code = verdict_code(v.status);
    };
  });

  // isoterm
  auto* isoterm = app.add_subcommand(
      "isoterm", "Minimality (exact) or bounded isoterm search");
  std::string iso_alg;
  std::string iso_word;
  bool iso_exact = false;
  std::size_t iso_bound = 0;
  std::size_t iso_summands = 2;
  isoterm->add_option("algebra", iso_alg, "Builtin name or table file")
      ->required();
  isoterm->add_option("word", iso_word, "Word (or wN, wN', zN)")->required();
  auto* exact_flag =
      isoterm->add_flag("--exact", iso_exact, "Decide minimality (default)");
  isoterm->add_option("--bound", iso_bound,
                      "Search terms with words of length <= L instead")
      ->excludes(exact_flag)
      ->check(CLI::PositiveNumber);
  isoterm->add_option("--summands", iso_summands,
                      "Summands per term for --bound (1 or 2)")
      ->check(CLI::Range(1, 2));
  isoterm->callback([&] {
    action = [&] {
      const FiniteAiSemiring s = resolve_algebra(iso_alg);
      const Word w = resolve_word(iso_word);
      if (iso_bound > 0) {
        BoundedIsotermOptions options;
        options.max_length = iso_bound;
        options.max_summands = iso_summands;
        const auto v = is_isoterm_bounded(s, w, options);
        using Status = BoundedIsotermVerdict::Status;
        if (v.status == Status::identity_found) {
          out << "not an isoterm: " << w.str() << " = " << v.partner->str()
              << "\n";
          code = kFail;
        } else if (v.status == Status::inconclusive) {
          out << "inconclusive: " << v.note << "\n";
          code = kInconclusive;
        } else {
          out << "no nontrivial identity found (words up to length "
              << iso_bound << ", up to " << iso_summands << " summands, "
              << v.candidates << " candidates)\n";
        }
        return;
      }
      const MinimalityVerdict v = is_minimal_exact(s, w);
      out << to_string(v.status);
      if (v.witness) {
        out << ": witness " << v.witness->str()
            << (v.reason == MinimalityReason::shares_class
                    ? " (same word function)"
                    : " (lies below it)");
      }
      out << "\n";
      out << "  M2 premise: "
          << (v.m2_premise ? v.m2_route : std::string("not established"))
          << "\n";
      out << "  word classes: " << v.class_count << "\n";
      out << "  dominance scan: " << (v.dominance_exact ? "exact" : "partial")
          << "\n";
      out << "  same-class check: "
          << (v.duplicate_exact ? "exact" : "partial")
          << "; other word of length <= " << v.length_bound << ": "
          << (v.duplicate_within_bound ? "yes" : "no") << "\n";
      if (!v.note.empty()) out << "  note: " << v.note << "\n";
      code = v.status == MinimalityStatus::minimal       ? kPass
             : v.status == MinimalityStatus::not_minimal ? kFail
                                                         : kInconclusive;
    };
  });

  // embed / iso / product
  std::string left_arg;
  std::string right_arg;
  auto* embed = app.add_subcommand("embed", "Find an embedding A -> B");
  std::size_t embed_limit = 1;
  embed->add_option("A", left_arg)->required();
  embed->add_option("B", right_arg)->required();
  embed->add_option("--limit", embed_limit, "Report up to this many")
      ->check(CLI::PositiveNumber);
  embed->callback([&] {
    action = [&] {
      const FiniteAiSemiring a = resolve_algebra(left_arg);
      const FiniteAiSemiring b = resolve_algebra(right_arg);
      EmbeddingSearchOptions options;
      options.limit = embed_limit;
      options.node_budget = SatOptions::from_environment().node_budget;
      const EmbeddingSearch r = find_embeddings(a, b, options);
      for (const auto& m : r.maps) out << format_map(a, b, m) << "\n";
      if (r.maps.empty()) {
        if (r.status == SearchStatus::budget_exceeded) {
          out << "inconclusive: node budget exhausted\n";
          code = kInconclusive;
        } else {
          out << "no embedding\n";
          code = kFail;
        }
      }
    };
  });

  auto* iso = app.add_subcommand("iso", "Decide whether A and B are "
                                        "isomorphic");
  iso->add_option("A", left_arg)->required();
  iso->add_option("B", right_arg)->required();
  iso->callback([&] {
    action = [&] {
      const FiniteAiSemiring a = resolve_algebra(left_arg);
      const FiniteAiSemiring b = resolve_algebra(right_arg);
      const IsomorphismSearch r = find_isomorphism(
          a, b, SatOptions::from_environment().node_budget);
      if (r.map) {
        out << "isomorphic: " << format_map(a, b, *r.map) << "\n";
      } else if (r.status == SearchStatus::budget_exceeded) {
        out << "inconclusive: node budget exhausted\n";
        code = kInconclusive;
      } else {
        out << "not isomorphic\n";
        code = kFail;
      }
    };
  });

  auto* product = app.add_subcommand("product", "Write the direct product "
                                                "A x B");
  std::string product_out;
  std::size_t product_cap = kDefaultProductCap;
  product->add_option("A", left_arg)->required();
  product->add_option("B", right_arg)->required();
  product->add_option("-o,--output", product_out, "Output file")->required();
  product->add_option("--cap", product_cap, "Largest allowed product");
  product->callback([&] {
    action = [&] {
      const FiniteAiSemiring p = direct_product(
          resolve_algebra(left_arg), resolve_algebra(right_arg), product_cap);
      write_file(product_out, p);
      out << "wrote " << product_out << " (" << p.size() << " elements)\n";
    };
  });

  // certify
  auto* certify = app.add_subcommand(
      "certify", "Check the sufficient condition for every w_n to be an "
                 "isoterm");
  std::string cert_alg;
  certify->add_option("algebra", cert_alg)->required();
  certify->callback([&] {
    action = [&] {
      const Certificate c = certify_wn_isoterms(resolve_algebra(cert_alg));
      out << c.report();
      code = c.issued ? kPass : c.inconclusive ? kInconclusive : kFail;
    };
  });

  // reproduce
  auto* repro = app.add_subcommand(
      "reproduce", "Run the full check list for the separation argument");
  ReproduceOptions repro_options;
  std::string summary_path;
  std::string s7_path;
  bool with_timing = false;
  repro->add_option("--max-n", repro_options.max_n, "Scale N")
      ->check(CLI::Range(1, 8));
  repro->add_option("--threads", repro_options.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  repro->add_option("--summary", summary_path,
                    "Write a tab-separated summary here");
  repro->add_option("--samples", repro_options.samples,
                    "Assignments for the sampled product check");
  repro->add_option("--seed", repro_options.seed, "Sampling seed");
  repro->add_option("--s7", s7_path,
                    "Use this table in place of S7 (failure injection)");
  repro->add_flag("--timing", with_timing, "Show runtimes in the report");
  repro->callback([&] {
    action = [&] {
      if (!s7_path.empty()) repro_options.s7_override = resolve_algebra(s7_path);
      const Reproduction r = reproduce(repro_options);
      out << r.text(with_timing);
      if (!summary_path.empty()) {
        std::ofstream f(summary_path);
        if (!f) throw UsageError(summary_path + ": cannot open for writing");
        f << r.summary();
      }
      code = r.all_pass ? kPass : kFail;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n"
        << "run 'aisemi --help' for the command list\n";
    return kUsage;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardError& e) {
    out << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace aisemi::cli
