#pragma once

// The upword command line. run() takes its streams as arguments so tests can
// drive it in-process; main.cpp only forwards to it.
//
// Exit codes: 0 success / universal / feasible / results found,
//             1 not universal / refuted / empty search,
//             2 usage or input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "upword/json.hpp"
#include "upword/upword.hpp"

namespace upword::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

struct Fixture {
  int a;
  int n;
  const char* word;
};

// Words from the literature used as smoke-test inputs.
inline const std::vector<Fixture>& seed_examples() {
  static const std::vector<Fixture> fixtures = {
      {2, 3, "**0111"},
      {2, 3, "*001011*"},
      {2, 3, "0001011100"},
      {2, 3, "0010111000"},
      {2, 3, "1011100010"},
      {2, 4, "01*110*001*"},
      {2, 4, "001*110*001"},
      {4, 4,
       "001*110*003*112*021*130*023*132*201*310*203*312*221*330*223*332*001"},
  };
  return fixtures;
}

namespace detail {

inline std::string read_word_arg(const std::string& text, std::istream& in) {
  if (text != "-") {
    return text;
  }
  std::string line;
  std::getline(in, line);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError("no word on standard input");
  }
  const auto last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

inline std::string yes_no(bool v) { return v ? "yes" : "no"; }

inline std::string join_rules(const FeasibilityVerdict& v) {
  std::string out;
  for (const FiredRule& f : v.fired) {
    out += (out.empty() ? "" : ", ") + std::string(rule_id(f.rule));
  }
  return out.empty() ? "none" : out;
}

inline std::string rank_text(Rank r, const WordContext& ctx, bool expand) {
  return expand ? format_partial_word(word_unrank(r, ctx)) : std::to_string(r);
}

inline bool env_allows_over_budget() {
  const char* v = std::getenv("UPWORD_ALLOW_OVER_BUDGET");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal partial words: verify, analyze, construct and search.", "upword"};
  app.set_version_flag("--version", "upword 1.0.0");

  std::string format = "text";
  bool expand_ranks = false;
  bool seed = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--expand-ranks", expand_ranks, "Print word ranks as encoded words");
  app.add_flag("--seed-examples", seed, "Print the built-in fixture words and exit");
  app.require_subcommand(0, 1);
  // Global flags may also follow the subcommand.
  app.fallthrough();

  int a = 0;
  int n = 0;
  std::string word_text;

  auto* verify_cmd = app.add_subcommand("verify", "Check that a partial word is universal for A^n");
  verify_cmd->add_option("-a,--alphabet", a, "Alphabet size")->required()->check(CLI::Range(2, 36));
  verify_cmd->add_option("-n", n, "Window length")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("-w,--word", word_text, "Partial word ('-' reads standard input)")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Frame, diamondicity, borders and rule checks");
  analyze_cmd->add_option("-a,--alphabet", a, "Alphabet size")->required()->check(CLI::Range(2, 36));
  analyze_cmd->add_option("-n", n, "Window length")->required()->check(CLI::PositiveNumber);
  analyze_cmd->add_option("-w,--word", word_text, "Partial word ('-' reads standard input)")->required();

  std::optional<int> d_opt;
  bool assume_pseudocyclic = false;
  auto* feasible_cmd = app.add_subcommand("feasible", "Apply the parameter rules to (a, n[, d])");
  feasible_cmd->add_option("-a,--alphabet", a, "Alphabet size")->required()->check(CLI::Range(2, 36));
  feasible_cmd->add_option("-n", n, "Window length")->required()->check(CLI::PositiveNumber);
  feasible_cmd->add_option("-d", d_opt, "Diamondicity");
  feasible_cmd->add_flag("--assume-pseudocyclic", assume_pseudocyclic,
                         "Apply the pseudocyclic-only rules (automatic for a >= 3)");

  auto* n4_cmd = app.add_subcommand("construct-n4", "The n = 4 construction for even a");
  n4_cmd->add_option("-a,--alphabet", a, "Even alphabet size")->required()->check(CLI::Range(2, 36));

  auto* db_cmd = app.add_subcommand("debruijn", "Lexicographically least de Bruijn sequence");
  db_cmd->add_option("-a,--alphabet", a, "Alphabet size")->required()->check(CLI::Range(2, 36));
  db_cmd->add_option("-n", n, "Window length")->required()->check(CLI::PositiveNumber);

  auto* uw_cmd = app.add_subcommand("universal-word", "Linear universal word from the de Bruijn sequence");
  uw_cmd->add_option("-a,--alphabet", a, "Alphabet size")->required()->check(CLI::Range(2, 36));
  uw_cmd->add_option("-n", n, "Window length")->required()->check(CLI::PositiveNumber);

  SearchConfig cfg;
  std::optional<std::size_t> max_length;
  std::optional<std::size_t> limit;
  std::string frame_text;
  bool allow_over_budget = false;
  auto* search_cmd = app.add_subcommand("search", "Enumerate universal partial words");
  search_cmd->add_option("-a,--alphabet", a, "Alphabet size")->required()->check(CLI::Range(2, 36));
  search_cmd->add_option("-n", n, "Window length")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-length", max_length, "Longest word considered");
  search_cmd->add_option("--min-diamonds", cfg.min_diamonds, "Fewest diamonds in an emitted word");
  search_cmd->add_flag("--nontrivial", cfg.require_nontrivial, "Skip words with no diamonds or only diamonds");
  search_cmd->add_option("--frame", frame_text, "Exact frame over {_, *}");
  search_cmd->add_flag("--prune", cfg.use_structure_pruning, "Enable structural pruning");
  search_cmd->add_flag("--canonical", cfg.canonicalize, "One word per relabeling/reversal orbit");
  search_cmd->add_option("--limit", limit, "Stop after this many words");
  search_cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  search_cmd->add_option("--budget", cfg.budget, "Node estimate above which the search is refused")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search_cmd->add_flag("--allow-over-budget", allow_over_budget,
                       "Run even when the estimate exceeds the budget (also UPWORD_ALLOW_OVER_BUDGET=1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const bool json = format == "json";
  const auto emit_json = [&](const nlohmann::json& doc) { out << doc.dump(2) << '\n'; };

  try {
    if (seed) {
      if (json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const Fixture& f : seed_examples()) {
          doc.push_back({{"alphabet", f.a}, {"n", f.n}, {"word", f.word}});
        }
        emit_json(doc);
      } else {
        for (const Fixture& f : seed_examples()) {
          out << f.a << ' ' << f.n << ' ' << f.word << '\n';
        }
      }
      return kOk;
    }
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kUsage;
    }

    if (verify_cmd->parsed()) {
      const WordContext ctx(Alphabet(a), n);
      const PartialWord w = parse_partial_word(detail::read_word_arg(word_text, in), ctx.alphabet());
      // Full accounting so the diagnostics are complete even when the
      // length alone decides.
      const CoverageReport r = verify(w, ctx, VerifyOptions{.fast_reject = false});
      const FeasibilityVerdict rules = word_rules(w, ctx);
      if (json) {
        emit_json(report_json(w, ctx, r, rules, JsonOptions{.expand_ranks = expand_ranks}));
      } else {
        const bool long_enough = w.size() >= static_cast<std::size_t>(n);
        out << "word: " << format_partial_word(w) << '\n';
        out << "alphabet: " << a << "  n: " << n << '\n';
        out << "universal: " << detail::yes_no(r.is_universal) << '\n';
        out << "diamondicity: "
            << (r.diamondicity.is_defined() ? std::to_string(r.diamondicity.value()) : std::string("undefined"))
            << '\n';
        out << "pseudocyclic: " << detail::yes_no(long_enough && is_pseudocyclic(w, n)) << '\n';
        out << "cyclic: " << detail::yes_no(long_enough && is_cyclic(w, n)) << '\n';
        out << "length: " << w.size();
        if (r.length_expected_if_d) {
          out << " (expected " << *r.length_expected_if_d << ")";
        }
        out << '\n';
        out << "missing: " << r.missing_count;
        for (const Rank m : r.missing) {
          out << ' ' << detail::rank_text(m, ctx, expand_ranks);
        }
        out << (r.missing.size() < r.missing_count ? " ..." : "") << '\n';
        out << "duplicated: " << r.duplicated_count;
        for (const auto& [rank, mult] : r.duplicated) {
          out << ' ' << detail::rank_text(rank, ctx, expand_ranks) << 'x' << mult;
        }
        out << (r.duplicated.size() < r.duplicated_count ? " ..." : "") << '\n';
        out << "rules fired: " << detail::join_rules(rules) << '\n';
      }
      return r.is_universal ? kOk : kNegative;
    }

    if (analyze_cmd->parsed()) {
      const WordContext ctx(Alphabet(a), n);
      const PartialWord w = parse_partial_word(detail::read_word_arg(word_text, in), ctx.alphabet());
      const nlohmann::json doc = analysis_json(w, ctx);
      if (json) {
        emit_json(doc);
      } else {
        const auto text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        for (const char* key : {"word", "frame", "first_window_frame", "diamondicity", "pseudocyclic", "cyclic",
                                "length", "expected_length", "frame_has_period_n", "borders", "periods",
                                "rules_fired"}) {
          out << key << ": " << text(doc[key]) << '\n';
        }
        if (!doc["frame_root"].is_null()) {
          out << "frame_root: " << text(doc["frame_root"]["root"]) << " x" << doc["frame_root"]["repetitions"] << '\n';
        }
      }
      return kOk;
    }

    if (feasible_cmd->parsed()) {
      const Hypotheses h{.pseudocyclic = assume_pseudocyclic};
      if (d_opt) {
        const FeasibilityVerdict v = check_parameters(a, n, *d_opt, h);
        if (json) {
          emit_json(feasibility_json(a, n, *d_opt, v, assume_pseudocyclic));
        } else {
          out << "a=" << a << " n=" << n << " d=" << *d_opt << ": " << (v.refuted() ? "refuted" : "not refuted")
              << '\n';
          for (const FiredRule& f : v.fired) {
            out << "  " << rule_id(f.rule) << ": " << f.detail << '\n';
          }
        }
        return v.refuted() ? kNegative : kOk;
      }
      // Validates a and n even when there is no d to test.
      (void)expected_length(a, n, n);
      const FeasibilitySummary s = summarize_feasibility(a, n, h);
      if (json) {
        emit_json(feasibility_summary_json(a, n, s, assume_pseudocyclic));
      } else {
        out << "a=" << a << " n=" << n << ": " << (s.refuted() ? "refuted" : "feasible") << '\n';
        out << "admissible d:";
        for (const int d : s.admissible) {
          out << ' ' << d;
        }
        out << (s.admissible.empty() ? " none" : "") << '\n';
        for (std::size_t i = 0; i < s.per_d.size(); ++i) {
          out << "  d=" << i + 1 << ": " << detail::join_rules(s.per_d[i]) << '\n';
        }
        out << "rules fired:";
        for (const Rule r : s.primary_rules) {
          out << ' ' << rule_id(r);
        }
        out << (s.primary_rules.empty() ? " none" : "") << '\n';
      }
      return s.refuted() ? kNegative : kOk;
    }

    if (n4_cmd->parsed() || db_cmd->parsed() || uw_cmd->parsed()) {
      PartialWord w = n4_cmd->parsed() ? construct_n4(a) : db_cmd->parsed() ? debruijn_sequence(a, n) : universal_word(a, n);
      if (json) {
        emit_json(word_json(w, n4_cmd->parsed() ? 4 : n));
      } else {
        out << format_partial_word(w) << '\n';
      }
      return kOk;
    }

    if (search_cmd->parsed()) {
      const WordContext ctx(Alphabet(a), n);
      cfg.max_length = max_length;
      cfg.limit = limit;
      cfg.allow_over_budget = allow_over_budget || detail::env_allows_over_budget();
      if (!frame_text.empty()) {
        cfg.fixed_frame = parse_frame(frame_text);
      }
      Search s(ctx, cfg);
      std::vector<PartialWord> found;
      s.run([&](const PartialWord& w) {
        if (!json) {
          out << format_partial_word(w) << '\n';
        }
        found.push_back(w);
        return true;
      });
      if (json) {
        emit_json(word_list_json(found));
      }
      err << found.size() << " word(s), " << s.stats().nodes << " nodes, estimate " << s.estimate().to_string()
          << '\n';
      return found.empty() ? kNegative : kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace upword::cli
