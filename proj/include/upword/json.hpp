#pragma once

// JSON documents for reports, analyses, feasibility verdicts and word lists.
// Needs nlohmann/json; the rest of the library does not.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "upword/feasibility.hpp"
#include "upword/structure.hpp"
#include "upword/verifier.hpp"
#include "upword/word.hpp"

namespace upword {

inline constexpr int kSchemaVersion = 1;

struct JsonOptions {
  // Render ranks as encoded words instead of integers.
  bool expand_ranks = false;
};

namespace detail {

inline nlohmann::json rank_json(Rank r, const WordContext& ctx, const JsonOptions& opt) {
  if (opt.expand_ranks) {
    return format_partial_word(word_unrank(r, ctx));
  }
  return r;
}

inline nlohmann::json optional_int(const std::optional<std::uint64_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

// a^(n-d) + n - 1 when representable.
inline std::optional<std::uint64_t> length_for(int a, int n, int d) {
  const auto p = checked_pow(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(n - d));
  if (!p) {
    return std::nullopt;
  }
  return *p + static_cast<std::uint64_t>(n) - 1;
}

inline nlohmann::json rule_ids(const FeasibilityVerdict& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const FiredRule& f : v.fired) {
    out.push_back(std::string(rule_id(f.rule)));
  }
  return out;
}

inline nlohmann::json rule_details(const FeasibilityVerdict& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const FiredRule& f : v.fired) {
    out.push_back({{"rule", std::string(rule_id(f.rule))}, {"detail", f.detail}});
  }
  return out;
}

}  // namespace detail

// Every rule that refutes w as a universal partial word for ctx: shape
// rules, first-frame divisibility, and the parameter rules for its
// diamondicity when defined.
inline FeasibilityVerdict word_rules(const PartialWord& w, const WordContext& ctx) {
  FeasibilityVerdict out = refute_shape(w, ctx.n());
  if (w.size() < static_cast<std::size_t>(ctx.n())) {
    return out;
  }
  const Hypotheses h{.pseudocyclic = is_pseudocyclic(w, ctx.n())};
  const auto append = [&](const FeasibilityVerdict& v) {
    for (const FiredRule& f : v.fired) {
      if (!out.fired_rule(f.rule)) {
        out.fired.push_back(f);
      }
    }
  };
  const Diamondicity d = diamondicity_of(w, ctx.n());
  if (d.is_defined()) {
    append(check_parameters(ctx.a(), ctx.n(), d.value(), h));
    append(check_frame_divisibility(first_window_frame(w, ctx.n()), ctx.a(), ctx.n(), h));
  }
  return out;
}

inline nlohmann::json report_json(const PartialWord& w, const WordContext& ctx, const CoverageReport& r,
                                  const FeasibilityVerdict& rules, const JsonOptions& opt = {}) {
  const bool long_enough = w.size() >= static_cast<std::size_t>(ctx.n());
  nlohmann::json dup = nlohmann::json::array();
  for (const auto& [rank, mult] : r.duplicated) {
    dup.push_back({detail::rank_json(rank, ctx, opt), mult});
  }
  nlohmann::json missing = nlohmann::json::array();
  for (const Rank rank : r.missing) {
    missing.push_back(detail::rank_json(rank, ctx, opt));
  }
  return {
      {"schema_version", kSchemaVersion},
      {"word", format_partial_word(w)},
      {"alphabet", ctx.a()},
      {"n", ctx.n()},
      {"is_universal", r.is_universal},
      {"diamondicity", r.diamondicity.is_defined() ? nlohmann::json(r.diamondicity.value()) : nlohmann::json(nullptr)},
      {"pseudocyclic", long_enough && is_pseudocyclic(w, ctx.n())},
      {"cyclic", long_enough && is_cyclic(w, ctx.n())},
      {"missing_count", r.missing_count},
      {"missing", missing},
      {"duplicated_count", r.duplicated_count},
      {"duplicated", dup},
      {"length", w.size()},
      {"expected_length", detail::optional_int(r.length_expected_if_d)},
      {"rules_fired", detail::rule_ids(rules)},
  };
}

inline nlohmann::json analysis_json(const PartialWord& w, const WordContext& ctx) {
  const bool long_enough = w.size() >= static_cast<std::size_t>(ctx.n());
  nlohmann::json out = {
      {"schema_version", kSchemaVersion},
      {"word", format_partial_word(w)},
      {"alphabet", ctx.a()},
      {"n", ctx.n()},
      {"length", w.size()},
      {"diamonds", w.diamond_count()},
      {"frame", format_frame(frame_of(w))},
      {"borders", border_lengths(w)},
  };
  if (w.is_total()) {
    out["periods"] = periods_of(w);
  } else {
    out["periods"] = nullptr;
  }
  if (long_enough) {
    const Frame first = first_window_frame(w, ctx.n());
    const FrameRoot root = minimal_frame_root(first);
    const Diamondicity d = diamondicity_of(w, ctx.n());
    out["first_window_frame"] = format_frame(first);
    out["frame_root"] = {{"root", format_frame(root.root)}, {"repetitions", root.repetitions}};
    out["frame_has_period_n"] = frame_has_period(frame_of(w), ctx.n());
    out["diamondicity"] = d.is_defined() ? nlohmann::json(d.value()) : nlohmann::json(nullptr);
    out["pseudocyclic"] = is_pseudocyclic(w, ctx.n());
    out["cyclic"] = is_cyclic(w, ctx.n());
    out["expected_length"] =
        d.is_defined() ? nlohmann::json(expected_length(ctx.a(), ctx.n(), d.value())) : nlohmann::json(nullptr);
  } else {
    out["first_window_frame"] = nullptr;
    out["frame_root"] = nullptr;
    out["frame_has_period_n"] = nullptr;
    out["diamondicity"] = nullptr;
    out["pseudocyclic"] = false;
    out["cyclic"] = false;
    out["expected_length"] = nullptr;
  }
  const FeasibilityVerdict rules = word_rules(w, ctx);
  out["rules_fired"] = detail::rule_ids(rules);
  out["rule_details"] = detail::rule_details(rules);
  return out;
}

// Verdict for one diamondicity.
inline nlohmann::json feasibility_json(int a, int n, int d, const FeasibilityVerdict& v, bool assume_pseudocyclic) {
  return {
      {"schema_version", kSchemaVersion},
      {"alphabet", a},
      {"n", n},
      {"d", d},
      {"assume_pseudocyclic", assume_pseudocyclic},
      {"refuted", v.refuted()},
      {"expected_length", detail::optional_int(detail::length_for(a, n, d))},
      {"rules_fired", detail::rule_ids(v)},
      {"rule_details", detail::rule_details(v)},
  };
}

struct FeasibilitySummary {
  std::set<int> admissible;
  // Verdicts for d = 1 .. n-1.
  std::vector<FeasibilityVerdict> per_d;
  // Primary rule of each refuted d, deduplicated in order of first use.
  std::vector<Rule> primary_rules;

  bool refuted() const noexcept { return admissible.empty(); }
};

inline FeasibilitySummary summarize_feasibility(int a, int n, Hypotheses h = {}) {
  FeasibilitySummary s;
  for (int d = 1; d < n; ++d) {
    FeasibilityVerdict v = check_parameters(a, n, d, h);
    if (v.refuted()) {
      const Rule primary = v.fired.front().rule;
      if (std::find(s.primary_rules.begin(), s.primary_rules.end(), primary) == s.primary_rules.end()) {
        s.primary_rules.push_back(primary);
      }
    } else {
      s.admissible.insert(d);
    }
    s.per_d.push_back(std::move(v));
  }
  return s;
}

inline nlohmann::json feasibility_summary_json(int a, int n, const FeasibilitySummary& s, bool assume_pseudocyclic) {
  nlohmann::json per_d = nlohmann::json::array();
  for (std::size_t i = 0; i < s.per_d.size(); ++i) {
    per_d.push_back({{"d", static_cast<int>(i) + 1},
                     {"refuted", s.per_d[i].refuted()},
                     {"rules_fired", detail::rule_ids(s.per_d[i])}});
  }
  nlohmann::json primary = nlohmann::json::array();
  for (const Rule r : s.primary_rules) {
    primary.push_back(std::string(rule_id(r)));
  }
  return {
      {"schema_version", kSchemaVersion},
      {"alphabet", a},
      {"n", n},
      {"d", nullptr},
      {"assume_pseudocyclic", assume_pseudocyclic},
      {"refuted", s.refuted()},
      {"admissible", s.admissible},
      {"per_d", per_d},
      {"rules_fired", primary},
  };
}

inline nlohmann::json word_json(const PartialWord& w, int n) {
  return {
      {"schema_version", kSchemaVersion},
      {"word", format_partial_word(w)},
      {"alphabet", w.alphabet().size()},
      {"n", n},
      {"length", w.size()},
      {"diamonds", w.diamond_count()},
  };
}

inline nlohmann::json word_list_json(const std::vector<PartialWord>& words) {
  nlohmann::json out = nlohmann::json::array();
  for (const PartialWord& w : words) {
    out.push_back(format_partial_word(w));
  }
  return out;
}

}  // namespace upword
