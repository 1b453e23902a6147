#pragma once

// Refutation rules deciding, before any search, whether parameters (a, n, d)
// or a concrete word shape can admit a universal partial word.
//
// Every rule carries hypotheses. The divisibility family needs the word to be
// pseudocyclic, which holds automatically for a >= 3; for binary alphabets the
// caller has to assert it through Hypotheses. A verdict that refutes nothing
// is not an existence claim.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "upword/structure.hpp"
#include "upword/word.hpp"

namespace upword {

enum class Rule {
  small_n,
  divisibility,
  gcd2,
  gcd_prime,
  diam_bound,
  diamond_run,
  periodic_suffix,
};

inline std::string_view rule_id(Rule r) noexcept {
  switch (r) {
    case Rule::small_n: return "SMALL_N";
    case Rule::divisibility: return "DIVISIBILITY";
    case Rule::gcd2: return "GCD2";
    case Rule::gcd_prime: return "GCD_PRIME";
    case Rule::diam_bound: return "DIAM_BOUND";
    case Rule::diamond_run: return "DIAMOND_RUN";
    case Rule::periodic_suffix: return "PERIODIC_SUFFIX";
  }
  return "UNKNOWN";
}

inline std::string_view rule_statement(Rule r) noexcept {
  switch (r) {
    case Rule::small_n:
      return "a >= 3 and n <= 3: no nontrivial universal partial word exists";
    case Rule::divisibility:
      return "the first window frame's primitive root length must divide gcd(a^(n-d), n)";
    case Rule::gcd2:
      return "gcd(a^(n-d), n) = 2: no nontrivial universal partial word with diamondicity d";
    case Rule::gcd_prime:
      return "a >= 3 and gcd(a^(n-d), n) = p prime: d must be a multiple k*n/p with 1 <= k < p";
    case Rule::diam_bound:
      return "pseudocyclic words need d < n - k whenever n >= k(k-1)+2";
    case Rule::diamond_run:
      return "no universal partial word has a single diamond run u*^k v with 2 <= k <= n/2 (or 1 <= k < n when a >= 3)";
    case Rule::periodic_suffix:
      return "no universal partial word contains u*^k v with |v| = n-k, v of period p <= k and |u| = p";
  }
  return "";
}

struct FiredRule {
  Rule rule;
  std::string detail;
};

struct FeasibilityVerdict {
  // Empty means not refuted. Order is evaluation order; the first entry is
  // the primary reason.
  std::vector<FiredRule> fired;

  bool refuted() const noexcept { return !fired.empty(); }

  bool fired_rule(Rule r) const noexcept {
    for (const auto& f : fired) {
      if (f.rule == r) {
        return true;
      }
    }
    return false;
  }
};

struct Hypotheses {
  // The candidate word is known to be pseudocyclic.
  bool pseudocyclic = false;
};

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) {
    return 0;
  }
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) {
      result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % mod);
    }
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % mod);
    exp >>= 1U;
  }
  return result;
}

inline bool is_prime(std::uint64_t v) {
  if (v < 2) {
    return false;
  }
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      return false;
    }
  }
  return true;
}

inline void require_parameters(int a, int n) {
  if (a < 2) {
    throw Error("alphabet size must be >= 2");
  }
  if (n < 1) {
    throw Error("n must be >= 1");
  }
}

inline bool structural_rules_apply(int a, Hypotheses h) { return a >= 3 || h.pseudocyclic; }

// True when v (all letters) has period q.
inline bool has_period(std::span<const Character> v, std::size_t q) {
  for (std::size_t i = q; i < v.size(); ++i) {
    if (v[i] != v[i - q]) {
      return false;
    }
  }
  return true;
}

inline bool all_letters(std::span<const Character> s) {
  for (const Character c : s) {
    if (c.is_diamond()) {
      return false;
    }
  }
  return true;
}

inline bool all_diamonds(std::span<const Character> s) {
  for (const Character c : s) {
    if (c.is_letter()) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// gcd(a^e, n), computed without forming a^e.
inline std::uint64_t gcd_of_power(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  const std::uint64_t r = detail::pow_mod(a, e, n);
  return std::gcd(r == 0 ? n : r, n);
}

// Length a^(n-d) + n - 1 forced by diamondicity d.
inline std::uint64_t expected_length(int a, int n, int d) {
  detail::require_parameters(a, n);
  if (d < 0 || d > n) {
    throw Error("expected_length: d must be in [0, n]");
  }
  const auto p = checked_pow(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(n - d));
  if (!p) {
    throw Error("expected_length: a^(n-d) exceeds the supported range");
  }
  return *p + static_cast<std::uint64_t>(n) - 1;
}

// Least diamondicity refuted for pseudocyclic words: n - k for the largest
// k >= 1 with n >= k(k-1)+2. Returns n+1 when no k qualifies (n = 1).
inline int diamondicity_bound(int n) {
  if (n < 1) {
    throw Error("diamondicity_bound: n must be >= 1");
  }
  int best = 0;
  for (int k = 1; k * (k - 1) + 2 <= n; ++k) {
    best = k;
  }
  return best == 0 ? n + 1 : n - best;
}

// Parameter-level rules for nontrivial words with diamondicity d. Trivial
// diamondicities (0 and n) are never refuted.
inline FeasibilityVerdict check_parameters(int a, int n, int d, Hypotheses h = {}) {
  detail::require_parameters(a, n);
  if (d < 0 || d > n) {
    throw Error("check_parameters: d must be in [0, n]");
  }
  FeasibilityVerdict verdict;
  if (d == 0 || d == n) {
    return verdict;
  }
  if (a >= 3 && n <= 3) {
    verdict.fired.push_back({Rule::small_n, "n = " + std::to_string(n) + " <= 3"});
  }
  if (!detail::structural_rules_apply(a, h)) {
    return verdict;
  }
  const auto un = static_cast<std::uint64_t>(n);
  const auto ud = static_cast<std::uint64_t>(d);
  const std::uint64_t g = gcd_of_power(static_cast<std::uint64_t>(a), un - ud, un);
  const std::string gcd_text = "gcd(" + std::to_string(a) + "^" + std::to_string(n - d) + ", " +
                               std::to_string(n) + ") = " + std::to_string(g);
  if (g == 1) {
    verdict.fired.push_back({Rule::divisibility, gcd_text + " admits no frame root"});
  } else if (g == 2) {
    verdict.fired.push_back({Rule::gcd2, gcd_text});
  } else {
    // A root of length i carries d*i/n diamonds, which must be an integer
    // strictly between 0 and i.
    bool some_root = false;
    for (std::uint64_t i = 2; i <= g && !some_root; ++i) {
      some_root = g % i == 0 && (ud * i) % un == 0 && (ud * i) / un < i;
    }
    if (!some_root) {
      if (a >= 3 && detail::is_prime(g)) {
        verdict.fired.push_back({Rule::gcd_prime, gcd_text + " is prime and d is not a multiple of n/" +
                                                      std::to_string(g)});
      } else {
        verdict.fired.push_back({Rule::divisibility, gcd_text + " has no divisor usable as a frame root"});
      }
    }
  }
  const int bound = diamondicity_bound(n);
  if (d >= bound) {
    verdict.fired.push_back({Rule::diam_bound, "d = " + std::to_string(d) + " >= " + std::to_string(bound)});
  }
  return verdict;
}

// Diamondicities in [1, n-1] surviving every parameter rule (a >= 3).
inline std::set<int> admissible_diamondicities(int a, int n) {
  if (a < 3) {
    throw Error("admissible_diamondicities: requires a >= 3");
  }
  detail::require_parameters(a, n);
  std::set<int> out;
  for (int d = 1; d < n; ++d) {
    if (!check_parameters(a, n, d).refuted()) {
      out.insert(d);
    }
  }
  return out;
}

inline FeasibilityVerdict check_frame_divisibility(const Frame& f, int a, int n, Hypotheses h = {}) {
  detail::require_parameters(a, n);
  if (f.size() != static_cast<std::size_t>(n)) {
    throw Error("check_frame_divisibility: frame length must equal n");
  }
  FeasibilityVerdict verdict;
  const auto d = static_cast<std::uint64_t>(f.diamond_count());
  if (d == 0 || d == f.size() || !detail::structural_rules_apply(a, h)) {
    return verdict;
  }
  const std::size_t root = minimal_frame_root(f).root.size();
  const std::uint64_t g =
      gcd_of_power(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(n) - d, static_cast<std::uint64_t>(n));
  if (g % root != 0) {
    verdict.fired.push_back({Rule::divisibility, "root length " + std::to_string(root) + " does not divide " +
                                                     std::to_string(g)});
  }
  return verdict;
}

// Divisibility on a word's first window frame, with pseudocyclicity read off
// the word itself.
inline FeasibilityVerdict check_word_divisibility(const PartialWord& w, int n) {
  if (w.size() < static_cast<std::size_t>(n)) {
    return {};
  }
  return check_frame_divisibility(first_window_frame(w, n), w.alphabet().size(), n,
                                  Hypotheses{.pseudocyclic = is_pseudocyclic(w, n)});
}

inline FeasibilityVerdict refute_gcd2(int a, int n, int d) {
  detail::require_parameters(a, n);
  if (d < 0 || d > n) {
    throw Error("refute_gcd2: d must be in [0, n]");
  }
  FeasibilityVerdict verdict;
  const std::uint64_t g = gcd_of_power(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(n - d),
                                       static_cast<std::uint64_t>(n));
  if (g == 2) {
    verdict.fired.push_back({Rule::gcd2, "gcd(a^(n-d), n) = 2"});
  }
  return verdict;
}

// True when an occurrence of u*^k v (|v| = n-k, v of period q <= k, |u| = q,
// u and v all letters) or of its mirror image v*^k u ends at index `last`.
inline bool periodic_pattern_ends_at(std::span<const Character> s, std::size_t last, int n) {
  const auto end = last + 1;  // exclusive
  for (int k = 1; k < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const auto vlen = static_cast<std::size_t>(n - k);
    const std::size_t max_q = std::min(uk, vlen);
    // Forward: [u][*^k][v] with v last.
    if (end >= vlen + uk + 1) {
      const auto v = s.subspan(end - vlen, vlen);
      const auto run = s.subspan(end - vlen - uk, uk);
      if (detail::all_letters(v) && detail::all_diamonds(run)) {
        for (std::size_t q = 1; q <= max_q; ++q) {
          if (end < vlen + uk + q) {
            break;
          }
          if (detail::all_letters(s.subspan(end - vlen - uk - q, q)) && detail::has_period(v, q)) {
            return true;
          }
        }
      }
    }
    // Mirror: [v][*^k][u] with u last.
    for (std::size_t q = 1; q <= max_q; ++q) {
      if (end < q + uk + vlen) {
        break;
      }
      const auto u = s.subspan(end - q, q);
      const auto run = s.subspan(end - q - uk, uk);
      const auto v = s.subspan(end - q - uk - vlen, vlen);
      if (detail::all_letters(u) && detail::all_diamonds(run) && detail::all_letters(v) &&
          detail::has_period(v, q)) {
        return true;
      }
    }
  }
  return false;
}

// Whole-word shape rules. A verdict with no rules does not mean the word is
// universal.
inline FeasibilityVerdict refute_shape(const PartialWord& w, int n) {
  if (n < 1) {
    throw Error("refute_shape: n must be >= 1");
  }
  FeasibilityVerdict verdict;
  const int a = w.alphabet().size();

  std::size_t runs = 0;
  std::size_t run_length = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_diamond()) {
      if (i == 0 || w[i - 1].is_letter()) {
        ++runs;
        run_length = 0;
      }
      ++run_length;
    }
  }
  if (runs == 1) {
    const auto k = run_length;
    const auto un = static_cast<std::size_t>(n);
    const bool has_letters = k < w.size();
    if (k >= 2 && 2 * k <= un) {
      verdict.fired.push_back({Rule::diamond_run, "single diamond run of length " + std::to_string(k) +
                                                      " with 2 <= k <= n/2"});
    } else if (a >= 3 && has_letters && k >= 1 && k < un) {
      verdict.fired.push_back({Rule::diamond_run, "single diamond run of length " + std::to_string(k) +
                                                      " over a non-binary alphabet"});
    }
  }

  for (std::size_t last = 0; last < w.size(); ++last) {
    if (periodic_pattern_ends_at(w.chars(), last, n)) {
      verdict.fired.push_back({Rule::periodic_suffix, "pattern ends at position " + std::to_string(last)});
      break;
    }
  }
  return verdict;
}

}  // namespace upword
