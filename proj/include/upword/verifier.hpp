#pragma once

// Exact coverage accounting over A^n and the universal-partial-word verdict.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "upword/structure.hpp"
#include "upword/word.hpp"

namespace upword {

// Per-word cover counts indexed by rank, saturating at 255.
class Multiplicities {
public:
  static constexpr std::uint8_t kSaturated = 255;

  explicit Multiplicities(Rank word_count) : counts_(word_count, 0) {}

  std::uint8_t operator[](Rank r) const { return counts_[r]; }
  Rank size() const noexcept { return counts_.size(); }
  std::span<const std::uint8_t> counts() const noexcept { return counts_; }

  void add(Rank r) noexcept {
    if (counts_[r] != kSaturated) {
      ++counts_[r];
    }
  }

private:
  std::vector<std::uint8_t> counts_;
};

inline Multiplicities coverage_multiplicities(const PartialWord& w, const WordContext& ctx) {
  if (w.alphabet() != ctx.alphabet()) {
    throw Error("coverage_multiplicities: alphabet mismatch");
  }
  Multiplicities mult(ctx.word_count());
  const auto n = static_cast<std::size_t>(ctx.n());
  const auto chars = w.chars();
  for (std::size_t i = 0; i + n <= chars.size(); ++i) {
    detail::for_each_covered_rank(chars.subspan(i, n), ctx.a(), [&](Rank r) {
      mult.add(r);
      return true;
    });
  }
  return mult;
}

struct CoverageReport {
  bool is_universal = false;
  Rank total_words = 0;
  Rank covered_once = 0;
  // Ascending ranks, truncated to the diagnostic limit; the counts are exact.
  std::vector<Rank> missing;
  Rank missing_count = 0;
  std::vector<std::pair<Rank, unsigned>> duplicated;
  Rank duplicated_count = 0;
  std::size_t window_count = 0;
  Diamondicity diamondicity = Diamondicity::undefined();
  std::optional<std::uint64_t> length_expected_if_d;
  // Set when the length check decided the verdict and no accounting ran;
  // the count fields are then left at zero.
  bool length_rejected = false;
};

struct VerifyOptions {
  // Reject on a length/diamondicity mismatch without counting coverage.
  bool fast_reject = true;
  std::size_t diagnostic_limit = 32;
};

inline CoverageReport verify(const PartialWord& w, const WordContext& ctx, VerifyOptions options = {}) {
  if (w.alphabet() != ctx.alphabet()) {
    throw Error("verify: alphabet mismatch");
  }
  CoverageReport report;
  report.total_words = ctx.word_count();
  const auto n = static_cast<std::size_t>(ctx.n());
  report.window_count = w.size() >= n ? w.size() - n + 1 : 0;

  if (w.size() >= n) {
    report.diamondicity = diamondicity_of(w, ctx.n());
    if (report.diamondicity.is_defined()) {
      const auto d = static_cast<std::uint64_t>(report.diamondicity.value());
      // a^(n-d) <= a^n is within range.
      report.length_expected_if_d =
          *checked_pow(static_cast<std::uint64_t>(ctx.a()), static_cast<std::uint64_t>(ctx.n()) - d) + n - 1;
      if (options.fast_reject && *report.length_expected_if_d != w.size()) {
        report.length_rejected = true;
        return report;
      }
    }
  }

  const Multiplicities mult = coverage_multiplicities(w, ctx);
  for (Rank r = 0; r < mult.size(); ++r) {
    const std::uint8_t m = mult[r];
    if (m == 1) {
      ++report.covered_once;
    } else if (m == 0) {
      if (report.missing.size() < options.diagnostic_limit) {
        report.missing.push_back(r);
      }
      ++report.missing_count;
    } else {
      if (report.duplicated.size() < options.diagnostic_limit) {
        report.duplicated.emplace_back(r, m);
      }
      ++report.duplicated_count;
    }
  }
  report.is_universal = report.missing_count == 0 && report.duplicated_count == 0;
  return report;
}

// No diamonds, or nothing but diamonds.
inline bool is_trivial_upword(const PartialWord& w) {
  const std::size_t d = w.diamond_count();
  return d == 0 || d == w.size();
}

}  // namespace upword
