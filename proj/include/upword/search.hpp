#pragma once

// Exhaustive depth-first enumeration of universal partial words.
//
// The tree extends a prefix one character at a time ('*' first, then letters
// in increasing order), so words are emitted in lexicographic order of their
// encoding. A prefix is abandoned as soon as one of its windows covers a word
// a second time. No universal partial word is a proper prefix of another
// (the extra window would cover something twice), so a single pass covers
// every length up to the configured maximum.
//
// Optional structural pruning is layered on top and only used where its
// hypotheses hold:
//   frame_period      a >= 3: the frame has period n (so the first window
//                     frame decides the whole frame)
//   length_law        a >= 3: length is a^(n-d) + n - 1
//   pseudocyclic_tail a >= 3: the last n-1 characters repeat the first n-1
//   divisibility      a >= 3: first-window frame root length divides
//                     gcd(a^(n-d), n), and gcd != 2
//   diamond_bound     a >= 3: d < diamondicity_bound(n)
//   periodic_suffix   any a: no u*^k v substring with v of small period

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "upword/feasibility.hpp"
#include "upword/structure.hpp"
#include "upword/word.hpp"

namespace upword {

struct PruningRules {
  bool frame_period = true;
  bool length_law = true;
  bool pseudocyclic_tail = true;
  bool divisibility = true;
  bool diamond_bound = true;
  bool periodic_suffix = true;

  static PruningRules all() noexcept { return {}; }
  static PruningRules none() noexcept { return {false, false, false, false, false, false}; }
};

// How the search remembers which words are covered. Dense keeps one byte per
// word of A^n; sparse compares each new window against the earlier ones
// (two windows cover a common word exactly when they agree wherever both
// hold letters) and costs nothing per word of A^n. Automatic picks sparse
// once a^n exceeds kDenseCoverageLimit.
enum class CoverageMode { automatic, dense, sparse };

inline constexpr std::uint64_t kDenseCoverageLimit = std::uint64_t{1} << 24;

struct SearchConfig {
  // Defaults to a^n + n - 1, the longest possible universal partial word.
  std::optional<std::size_t> max_length;
  std::size_t min_diamonds = 0;
  bool require_nontrivial = false;
  // Every emitted word has exactly this frame (and hence this length).
  std::optional<Frame> fixed_frame;
  bool use_structure_pruning = false;
  PruningRules rules = PruningRules::all();
  // Emit one representative per orbit under letter permutations and reversal.
  bool canonicalize = false;
  std::optional<std::size_t> limit;
  unsigned workers = 1;
  // Tree-size estimate above which the search is refused unless
  // allow_over_budget is set.
  double budget = 1e9;
  bool allow_over_budget = false;
  CoverageMode coverage = CoverageMode::automatic;
};

using SpaceCount = unsigned __int128;

inline std::string to_string(SpaceCount v) {
  if (v == 0) {
    return "0";
  }
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

struct SpaceEstimate {
  SpaceCount nodes = 0;
  // The true bound exceeds 2^128 - 1.
  bool saturated = false;

  std::string to_string() const { return saturated ? ">" + upword::to_string(nodes) : upword::to_string(nodes); }
  double as_double() const noexcept { return static_cast<double>(nodes); }
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(SpaceEstimate estimate, double budget)
      : Error("search space estimate " + estimate.to_string() + " exceeds the budget of " +
              std::to_string(static_cast<long long>(budget)) + " nodes; pass an explicit override to run anyway"),
        estimate_(estimate) {}

  const SpaceEstimate& estimate() const noexcept { return estimate_; }

private:
  SpaceEstimate estimate_;
};

namespace detail {

struct SaturatingCounter {
  SpaceCount value = 0;
  bool saturated = false;

  static constexpr SpaceCount kMax = ~SpaceCount{0};

  static std::pair<SpaceCount, bool> pow(SpaceCount base, std::size_t exp) {
    SpaceCount result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      if (base != 0 && result > kMax / base) {
        return {kMax, true};
      }
      result *= base;
    }
    return {result, false};
  }

  void add(std::pair<SpaceCount, bool> term) {
    if (term.second || value > kMax - term.first) {
      value = kMax;
      saturated = true;
      return;
    }
    value += term.first;
  }
};

inline std::size_t default_max_length(const WordContext& ctx) {
  return static_cast<std::size_t>(ctx.word_count()) + static_cast<std::size_t>(ctx.n()) - 1;
}

inline bool structural_pruning_active(const WordContext& ctx, const SearchConfig& cfg) {
  return cfg.use_structure_pruning && ctx.a() >= 3;
}

// Frame of length `len` obtained by repeating `first` (period n).
inline Frame periodic_extension(const Frame& first, std::size_t len) {
  std::vector<Mark> marks(len);
  for (std::size_t i = 0; i < len; ++i) {
    marks[i] = first[i % first.size()];
  }
  return Frame(std::move(marks));
}

}  // namespace detail

// Number of letter assignments once every diamond position is fixed.
inline SpaceEstimate estimate_frame_space(const WordContext& ctx, const Frame& frame) {
  const auto term = detail::SaturatingCounter::pow(static_cast<SpaceCount>(ctx.a()), frame.size() - frame.diamond_count());
  return SpaceEstimate{term.first, term.second};
}

// Upper bound on the size of the search tree before any pruning.
inline SpaceEstimate estimate_space(const WordContext& ctx, const SearchConfig& cfg) {
  if (cfg.fixed_frame) {
    return estimate_frame_space(ctx, *cfg.fixed_frame);
  }
  const std::size_t max_len = cfg.max_length.value_or(detail::default_max_length(ctx));
  const auto n = static_cast<std::size_t>(ctx.n());
  detail::SaturatingCounter total;
  if (detail::structural_pruning_active(ctx, cfg) && cfg.rules.frame_period && cfg.rules.length_law) {
    // Frame-constrained: one tree per first-window frame.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Mark> marks(n);
      for (std::size_t i = 0; i < n; ++i) {
        marks[i] = (mask >> (n - 1 - i)) & 1U ? Mark::diamond : Mark::solid;
      }
      const Frame first(std::move(marks));
      const auto d = static_cast<int>(first.diamond_count());
      if (cfg.require_nontrivial && (d == 0 || d == ctx.n())) {
        continue;
      }
      const auto len = checked_pow(static_cast<std::uint64_t>(ctx.a()), n - static_cast<std::size_t>(d));
      if (!len || *len + n - 1 > max_len) {
        continue;
      }
      const Frame frame = detail::periodic_extension(first, static_cast<std::size_t>(*len) + n - 1);
      const auto term = detail::SaturatingCounter::pow(static_cast<SpaceCount>(ctx.a()), frame.size() - frame.diamond_count());
      total.add(term);
    }
    return SpaceEstimate{total.value, total.saturated};
  }
  for (std::size_t len = n; len <= max_len; ++len) {
    total.add(detail::SaturatingCounter::pow(static_cast<SpaceCount>(ctx.a()) + 1, len));
    if (total.saturated) {
      break;
    }
  }
  return SpaceEstimate{total.value, total.saturated};
}

namespace detail {

// Least relabeling: letters renamed in order of first occurrence.
inline PartialWord normalize_letters(const PartialWord& w) {
  std::vector<int> map(static_cast<std::size_t>(w.alphabet().size()), -1);
  int next = 0;
  std::vector<Character> chars;
  chars.reserve(w.size());
  for (const Character c : w) {
    if (c.is_diamond()) {
      chars.push_back(c);
      continue;
    }
    int& image = map[static_cast<std::size_t>(c.value())];
    if (image < 0) {
      image = next++;
    }
    chars.push_back(Character::letter(image));
  }
  return PartialWord(w.alphabet(), std::move(chars));
}

}  // namespace detail

// Least word in the orbit of w under letter permutations and reversal.
// Renaming letters by first occurrence yields the least relabeling directly,
// so no alphabet-size limit applies.
inline PartialWord canonical_form(const PartialWord& w) {
  PartialWord forward = detail::normalize_letters(w);
  PartialWord backward = detail::normalize_letters(reverse(w));
  return backward < forward ? backward : forward;
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
};

namespace detail {

class SearchEngine {
public:
  static constexpr std::uint8_t kDiamond = 0xFF;

  SearchEngine(const WordContext& ctx, const SearchConfig& cfg)
      : ctx_(ctx),
        cfg_(cfg),
        a_(ctx.a()),
        n_(static_cast<std::size_t>(ctx.n())),
        word_count_(ctx.word_count()),
        structural_(structural_pruning_active(ctx, cfg)),
        track_chars_(cfg.use_structure_pruning && cfg.rules.periodic_suffix),
        sparse_(cfg.coverage == CoverageMode::sparse ||
                (cfg.coverage == CoverageMode::automatic && word_count_ > kDenseCoverageLimit)) {
    if (!sparse_) {
      mult_.assign(word_count_, 0);
    }
    power_.push_back(1);
    for (std::size_t i = 0; i < n_; ++i) {
      power_.push_back(power_.back() * static_cast<Rank>(a_));
    }
    max_len_ = cfg.max_length.value_or(default_max_length(ctx));
    if (cfg.fixed_frame) {
      max_len_ = std::min(max_len_, cfg.fixed_frame->size());
      target_len_ = cfg.fixed_frame->size();
    }
    place_.resize(n_);
    Rank p = 1;
    for (std::size_t i = n_; i-- > 0;) {
      place_[i] = p;
      p *= static_cast<Rank>(a_);
    }
    buf_.reserve(max_len_ + 1);
    chars_.reserve(max_len_ + 1);
    max_letter_.reserve(max_len_ + 2);
    max_letter_.push_back(-1);
  }

  // Callback receives the emitted word; returning false stops the search.
  using Sink = std::function<bool(const PartialWord&)>;
  // Receives prefixes at the split depth instead of descending into them.
  using Split = std::function<void(const std::vector<std::uint8_t>&)>;

  // Runs the subtree below `prefix`. Returns false if stopped by the sink.
  bool run(const std::vector<std::uint8_t>& prefix, const Sink& sink, std::size_t split_depth = 0,
           const Split& split = {}) {
    sink_ = &sink;
    split_ = split ? &split : nullptr;
    split_depth_ = split_depth;
    stopped_ = false;
    for (const std::uint8_t c : prefix) {
      WindowKey key = window_key_for_next();
      if (!extend(c, key)) {
        return true;
      }
    }
    dfs();
    return !stopped_;
  }

  const SearchStats& stats() const noexcept { return stats_; }

private:
  // Covered-word description of one window: letters folded into `base`,
  // diamond place values listed most significant first.
  struct WindowKey {
    Rank base = 0;
    Rank dplace[64];
    int dcount = 0;
  };

  bool is_diamond_at(std::size_t i) const { return buf_[i] == kDiamond; }

  // Key of the window that the next character would complete, minus that
  // character (which sits at place value 1).
  WindowKey window_key_for_next() const {
    WindowKey key;
    const std::size_t pos = buf_.size();
    if (pos + 1 < n_) {
      return key;
    }
    const std::size_t first = pos + 1 - n_;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
      const std::uint8_t c = buf_[first + k];
      if (c == kDiamond) {
        key.dplace[key.dcount++] = place_[k];
      } else {
        key.base += place_[k] * c;
      }
    }
    return key;
  }

  // Visits every rank covered by base plus the diamond places; stops early
  // and returns false when f does.
  template <class F>
  bool visit_ranks(Rank base, const Rank* dplace, int dcount, F&& f) const {
    int digits[64];
    for (int k = 0; k < dcount; ++k) {
      digits[k] = 0;
    }
    Rank r = base;
    while (true) {
      if (!f(r)) {
        return false;
      }
      int k = dcount - 1;
      while (k >= 0) {
        r += dplace[k];
        if (++digits[k] < a_) {
          break;
        }
        r -= static_cast<Rank>(a_) * dplace[k];
        digits[k] = 0;
        --k;
      }
      if (k < 0) {
        return true;
      }
    }
  }

  // Sparse mode: true when the window ending in c at the next position shares
  // a covered word with an earlier window.
  bool overlaps_earlier(std::uint8_t c) const {
    const std::size_t pos = buf_.size();
    const std::size_t start = pos + 1 - n_;
    for (std::size_t j = 0; j < start; ++j) {
      bool compatible = true;
      for (std::size_t t = 0; t < n_ && compatible; ++t) {
        const std::uint8_t x = buf_[j + t];
        const std::uint8_t y = start + t == pos ? c : buf_[start + t];
        compatible = x == kDiamond || y == kDiamond || x == y;
      }
      if (compatible) {
        return true;
      }
    }
    return false;
  }

  // Claims every word covered by the window; fails without side effects if
  // any of them is already covered.
  bool claim(Rank base, const Rank* dplace, int dcount) {
    if (sparse_) {
      // Caller has already ruled out overlaps.
      covered_ += power_[static_cast<std::size_t>(dcount)];
      return true;
    }
    if (dcount == 0) {
      if (mult_[base] != 0) {
        return false;
      }
      mult_[base] = 1;
      ++covered_;
      return true;
    }
    if (!visit_ranks(base, dplace, dcount, [&](Rank r) { return mult_[r] == 0; })) {
      return false;
    }
    visit_ranks(base, dplace, dcount, [&](Rank r) {
      mult_[r] = 1;
      ++covered_;
      return true;
    });
    return true;
  }

  void release(Rank base, const Rank* dplace, int dcount) {
    if (sparse_) {
      covered_ -= power_[static_cast<std::size_t>(dcount)];
      return;
    }
    visit_ranks(base, dplace, dcount, [&](Rank r) {
      mult_[r] = 0;
      --covered_;
      return true;
    });
  }

  // Structural checks once the first window is complete.
  bool accept_first_window() {
    std::vector<Mark> marks(n_);
    int d = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      marks[i] = is_diamond_at(i) ? Mark::diamond : Mark::solid;
      d += is_diamond_at(i) ? 1 : 0;
    }
    const int n = static_cast<int>(n_);
    const PruningRules& r = cfg_.rules;
    if (r.frame_period && cfg_.require_nontrivial && (d == 0 || d == n)) {
      // The whole word repeats this frame, so it would be trivial.
      return false;
    }
    if (r.length_law) {
      const auto len = checked_pow(static_cast<std::uint64_t>(a_), n_ - static_cast<std::size_t>(d));
      if (!len || *len + n_ - 1 > max_len_) {
        return false;
      }
      const std::size_t required = static_cast<std::size_t>(*len) + n_ - 1;
      if (target_len_ && *target_len_ != required) {
        return false;
      }
      target_len_ = required;
    }
    if (d > 0 && d < n) {
      if (r.divisibility) {
        const Frame first(std::move(marks));
        if (check_frame_divisibility(first, a_, n).refuted() || check_parameters(a_, n, d).fired_rule(Rule::gcd2)) {
          return false;
        }
      }
      if (r.diamond_bound && d >= diamondicity_bound(n)) {
        return false;
      }
    }
    return true;
  }

  void push_char(std::uint8_t c) {
    buf_.push_back(c);
    if (track_chars_) {
      chars_.push_back(c == kDiamond ? Character::diamond() : Character::letter(c));
    }
    if (cfg_.canonicalize) {
      const int prev_max = max_letter_.back();
      max_letter_.push_back(c == kDiamond ? prev_max : std::max<int>(prev_max, c));
    }
  }

  void pop_char() {
    buf_.pop_back();
    if (track_chars_) {
      chars_.pop_back();
    }
    if (cfg_.canonicalize) {
      max_letter_.pop_back();
    }
  }

  // Appends c, given the key of the window it completes. On failure the
  // state is unchanged.
  bool extend(std::uint8_t c, WindowKey& key) {
    const std::size_t pos = buf_.size();
    const bool has_window = pos + 1 >= n_;
    Rank base = key.base;
    int dcount = key.dcount;
    if (has_window) {
      if (c == kDiamond) {
        key.dplace[dcount++] = 1;
      } else {
        base += c;
      }
      if ((sparse_ && overlaps_earlier(c)) || !claim(base, key.dplace, dcount)) {
        return false;
      }
    }
    push_char(c);
    const std::optional<std::size_t> saved_target = target_len_;
    bool ok = true;
    if (structural_ && pos + 1 == n_) {
      ok = accept_first_window();
    }
    if (ok && track_chars_) {
      ok = !periodic_pattern_ends_at(chars_, pos, static_cast<int>(n_));
    }
    if (!ok) {
      target_len_ = saved_target;
      pop_char();
      if (has_window) {
        release(base, key.dplace, dcount);
      }
      return false;
    }
    if (structural_) {
      saved_targets_.push_back(saved_target);
    }
    return true;
  }

  void retract(std::uint8_t c, WindowKey& key) {
    const std::size_t pos = buf_.size() - 1;
    if (structural_) {
      target_len_ = saved_targets_.back();
      saved_targets_.pop_back();
    }
    pop_char();
    if (pos + 1 >= n_) {
      const bool diamond = c == kDiamond;
      release(key.base + (diamond ? 0 : c), key.dplace, key.dcount + (diamond ? 1 : 0));
    }
  }

  void emit() {
    const std::size_t len = buf_.size();
    if (cfg_.fixed_frame && len != cfg_.fixed_frame->size()) {
      return;
    }
    std::size_t diamonds = 0;
    for (const std::uint8_t c : buf_) {
      diamonds += c == kDiamond ? 1 : 0;
    }
    if (cfg_.require_nontrivial && (diamonds == 0 || diamonds == len)) {
      return;
    }
    if (diamonds < cfg_.min_diamonds) {
      return;
    }
    std::vector<Character> chars;
    chars.reserve(len);
    for (const std::uint8_t c : buf_) {
      chars.push_back(c == kDiamond ? Character::diamond() : Character::letter(c));
    }
    PartialWord w(ctx_.alphabet(), std::move(chars));
    if (cfg_.canonicalize && canonical_form(w) != w) {
      return;
    }
    ++stats_.emitted;
    if (!(*sink_)(w)) {
      stopped_ = true;
    }
  }

  void try_extend(std::uint8_t c, WindowKey& key) {
    if (extend(c, key)) {
      dfs();
      retract(c, key);
    }
  }

  void dfs() {
    ++stats_.nodes;
    const std::size_t pos = buf_.size();
    if (covered_ == word_count_) {
      emit();
      return;
    }
    if (split_ && pos == split_depth_) {
      (*split_)(buf_);
      return;
    }
    const std::size_t limit = target_len_ ? std::min(max_len_, *target_len_) : max_len_;
    if (pos >= limit) {
      return;
    }

    WindowKey key = window_key_for_next();

    // Mark constraint for this position: 0 solid, 1 diamond, -1 free.
    int diamond_required = -1;
    if (cfg_.fixed_frame) {
      diamond_required = (*cfg_.fixed_frame)[pos] == Mark::diamond ? 1 : 0;
    } else if (structural_ && cfg_.rules.frame_period && pos >= n_) {
      diamond_required = is_diamond_at(pos - n_) ? 1 : 0;
    }
    // Forced character from the pseudocyclic tail.
    if (structural_ && cfg_.rules.pseudocyclic_tail && target_len_ && n_ > 1 && pos + n_ - 1 >= *target_len_) {
      const std::uint8_t forced = buf_[pos + n_ - 1 - *target_len_];
      if (diamond_required < 0 || (diamond_required == 1) == (forced == kDiamond)) {
        try_extend(forced, key);
      }
      return;
    }

    if (diamond_required != 0) {
      try_extend(kDiamond, key);
      if (stopped_ || diamond_required == 1) {
        return;
      }
    }
    int top = a_ - 1;
    if (cfg_.canonicalize) {
      top = std::min(top, max_letter_.back() + 1);
    }
    for (int l = 0; l <= top && !stopped_; ++l) {
      try_extend(static_cast<std::uint8_t>(l), key);
    }
  }

  const WordContext& ctx_;
  const SearchConfig& cfg_;
  int a_;
  std::size_t n_;
  Rank word_count_;
  bool structural_;
  bool track_chars_;
  bool sparse_;
  std::vector<Rank> power_;
  std::size_t max_len_ = 0;
  std::optional<std::size_t> target_len_;
  std::vector<std::optional<std::size_t>> saved_targets_;
  std::vector<Rank> place_;
  std::vector<std::uint8_t> buf_;
  std::vector<Character> chars_;
  std::vector<int> max_letter_;
  std::vector<std::uint8_t> mult_;
  Rank covered_ = 0;
  const Sink* sink_ = nullptr;
  const Split* split_ = nullptr;
  std::size_t split_depth_ = 0;
  bool stopped_ = false;
  SearchStats stats_;
};

}  // namespace detail

// Enumerates universal partial words for ctx under cfg, in lexicographic
// order of their encoding. With several workers the tree is split below a
// shallow prefix depth and the per-subtree results are stitched back in
// order, so output never depends on the worker count.
class Search {
public:
  using Sink = std::function<bool(const PartialWord&)>;

  Search(WordContext ctx, SearchConfig cfg) : ctx_(ctx), cfg_(std::move(cfg)) {
    if (cfg_.max_length && *cfg_.max_length < static_cast<std::size_t>(ctx_.n())) {
      throw Error("search: max_length must be >= n");
    }
    if (cfg_.fixed_frame && cfg_.fixed_frame->empty()) {
      throw Error("search: fixed frame must be nonempty");
    }
    if (cfg_.workers == 0) {
      throw Error("search: workers must be >= 1");
    }
    estimate_ = estimate_space(ctx_, cfg_);
    if (!cfg_.allow_over_budget && (estimate_.saturated || estimate_.as_double() > cfg_.budget)) {
      throw BudgetExceeded(estimate_, cfg_.budget);
    }
  }

  const SpaceEstimate& estimate() const noexcept { return estimate_; }
  const SearchStats& stats() const noexcept { return stats_; }

  // Streams results to `sink` until exhaustion, the configured limit, or the
  // sink returning false.
  void run(const Sink& sink) {
    std::size_t emitted = 0;
    const Sink limited = [&](const PartialWord& w) {
      if (cfg_.limit && emitted >= *cfg_.limit) {
        return false;
      }
      ++emitted;
      const bool more = sink(w);
      return more && !(cfg_.limit && emitted >= *cfg_.limit);
    };
    if (cfg_.limit && *cfg_.limit == 0) {
      return;
    }
    if (cfg_.workers <= 1) {
      detail::SearchEngine engine(ctx_, cfg_);
      engine.run({}, limited);
      stats_ = engine.stats();
      return;
    }
    run_parallel(limited);
  }

  std::vector<PartialWord> collect() {
    std::vector<PartialWord> out;
    run([&](const PartialWord& w) {
      out.push_back(w);
      return true;
    });
    return out;
  }

private:
  // A word found above the split depth, or a subtree root.
  using Item = std::variant<PartialWord, std::vector<std::uint8_t>>;

  void run_parallel(const Sink& sink) {
    const std::size_t split_depth = std::min<std::size_t>(static_cast<std::size_t>(ctx_.n()) + 2, 8);
    std::vector<Item> items;
    {
      detail::SearchEngine engine(ctx_, cfg_);
      const detail::SearchEngine::Sink collect_word = [&](const PartialWord& w) {
        items.emplace_back(w);
        return true;
      };
      const detail::SearchEngine::Split collect_prefix = [&](const std::vector<std::uint8_t>& prefix) {
        items.emplace_back(prefix);
      };
      engine.run({}, collect_word, split_depth, collect_prefix);
      stats_.nodes += engine.stats().nodes;
    }

    std::vector<std::vector<PartialWord>> results(items.size());
    std::vector<SearchStats> item_stats(items.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        const auto* prefix = std::get_if<std::vector<std::uint8_t>>(&items[i]);
        if (prefix == nullptr) {
          continue;
        }
        detail::SearchEngine engine(ctx_, cfg_);
        const detail::SearchEngine::Sink keep = [&](const PartialWord& w) {
          results[i].push_back(w);
          return !(cfg_.limit && results[i].size() >= *cfg_.limit);
        };
        engine.run(*prefix, keep);
        item_stats[i] = engine.stats();
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < cfg_.workers; ++t) {
      pool.emplace_back(worker);
    }
    pool.clear();

    for (std::size_t i = 0; i < items.size(); ++i) {
      stats_.nodes += item_stats[i].nodes;
      if (const auto* w = std::get_if<PartialWord>(&items[i])) {
        if (!sink(*w)) {
          return;
        }
        continue;
      }
      for (const PartialWord& w : results[i]) {
        if (!sink(w)) {
          return;
        }
      }
    }
  }

  WordContext ctx_;
  SearchConfig cfg_;
  SpaceEstimate estimate_;
  SearchStats stats_;
};

inline std::vector<PartialWord> search(const WordContext& ctx, const SearchConfig& cfg) {
  return Search(ctx, cfg).collect();
}

}  // namespace upword
