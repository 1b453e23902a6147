#pragma once

// Alphabet, characters and partial words; the cover (factor) relation;
// windows and the base-a ranking of total words.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace upword {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

using Rank = std::uint64_t;

// Largest a^n the ranking supports. Coverage arrays are materialized at
// one byte per word, so this is also a memory ceiling.
inline constexpr Rank kMaxWordCount = Rank{1} << 40;

// base^exp if it does not exceed `limit`, otherwise nullopt.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                                std::uint64_t limit = kMaxWordCount) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) {
      return std::nullopt;
    }
    result *= base;
  }
  if (result > limit) {
    return std::nullopt;
  }
  return result;
}

class Alphabet {
public:
  static constexpr int kMinSize = 2;
  static constexpr int kMaxSize = 36;

  explicit Alphabet(int size) : size_(size) {
    if (size < kMinSize || size > kMaxSize) {
      throw Error("alphabet size must be in [2, 36], got " + std::to_string(size));
    }
  }

  int size() const noexcept { return size_; }
  bool contains(int letter) const noexcept { return letter >= 0 && letter < size_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  int size_;
};

// A letter 0..35 or the wildcard. Ordering puts the wildcard before every
// letter, which matches the ASCII order of the text encoding ('*' < '0' < 'a').
class Character {
public:
  static constexpr char kDiamondGlyph = '*';

  static constexpr Character diamond() noexcept { return Character(0); }

  static constexpr Character letter(int value) {
    if (value < 0 || value >= Alphabet::kMaxSize) {
      throw Error("letter value out of range: " + std::to_string(value));
    }
    return Character(static_cast<std::uint8_t>(value + 1));
  }

  constexpr bool is_diamond() const noexcept { return code_ == 0; }
  constexpr bool is_letter() const noexcept { return code_ != 0; }

  // Only meaningful for letters.
  constexpr int value() const noexcept { return static_cast<int>(code_) - 1; }

  constexpr char glyph() const noexcept {
    if (is_diamond()) {
      return kDiamondGlyph;
    }
    const int v = value();
    return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
  }

  static std::optional<Character> from_glyph(char c) noexcept {
    if (c == kDiamondGlyph) {
      return diamond();
    }
    if (c >= '0' && c <= '9') {
      return Character(static_cast<std::uint8_t>(c - '0' + 1));
    }
    if (c >= 'a' && c <= 'z') {
      return Character(static_cast<std::uint8_t>(c - 'a' + 11));
    }
    return std::nullopt;
  }

  friend constexpr auto operator<=>(const Character&, const Character&) = default;

private:
  constexpr explicit Character(std::uint8_t code) noexcept : code_(code) {}

  std::uint8_t code_;
};

class PartialWord {
public:
  using const_iterator = std::vector<Character>::const_iterator;

  explicit PartialWord(Alphabet alphabet) : alphabet_(alphabet) {}

  PartialWord(Alphabet alphabet, std::vector<Character> chars)
      : alphabet_(alphabet), chars_(std::move(chars)) {
    for (const Character c : chars_) {
      if (c.is_letter() && !alphabet_.contains(c.value())) {
        throw Error("letter " + std::string(1, c.glyph()) + " outside alphabet of size " +
                    std::to_string(alphabet_.size()));
      }
    }
  }

  // Total word from letter values.
  static PartialWord from_letters(Alphabet alphabet, std::span<const int> letters) {
    std::vector<Character> chars;
    chars.reserve(letters.size());
    for (const int l : letters) {
      chars.push_back(Character::letter(l));
    }
    return PartialWord(alphabet, std::move(chars));
  }

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return chars_.size(); }
  bool empty() const noexcept { return chars_.empty(); }
  const Character& operator[](std::size_t i) const { return chars_[i]; }
  const_iterator begin() const noexcept { return chars_.begin(); }
  const_iterator end() const noexcept { return chars_.end(); }
  std::span<const Character> chars() const noexcept { return chars_; }

  std::size_t diamond_count() const noexcept {
    std::size_t count = 0;
    for (const Character c : chars_) {
      count += c.is_diamond() ? 1 : 0;
    }
    return count;
  }

  bool is_total() const noexcept { return diamond_count() == 0; }

  PartialWord substr(std::size_t pos, std::size_t len) const {
    const auto first = chars_.begin() + static_cast<std::ptrdiff_t>(pos);
    return PartialWord(alphabet_, std::vector<Character>(first, first + static_cast<std::ptrdiff_t>(len)));
  }

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

  // Lexicographic by characters; alphabets are expected to agree.
  friend std::strong_ordering operator<=>(const PartialWord& lhs, const PartialWord& rhs) {
    return std::lexicographical_compare_three_way(lhs.chars_.begin(), lhs.chars_.end(),
                                                  rhs.chars_.begin(), rhs.chars_.end());
  }

private:
  Alphabet alphabet_;
  std::vector<Character> chars_;
};

// The (A, n) pair: alphabet plus window length, with a^n precomputed.
class WordContext {
public:
  WordContext(Alphabet alphabet, int n) : alphabet_(alphabet), n_(n) {
    if (n < 1) {
      throw Error("window length n must be >= 1");
    }
    const auto count = checked_pow(static_cast<std::uint64_t>(alphabet.size()), static_cast<std::uint64_t>(n));
    if (!count) {
      throw Error("a^n exceeds the supported 2^40 words (a=" + std::to_string(alphabet.size()) +
                  ", n=" + std::to_string(n) + ")");
    }
    word_count_ = *count;
  }

  Alphabet alphabet() const noexcept { return alphabet_; }
  int a() const noexcept { return alphabet_.size(); }
  int n() const noexcept { return n_; }
  Rank word_count() const noexcept { return word_count_; }

private:
  Alphabet alphabet_;
  int n_;
  Rank word_count_ = 0;
};

inline PartialWord parse_partial_word(std::string_view text, Alphabet alphabet) {
  if (text.empty()) {
    throw ParseError("empty partial word");
  }
  std::vector<Character> chars;
  chars.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = Character::from_glyph(text[i]);
    if (!c) {
      throw ParseError("invalid character '" + std::string(1, text[i]) + "' at position " + std::to_string(i));
    }
    if (c->is_letter() && !alphabet.contains(c->value())) {
      throw ParseError("letter '" + std::string(1, text[i]) + "' at position " + std::to_string(i) +
                       " is outside the alphabet of size " + std::to_string(alphabet.size()));
    }
    chars.push_back(*c);
  }
  return PartialWord(alphabet, std::move(chars));
}

inline std::string format_partial_word(const PartialWord& w) {
  std::string out;
  out.reserve(w.size());
  for (const Character c : w) {
    out.push_back(c.glyph());
  }
  return out;
}

// u ⊂ v: some alignment where every letter of v equals the character of u
// above it. A diamond of v matches anything; a diamond of u only matches a
// diamond of v.
inline bool is_factor(const PartialWord& u, const PartialWord& v) {
  if (u.alphabet() != v.alphabet()) {
    throw Error("is_factor: alphabet mismatch");
  }
  if (u.empty()) {
    throw Error("is_factor: u must be nonempty");
  }
  if (u.size() > v.size()) {
    return false;
  }
  for (std::size_t offset = 0; offset + u.size() <= v.size(); ++offset) {
    bool match = true;
    for (std::size_t j = 0; j < u.size() && match; ++j) {
      const Character cv = v[offset + j];
      match = cv.is_diamond() || cv == u[j];
    }
    if (match) {
      return true;
    }
  }
  return false;
}

inline std::vector<PartialWord> windows(const PartialWord& w, int n) {
  if (n < 1) {
    throw Error("windows: n must be >= 1");
  }
  std::vector<PartialWord> out;
  const auto len = static_cast<std::size_t>(n);
  if (w.size() < len) {
    return out;
  }
  out.reserve(w.size() - len + 1);
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    out.push_back(w.substr(i, len));
  }
  return out;
}

inline Rank word_rank(const PartialWord& v, const WordContext& ctx) {
  if (v.alphabet() != ctx.alphabet()) {
    throw Error("word_rank: alphabet mismatch");
  }
  if (v.size() != static_cast<std::size_t>(ctx.n())) {
    throw Error("word_rank: expected length " + std::to_string(ctx.n()) + ", got " + std::to_string(v.size()));
  }
  Rank rank = 0;
  for (const Character c : v) {
    if (c.is_diamond()) {
      throw Error("word_rank: word contains a diamond");
    }
    rank = rank * static_cast<Rank>(ctx.a()) + static_cast<Rank>(c.value());
  }
  return rank;
}

inline PartialWord word_unrank(Rank rank, const WordContext& ctx) {
  if (rank >= ctx.word_count()) {
    throw Error("word_unrank: rank out of range");
  }
  const auto a = static_cast<Rank>(ctx.a());
  std::vector<int> letters(static_cast<std::size_t>(ctx.n()));
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    *it = static_cast<int>(rank % a);
    rank /= a;
  }
  return PartialWord::from_letters(ctx.alphabet(), letters);
}

namespace detail {

// Calls visit(rank) for every total word covered by `window` (length n),
// in ascending rank order. Returns false as soon as visit does.
template <class Visit>
bool for_each_covered_rank(std::span<const Character> window, int a, Visit&& visit) {
  const auto base_a = static_cast<Rank>(a);
  Rank base = 0;
  Rank place = 1;
  // Diamond place values, least significant first.
  Rank diamond_places[64];
  int diamonds = 0;
  for (auto it = window.rbegin(); it != window.rend(); ++it) {
    if (it->is_diamond()) {
      diamond_places[diamonds++] = place;
    } else {
      base += place * static_cast<Rank>(it->value());
    }
    place *= base_a;
  }
  int digits[64] = {};
  Rank rank = base;
  while (true) {
    if (!visit(rank)) {
      return false;
    }
    int k = 0;
    while (k < diamonds) {
      rank += diamond_places[k];
      if (++digits[k] < a) {
        break;
      }
      rank -= base_a * diamond_places[k];
      digits[k] = 0;
      ++k;
    }
    if (k == diamonds) {
      return true;
    }
  }
}

}  // namespace detail

inline std::vector<Rank> covered_words(const PartialWord& win, const WordContext& ctx) {
  if (win.alphabet() != ctx.alphabet()) {
    throw Error("covered_words: alphabet mismatch");
  }
  if (win.size() != static_cast<std::size_t>(ctx.n())) {
    throw Error("covered_words: window length must equal n");
  }
  std::vector<Rank> out;
  detail::for_each_covered_rank(win.chars(), ctx.a(), [&](Rank r) {
    out.push_back(r);
    return true;
  });
  return out;
}

}  // namespace upword
