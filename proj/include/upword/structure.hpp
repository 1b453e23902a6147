#pragma once

// Frames, diamondicity, borders and periods, (pseudo)cyclicity and the
// symmetry transforms (reversal, letter relabeling).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "upword/word.hpp"

namespace upword {

enum class Mark : std::uint8_t { solid, diamond };

class Frame {
public:
  static constexpr char kSolidGlyph = '_';
  static constexpr char kDiamondGlyph = '*';

  Frame() = default;
  explicit Frame(std::vector<Mark> marks) : marks_(std::move(marks)) {}

  std::size_t size() const noexcept { return marks_.size(); }
  bool empty() const noexcept { return marks_.empty(); }
  Mark operator[](std::size_t i) const { return marks_[i]; }
  auto begin() const noexcept { return marks_.begin(); }
  auto end() const noexcept { return marks_.end(); }
  std::span<const Mark> marks() const noexcept { return marks_; }

  std::size_t diamond_count() const noexcept {
    return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), Mark::diamond));
  }

  friend bool operator==(const Frame&, const Frame&) = default;
  friend auto operator<=>(const Frame&, const Frame&) = default;

private:
  std::vector<Mark> marks_;
};

inline Frame parse_frame(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty frame");
  }
  std::vector<Mark> marks;
  marks.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case Frame::kSolidGlyph:
        marks.push_back(Mark::solid);
        break;
      case Frame::kDiamondGlyph:
        marks.push_back(Mark::diamond);
        break;
      default:
        throw ParseError("invalid frame character '" + std::string(1, text[i]) + "' at position " +
                         std::to_string(i));
    }
  }
  return Frame(std::move(marks));
}

inline std::string format_frame(const Frame& f) {
  std::string out;
  out.reserve(f.size());
  for (const Mark m : f) {
    out.push_back(m == Mark::solid ? Frame::kSolidGlyph : Frame::kDiamondGlyph);
  }
  return out;
}

inline Frame frame_of(const PartialWord& w) {
  std::vector<Mark> marks;
  marks.reserve(w.size());
  for (const Character c : w) {
    marks.push_back(c.is_diamond() ? Mark::diamond : Mark::solid);
  }
  return Frame(std::move(marks));
}

// Frame of the first length-n window.
inline Frame first_window_frame(const PartialWord& w, int n) {
  if (n < 1 || w.size() < static_cast<std::size_t>(n)) {
    throw Error("first_window_frame: word shorter than n");
  }
  return frame_of(w.substr(0, static_cast<std::size_t>(n)));
}

// Common diamond count of all length-n windows, when there is one.
class Diamondicity {
public:
  static Diamondicity undefined() noexcept { return Diamondicity(); }
  static Diamondicity defined(int d) noexcept { return Diamondicity(d); }

  bool is_defined() const noexcept { return value_.has_value(); }
  int value() const { return value_.value(); }
  std::optional<int> as_optional() const noexcept { return value_; }

  friend bool operator==(const Diamondicity&, const Diamondicity&) = default;

private:
  Diamondicity() = default;
  explicit Diamondicity(int d) : value_(d) {}

  std::optional<int> value_;
};

inline Diamondicity diamondicity_of(const PartialWord& w, int n) {
  if (n < 1 || w.size() < static_cast<std::size_t>(n)) {
    throw Error("diamondicity_of: word shorter than n");
  }
  const auto len = static_cast<std::size_t>(n);
  int count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    count += w[i].is_diamond() ? 1 : 0;
  }
  const int first = count;
  for (std::size_t i = len; i < w.size(); ++i) {
    count += (w[i].is_diamond() ? 1 : 0) - (w[i - len].is_diamond() ? 1 : 0);
    if (count != first) {
      return Diamondicity::undefined();
    }
  }
  return Diamondicity::defined(first);
}

inline bool frame_has_period(const Frame& f, int p) {
  if (p < 1) {
    throw Error("frame_has_period: period must be >= 1");
  }
  const auto step = static_cast<std::size_t>(p);
  for (std::size_t i = step; i < f.size(); ++i) {
    if (f[i] != f[i - step]) {
      return false;
    }
  }
  return true;
}

namespace detail {

// KMP failure function: fail[i] is the longest proper border of s[0..i].
template <class T>
std::vector<std::size_t> failure_function(std::span<const T> s) {
  std::vector<std::size_t> fail(s.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    while (k > 0 && !(s[i] == s[k])) {
      k = fail[k - 1];
    }
    if (s[i] == s[k]) {
      ++k;
    }
    fail[i] = k;
  }
  return fail;
}

// All border lengths in [1, |s|-1], ascending.
template <class T>
std::vector<std::size_t> border_lengths(std::span<const T> s) {
  std::vector<std::size_t> out;
  if (s.empty()) {
    return out;
  }
  const auto fail = failure_function(s);
  for (std::size_t k = fail.back(); k > 0; k = fail[k - 1]) {
    out.push_back(k);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Length of the shortest root r with s = r^(|s|/|r|).
template <class T>
std::size_t primitive_root_length(std::span<const T> s) {
  if (s.empty()) {
    return 0;
  }
  const auto fail = failure_function(s);
  const std::size_t period = s.size() - fail.back();
  return s.size() % period == 0 ? period : s.size();
}

}  // namespace detail

// Borders under exact equality over the extended alphabet (a diamond only
// equals a diamond).
inline std::vector<std::size_t> border_lengths(const PartialWord& w) {
  return detail::border_lengths(w.chars());
}

// Every p in [1, |w|] that is a period, including |w| itself.
inline std::vector<std::size_t> periods_of(const PartialWord& w) {
  if (!w.is_total()) {
    throw Error("periods_of: word contains a diamond");
  }
  std::vector<std::size_t> out;
  const auto borders = border_lengths(w);
  for (auto it = borders.rbegin(); it != borders.rend(); ++it) {
    out.push_back(w.size() - *it);
  }
  if (!w.empty()) {
    out.push_back(w.size());
  }
  return out;
}

inline bool is_pseudocyclic(const PartialWord& w, int n) {
  if (n < 1 || w.size() < static_cast<std::size_t>(n)) {
    throw Error("is_pseudocyclic: word shorter than n");
  }
  const auto k = static_cast<std::size_t>(n - 1);
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end() - static_cast<std::ptrdiff_t>(k));
}

// Pseudocyclic with the leading and trailing n-1 blocks not overlapping.
inline bool is_cyclic(const PartialWord& w, int n) {
  return is_pseudocyclic(w, n) && w.size() >= 2 * static_cast<std::size_t>(n) - 2;
}

struct FrameRoot {
  Frame root;
  std::size_t repetitions = 0;
};

inline FrameRoot minimal_frame_root(const Frame& f) {
  if (f.empty()) {
    throw Error("minimal_frame_root: empty frame");
  }
  const std::size_t len = detail::primitive_root_length(f.marks());
  return FrameRoot{Frame(std::vector<Mark>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(len))), f.size() / len};
}

// Left cyclic shift by i positions.
inline Frame cyclic_shift(const Frame& f, std::size_t i) {
  std::vector<Mark> marks(f.begin(), f.end());
  if (!marks.empty()) {
    std::rotate(marks.begin(), marks.begin() + static_cast<std::ptrdiff_t>(i % marks.size()), marks.end());
  }
  return Frame(std::move(marks));
}

inline PartialWord reverse(const PartialWord& w) {
  return PartialWord(w.alphabet(), std::vector<Character>(w.chars().rbegin(), w.chars().rend()));
}

// Letter l becomes perm[l]; diamonds stay put.
inline PartialWord relabel(const PartialWord& w, std::span<const int> perm) {
  const int a = w.alphabet().size();
  if (perm.size() != static_cast<std::size_t>(a)) {
    throw Error("relabel: permutation size must equal alphabet size");
  }
  std::vector<bool> seen(perm.size(), false);
  for (const int image : perm) {
    if (image < 0 || image >= a || seen[static_cast<std::size_t>(image)]) {
      throw Error("relabel: not a bijection on the alphabet");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
  std::vector<Character> chars;
  chars.reserve(w.size());
  for (const Character c : w) {
    chars.push_back(c.is_diamond() ? c : Character::letter(perm[static_cast<std::size_t>(c.value())]));
  }
  return PartialWord(w.alphabet(), std::move(chars));
}

}  // namespace upword
