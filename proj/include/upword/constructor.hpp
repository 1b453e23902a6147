#pragma once

// Explicit constructions: the n = 4 family for even alphabets, and the
// de Bruijn / universal word baseline.

#include <cstddef>
#include <vector>

#include "upword/word.hpp"

namespace upword {

// Three letter sequences of length a^3/4 whose i-th entries form the solid
// blocks of the n = 4 construction.
struct XYZSequences {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> z;
};

namespace detail {

inline int require_even_alphabet(int a) {
  if (a < 2 || a % 2 != 0) {
    throw Error("n = 4 construction needs an even alphabet size >= 2, got " + std::to_string(a));
  }
  if (a > Alphabet::kMaxSize) {
    throw Error("alphabet size exceeds 36");
  }
  return a;
}

}  // namespace detail

inline XYZSequences xyz_sequences(int a) {
  detail::require_even_alphabet(a);
  const std::size_t count = static_cast<std::size_t>(a) * a * a / 4;
  const int half_square = a * a / 2;
  XYZSequences s;
  s.x.reserve(count);
  s.y.reserve(count);
  s.z.reserve(count);
  // Positions are 1-based, so parity arguments read the same as for the
  // index i in [a^3/4].
  for (std::size_t i = 1; i <= count; ++i) {
    const auto zero_based = static_cast<int>(i - 1);
    const int parity = zero_based % 2;
    // x: blocks of a^2/2 letters alternating (2b, 2b+1).
    s.x.push_back(2 * (zero_based / half_square) + parity);
    // y: blocks of a letters alternating (2c, 2c+1), period a^2/2.
    s.y.push_back(2 * ((zero_based % half_square) / a) + parity);
    // z: 1,0,3,2,...,a-1,a-2 with period a.
    s.z.push_back((zero_based % a) ^ 1);
  }
  return s;
}

// w_1 * w_2 * ... * w_{a^3/4} * w_1 with w_i = x_i y_i z_i.
inline PartialWord construct_n4(int a) {
  const XYZSequences s = xyz_sequences(a);
  const Alphabet alphabet(a);
  std::vector<Character> chars;
  chars.reserve(static_cast<std::size_t>(a) * a * a + 3);
  const auto block = [&](std::size_t i) {
    chars.push_back(Character::letter(s.x[i]));
    chars.push_back(Character::letter(s.y[i]));
    chars.push_back(Character::letter(s.z[i]));
  };
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    block(i);
    chars.push_back(Character::diamond());
  }
  block(0);
  return PartialWord(alphabet, std::move(chars));
}

// Lexicographically least de Bruijn sequence: the concatenation, in
// lexicographic order, of the Lyndon words whose length divides n.
inline PartialWord debruijn_sequence(int a, int n) {
  const WordContext ctx(Alphabet(a), n);
  std::vector<int> out;
  out.reserve(ctx.word_count());
  std::vector<int> work(static_cast<std::size_t>(n) + 1, 0);
  const auto un = static_cast<std::size_t>(n);

  const auto generate = [&](auto&& self, std::size_t t, std::size_t p) -> void {
    if (t > un) {
      if (un % p == 0) {
        out.insert(out.end(), work.begin() + 1, work.begin() + 1 + static_cast<std::ptrdiff_t>(p));
      }
      return;
    }
    work[t] = work[t - p];
    self(self, t + 1, p);
    for (int j = work[t - p] + 1; j < a; ++j) {
      work[t] = j;
      self(self, t + 1, t);
    }
  };
  generate(generate, 1, 1);
  return PartialWord::from_letters(ctx.alphabet(), out);
}

// The de Bruijn sequence read linearly, with its first n-1 letters repeated.
inline PartialWord universal_word(int a, int n) {
  const PartialWord db = debruijn_sequence(a, n);
  std::vector<Character> chars(db.begin(), db.end());
  for (int i = 0; i + 1 < n; ++i) {
    chars.push_back(db[static_cast<std::size_t>(i)]);
  }
  return PartialWord(db.alphabet(), std::move(chars));
}

}  // namespace upword
