#pragma once

// Small random generators for property tests. Every test seeds its own engine
// so failures reproduce from the seed printed in the test name or message.

#include <random>
#include <vector>

#include "polybraid/polymatrix.hpp"
#include "polybraid/word.hpp"

namespace polybraid::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Letter sequence that is not necessarily reduced.
inline std::vector<Letter> raw_letters(Rng& rng, int generators, int max_len, bool positive = false) {
  std::vector<Letter> out(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (Letter& l : out) {
    l.generator = uniform(rng, 1, generators);
    l.exponent = positive || uniform(rng, 0, 1) == 0 ? 1 : -1;
  }
  return out;
}

inline Word group_word(Rng& rng, int generators, int max_len) {
  return Word(Mode::group, raw_letters(rng, generators, max_len));
}

inline Word positive_word(Rng& rng, int generators, int max_len, Mode mode = Mode::group) {
  return Word(mode, raw_letters(rng, generators, max_len, true));
}

inline PolyMatrix group_matrix(Rng& rng, int k, int generators, int max_len) {
  std::vector<Word> entries;
  for (int j = 0; j < k - 1; ++j) entries.push_back(group_word(rng, generators, max_len));
  return make_matrix(k, std::move(entries));
}

inline PolyMatrix letter_matrix(Rng& rng, int k, int generators) {
  std::vector<Word> entries;
  for (int j = 0; j < k - 1; ++j) entries.push_back(Word::generator(uniform(rng, 1, generators)));
  return make_matrix(k, std::move(entries));
}

}  // namespace polybraid::testgen
