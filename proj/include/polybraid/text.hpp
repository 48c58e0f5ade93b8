#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polybraid/word.hpp"

namespace polybraid {

/// Display alphabet. Only affects how generator indices are printed.
enum class Alphabet {
  s,        // s1 s2^-1
  sigma,    // sigma1 sigma2^-1
  r,        // r1 r2^-1
  g,        // g1 g2^-1
  letters,  // ab^-1c  (generator i is the i-th lowercase letter)
};

Alphabet parse_alphabet(std::string_view name);

/// Formats a word; the identity prints as "e".
std::string format_word(const Word& w, Alphabet alphabet = Alphabet::s);

/// Parses whitespace-separated tokens `<prefix><i>` or `<prefix><i>^<p>` with
/// prefix one of s, sigma, r, g. `e`, `1` and the empty string denote the
/// identity. Powers expand into unit letters.
Word parse_word(std::string_view text, Mode mode = Mode::group);

/// Parses letter words such as `abca`, `c^-1b^-1`; `1` or empty is the
/// identity. Letter `a` is generator 1.
Word parse_letter_word(std::string_view text, Mode mode = Mode::group);

/// Splits on a separator character, trimming surrounding whitespace.
std::vector<std::string> split_trimmed(std::string_view text, char sep);

std::string_view trim(std::string_view text);

}  // namespace polybraid
