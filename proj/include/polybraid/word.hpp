#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace polybraid {

enum class Mode { semigroup, group };

/// A generator index together with a unit exponent. Generator indices are
/// 1-based; the alphabet bound is supplied by whoever consumes the word.
struct Letter {
  int generator = 1;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Word over an indexed alphabet.
///
/// Group-mode words are kept freely reduced at all times, so two group words
/// compare equal exactly when they are equal in the free group. Semigroup
/// words only carry positive letters. The empty semigroup word exists (the
/// context may supply an identity) but is reported by `flagged_empty()`.
class Word {
 public:
  Word() = default;  // empty group word
  Word(Mode mode, std::vector<Letter> letters);

  static Word identity(Mode mode = Mode::group) { return Word(mode, {}); }
  static Word generator(int index, Mode mode = Mode::group);
  /// Positive word g_{i1} g_{i2} ... from a list of indices.
  static Word from_indices(std::span<const int> indices, Mode mode = Mode::group);

  Mode mode() const { return mode_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool flagged_empty() const { return mode_ == Mode::semigroup && letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index occurring in the word, 0 for the empty word.
  int max_generator() const;

  /// Letters [pos, pos + len) as a word of the same mode (reduced in group mode).
  Word subword(std::size_t pos, std::size_t len) const;

  Word with_mode(Mode mode) const { return Word(mode, letters_); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.mode_ <=> b.mode_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  Mode mode_ = Mode::group;
  std::vector<Letter> letters_;
};

/// Stack-based free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, int p);
/// Exponent-sum vector of length n; component i-1 counts generator i.
std::vector<long long> abelianize(const Word& w, int n);

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace polybraid
