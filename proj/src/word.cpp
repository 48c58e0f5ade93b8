#include "polybraid/word.hpp"

#include <algorithm>
#include <string>

#include "polybraid/error.hpp"

namespace polybraid {

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().generator == l.generator &&
        out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(Mode mode, std::vector<Letter> letters) : mode_(mode) {
  for (const Letter& l : letters) {
    if (l.generator < 1) {
      throw error(errc::invalid_argument,
                  "generator index must be >= 1, got " + std::to_string(l.generator));
    }
    if (l.exponent != 1 && l.exponent != -1) {
      throw error(errc::invalid_argument, "letter exponent must be +1 or -1");
    }
    if (mode == Mode::semigroup && l.exponent != 1) {
      throw error(errc::mode_mismatch, "semigroup words cannot contain inverse letters");
    }
  }
  letters_ = mode == Mode::group ? free_reduce(letters) : std::move(letters);
}

Word Word::generator(int index, Mode mode) { return Word(mode, {Letter{index, 1}}); }

Word Word::from_indices(std::span<const int> indices, Mode mode) {
  std::vector<Letter> ls;
  ls.reserve(indices.size());
  for (int i : indices) ls.push_back({i, 1});
  return Word(mode, std::move(ls));
}

int Word::max_generator() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size() || len > letters_.size() - pos) {
    throw error(errc::invalid_argument, "subword range out of bounds");
  }
  return Word(mode_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                         letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word concat(const Word& a, const Word& b) {
  if (a.mode() != b.mode()) {
    throw error(errc::mode_mismatch, "cannot concatenate semigroup and group words");
  }
  std::vector<Letter> ls(a.letters().begin(), a.letters().end());
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return Word(a.mode(), std::move(ls));
}

Word invert(const Word& w) {
  if (w.mode() != Mode::group) {
    throw error(errc::mode_mismatch, "semigroup words have no inverse");
  }
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(it->inverse());
  return Word(Mode::group, std::move(ls));
}

Word power(const Word& w, int p) {
  if (p < 0) {
    if (w.mode() == Mode::semigroup) {
      throw error(errc::mode_mismatch, "negative power of a semigroup word");
    }
    return power(invert(w), -p);
  }
  std::vector<Letter> ls;
  ls.reserve(w.size() * static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) ls.insert(ls.end(), w.letters().begin(), w.letters().end());
  return Word(w.mode(), std::move(ls));
}

std::vector<long long> abelianize(const Word& w, int n) {
  if (n < 0) throw error(errc::invalid_argument, "alphabet size must be non-negative");
  std::vector<long long> v(static_cast<std::size_t>(n), 0);
  for (const Letter& l : w.letters()) {
    if (l.generator > n) {
      throw error(errc::invalid_argument, "generator " + std::to_string(l.generator) +
                                              " outside alphabet of size " + std::to_string(n));
    }
    v[static_cast<std::size_t>(l.generator - 1)] += l.exponent;
  }
  return v;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over signed generator indices
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(w.mode());
  for (const Letter& l : w.letters()) {
    auto x = static_cast<std::uint64_t>(static_cast<std::int64_t>(l.generator * l.exponent));
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace polybraid
