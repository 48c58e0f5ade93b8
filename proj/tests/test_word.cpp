#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "polybraid/error.hpp"
#include "polybraid/text.hpp"
#include "polybraid/word.hpp"

using namespace polybraid;

namespace {

Word w(std::string_view text) { return parse_word(text); }
Word sg(std::string_view letters) { return parse_letter_word(letters, Mode::semigroup); }

/// Removes one cancelling adjacent pair chosen at random until none is left.
std::vector<Letter> reduce_in_random_order(std::vector<Letter> ls, testgen::Rng& rng) {
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i] == ls[i + 1].inverse()) spots.push_back(i);
    }
    if (spots.empty()) return ls;
    const std::size_t at = spots[static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(spots.size()) - 1))];
    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(at), ls.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

}  // namespace

TEST_CASE("concat reduces in group mode") {
  CHECK(concat(w("s1 s2"), w("s2^-1 s3")) == w("s1 s3"));
  CHECK(concat(sg("ab"), sg("ca")) == sg("abca"));
  CHECK(concat(w("s1 s2^-1"), Word::identity()) == w("s1 s2^-1"));
  CHECK_THROWS_AS(concat(sg("a"), w("s1")), error);
}

TEST_CASE("invert reverses and negates") {
  CHECK(invert(w("s1 s2")) == w("s2^-1 s1^-1"));
  CHECK(invert(Word::identity()).empty());
  CHECK(invert(w("s1^-1")) == w("s1"));
  CHECK_THROWS_AS(invert(sg("ab")), error);
}

TEST_CASE("power") {
  CHECK(power(w("s1"), 3) == w("s1 s1 s1"));
  CHECK(power(w("s1 s2"), 0).empty());
  CHECK(power(w("s1"), -2) == w("s1^-1 s1^-1"));
  CHECK(power(sg("ab"), 2) == sg("abab"));
  CHECK_THROWS_AS(power(sg("a"), -1), error);
}

TEST_CASE("abelianize counts exponent sums") {
  CHECK(abelianize(w("s1 s2 s1"), 3) == std::vector<long long>{2, 1, 0});
  CHECK(abelianize(w("s1 s2^-1"), 2) == std::vector<long long>{1, -1});
  CHECK(abelianize(Word::identity(), 4) == std::vector<long long>{0, 0, 0, 0});
  CHECK_THROWS_AS(abelianize(w("s3"), 2), error);
}

TEST_CASE("word invariants reject bad letters") {
  CHECK_THROWS_AS(Word(Mode::group, {{0, 1}}), error);
  CHECK_THROWS_AS(Word(Mode::group, {{1, 2}}), error);
  CHECK_THROWS_AS(Word(Mode::semigroup, {{1, -1}}), error);
  CHECK(Word(Mode::group, {{1, 1}, {1, -1}}).empty());
  CHECK(Word::identity(Mode::semigroup).flagged_empty());
  CHECK_FALSE(Word::identity(Mode::group).flagged_empty());
}

TEST_CASE("text round trip") {
  CHECK(format_word(w("s1 s2^-1 s3^2")) == "s1 s2^-1 s3 s3");
  CHECK(format_word(Word::identity()) == "e");
  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK(parse_word("sigma2 r1^-1 g3") == w("s2 s1^-1 s3"));
  CHECK(format_word(w("s1 s2^-1"), Alphabet::letters) == "ab^-1");
  CHECK(parse_letter_word("c^-1b^-1") == w("s3^-1 s2^-1"));
  CHECK_THROWS_AS(parse_word("s0"), error);
  CHECK_THROWS_AS(parse_word("t1"), error);
}

TEST_CASE("property: concat is associative") {
  testgen::Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const Word a = testgen::group_word(rng, 3, 8);
    const Word b = testgen::group_word(rng, 3, 8);
    const Word c = testgen::group_word(rng, 3, 8);
    REQUIRE(concat(concat(a, b), c) == concat(a, concat(b, c)));
  }
}

TEST_CASE("property: free reduction is confluent") {
  testgen::Rng rng(202);
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<Letter> raw = testgen::raw_letters(rng, 2, 16);
    const std::vector<Letter> stack = free_reduce(raw);
    for (int order = 0; order < 4; ++order) REQUIRE(reduce_in_random_order(raw, rng) == stack);
  }
}

TEST_CASE("property: abelianize is a homomorphism and inversion an involution") {
  testgen::Rng rng(303);
  for (int trial = 0; trial < 500; ++trial) {
    const Word a = testgen::group_word(rng, 4, 10);
    const Word b = testgen::group_word(rng, 4, 10);
    const auto va = abelianize(a, 4);
    const auto vb = abelianize(b, 4);
    const auto vab = abelianize(concat(a, b), 4);
    const auto vinv = abelianize(invert(a), 4);
    for (std::size_t i = 0; i < 4; ++i) {
      REQUIRE(vab[i] == va[i] + vb[i]);
      REQUIRE(vinv[i] == -va[i]);
    }
    REQUIRE(invert(invert(a)) == a);
    REQUIRE(concat(invert(a), a).empty());
  }
}
