#include <doctest.h>

#include <algorithm>
#include <set>

#include "polybraid/error.hpp"
#include "polybraid/permutation.hpp"
#include "polybraid/regularity.hpp"

using namespace polybraid;

namespace {

/// S3 as a Cayley table, elements ordered by their image lists.
CayleyTable symmetric3(std::vector<Permutation>* elements_out = nullptr) {
  std::vector<int> im{1, 2, 3};
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      const Permutation p = elems[a] * elems[b];
      table[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  }
  if (elements_out) *elements_out = elems;
  return CayleyTable(table, 0);
}

CayleyTable left_zero(int m) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a;
  }
  return CayleyTable(t);
}

/// {0, 1} under multiplication, with 1 as identity.
CayleyTable boolean_monoid() { return CayleyTable({{0, 0}, {0, 1}}, 1); }

/// Every (k-1)-tuple of the table, lexicographic.
std::vector<std::vector<int>> all_tuples(int order, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(size), 0);
  while (true) {
    out.push_back(t);
    std::size_t pos = t.size();
    while (pos > 0) {
      --pos;
      if (++t[pos] < order) break;
      t[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<CayleyTable> small_tables() {
  return {CayleyTable::cyclic(1), CayleyTable::cyclic(2), CayleyTable::cyclic(3), CayleyTable::cyclic(4),
          symmetric3(), left_zero(3), boolean_monoid()};
}

}  // namespace

TEST_CASE("schemas from the generic matrix") {
  CHECK(format_schema(idempotence_relations(3, 1)) == "aba = a\nbab = b\n");
  CHECK(format_schema(idempotence_relations(3, 1), Alphabet::g) == "g1 g2 g1 = g1\ng2 g1 g2 = g2\n");
  CHECK(format_schema(idempotence_relations(4, 1)) == "abca = a\nbcab = b\ncabc = c\n");
  CHECK(format_schema(idempotence_relations(4, 2)) == "abcabca = a\nbcabcab = b\ncabcabc = c\n");
  CHECK_THROWS_AS(idempotence_relations(2, 1), error);
  CHECK_THROWS_AS(idempotence_relations(3, 0), error);
}

TEST_CASE("schema structure") {
  for (int k = 3; k <= 6; ++k) {
    for (int ell = 1; ell <= 3; ++ell) {
      const RegularitySchema s = idempotence_relations(k, ell);
      REQUIRE(s.equations.size() == static_cast<std::size_t>(k - 1));
      for (std::size_t j = 0; j < s.equations.size(); ++j) {
        const auto& eq = s.equations[j];
        CHECK(eq.generator == static_cast<int>(j) + 1);
        REQUIRE(eq.lhs.size() == static_cast<std::size_t>(ell * (k - 1) + 1));
        for (std::size_t pos = 0; pos < eq.lhs.size(); ++pos) {
          CHECK(eq.lhs[pos].generator == static_cast<int>((j + pos) % static_cast<std::size_t>(k - 1)) + 1);
        }
      }
    }
  }
}

TEST_CASE("Cayley table parsing and validation") {
  const CayleyTable t = CayleyTable::parse("# Z2\norder 2 identity 0\n0 1\n1 0\n");
  CHECK(t.order() == 2);
  CHECK(t.identity() == 0);
  CHECK(t.commutative());
  CHECK(CayleyTable::parse("order 1\n0\n").identity() == std::nullopt);
  CHECK_THROWS_AS(CayleyTable::parse("order 2\n0 1\n"), error);
  CHECK_THROWS_AS(CayleyTable::parse("size 2\n0 1\n1 0\n"), error);
  CHECK_THROWS_AS(CayleyTable::parse("order 2\n0 x\n1 0\n"), error);
  // a*b = b+1 mod 3 is not associative
  CHECK_THROWS_AS(CayleyTable({{1, 2, 0}, {1, 2, 0}, {1, 2, 0}}), error);
  CHECK_THROWS_AS(CayleyTable({{0, 1}, {1, 0}}, 1), error);
  CHECK_FALSE(symmetric3().commutative());
}

TEST_CASE("regular tuples in Z2") {
  const CayleyTable z2 = CayleyTable::cyclic(2);
  CHECK(is_regular_tuple(z2, std::vector<int>{0, 0, 0}, 4));
  CHECK(is_regular_tuple(z2, std::vector<int>{1, 1, 0}, 4));
  CHECK_FALSE(is_regular_tuple(z2, std::vector<int>{1, 0, 0}, 4));
  CHECK_THROWS_AS(is_regular_tuple(z2, std::vector<int>{0, 0}, 4), error);
  CHECK_THROWS_AS(is_regular_tuple(z2, std::vector<int>{0, 2, 0}, 4), error);
}

TEST_CASE("idempotent matrices") {
  CHECK(idempotent_matrices(CayleyTable::cyclic(1), 3) == std::vector<std::vector<int>>{{0, 0}});
  CHECK(idempotent_matrices(CayleyTable::cyclic(2), 3) == std::vector<std::vector<int>>{{0, 0}, {1, 1}});

  std::vector<Permutation> elems;
  const CayleyTable s3 = symmetric3(&elems);
  std::vector<std::vector<int>> expected;
  for (int a = 0; a < 6; ++a) {
    const Permutation inv = elems[static_cast<std::size_t>(a)].inverse();
    const int b = static_cast<int>(std::find(elems.begin(), elems.end(), inv) - elems.begin());
    expected.push_back({a, b});
  }
  CHECK(idempotent_matrices(s3, 3) == expected);
  CHECK_THROWS_AS(idempotent_matrices(CayleyTable::cyclic(11), 7), error);
}

TEST_CASE("closure on commutative and non-commutative tables") {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 3; k <= 4; ++k) CHECK(closure_violations(CayleyTable::cyclic(m), k).violations.empty());
  }
  const CayleyTable s3 = symmetric3();
  const ClosureReport r = closure_violations(s3, 3);
  CHECK(r.idempotents == 6);
  CHECK(r.products_checked == 216);
  REQUIRE_FALSE(r.violations.empty());
  for (const auto& witness : r.violations) {
    REQUIRE(witness.size() == 3);
    for (const auto& t : witness) CHECK(is_regular_tuple(s3, t, 3));
    CHECK_FALSE(is_regular_tuple(s3, mu_k_tuples(s3, witness), 3));
  }
}

TEST_CASE("closure is independent of the thread count") {
  const CayleyTable s3 = symmetric3();
  const ClosureReport one = closure_violations(s3, 3);
  for (unsigned threads : {2u, 3u, 8u}) {
    ClosureOptions o;
    o.threads = threads;
    const ClosureReport many = closure_violations(s3, 3, o);
    CHECK(many.violations == one.violations);
    CHECK(many.products_checked == one.products_checked);
  }
}

TEST_CASE("closure sampling beyond the guard") {
  const CayleyTable z6 = CayleyTable::cyclic(6);
  CHECK_THROWS_AS(closure_violations(z6, 4), error);
  ClosureOptions o;
  o.allow_sampling = true;
  const ClosureReport a = closure_violations(z6, 4, o);
  CHECK(a.sampled);
  CHECK(a.products_checked == o.samples);
  CHECK(a.violations.empty());

  const CayleyTable s3 = symmetric3();
  o.samples = 2000;
  const ClosureReport x = closure_violations(s3, 5, o);
  const ClosureReport y = closure_violations(s3, 5, o);
  CHECK(x.violations == y.violations);
}

TEST_CASE("property: ell = 1 regularity implies every higher ell") {
  for (const CayleyTable& t : small_tables()) {
    for (int k = 3; k <= 5; ++k) {
      if (t.order() > 4 && k == 5) continue;
      for (const auto& tuple : all_tuples(t.order(), k - 1)) {
        if (!is_regular_tuple(t, tuple, k, 1)) continue;
        for (int ell = 2; ell <= 4; ++ell) REQUIRE(is_regular_tuple(t, tuple, k, ell));
      }
    }
  }
}

TEST_CASE("property: the converse fails on a small table") {
  bool witnessed = false;
  std::string witness;
  for (const CayleyTable& t : small_tables()) {
    for (const auto& tuple : all_tuples(t.order(), 2)) {
      if (is_regular_tuple(t, tuple, 3, 2) && !is_regular_tuple(t, tuple, 3, 1)) {
        witnessed = true;
        witness = "order " + std::to_string(t.order()) + " tuple " + format_tuple(tuple);
        break;
      }
    }
    if (witnessed) break;
  }
  INFO(witness);
  CHECK(witnessed);
  CHECK(is_regular_tuple(CayleyTable::cyclic(4), std::vector<int>{1, 1}, 3, 2));
  CHECK_FALSE(is_regular_tuple(CayleyTable::cyclic(4), std::vector<int>{1, 1}, 3, 1));
}

TEST_CASE("property: idempotent enumeration agrees with brute force") {
  for (const CayleyTable& t : small_tables()) {
    for (int k = 3; k <= 4; ++k) {
      std::vector<std::vector<int>> brute;
      for (const auto& tuple : all_tuples(t.order(), k - 1)) {
        if (is_regular_tuple(t, tuple, k)) brute.push_back(tuple);
      }
      REQUIRE(idempotent_matrices(t, k) == brute);
    }
  }
}
