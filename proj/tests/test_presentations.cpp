#include <doctest.h>

#include <algorithm>

#include "polybraid/error.hpp"
#include "polybraid/presentation.hpp"

using namespace polybraid;

namespace {

Word w(std::string_view text) { return parse_word(text); }

std::vector<std::string> lines_of(const Presentation& p) {
  std::vector<std::string> out;
  for (const RelationChain& c : p.chains) {
    std::string line;
    for (const Word& x : c.words()) line += (line.empty() ? "" : " = ") + format_word(x);
    out.push_back(line);
  }
  return out;
}

std::size_t count_tag(const Presentation& p, ChainTag tag) {
  return static_cast<std::size_t>(
      std::count_if(p.chains.begin(), p.chains.end(), [&](const RelationChain& c) { return c.tag() == tag; }));
}

}  // namespace

TEST_CASE("classical braid groups") {
  CHECK(lines_of(artin_braid(3)) == std::vector<std::string>{"s1 s2 s1 = s2 s1 s2"});
  CHECK(lines_of(artin_braid(4)) ==
        std::vector<std::string>{"s1 s2 s1 = s2 s1 s2", "s2 s3 s2 = s3 s2 s3", "s1 s3 = s3 s1"});
  const Presentation b2 = artin_braid(2);
  CHECK(b2.generators == 1);
  CHECK(b2.chains.empty());
  CHECK_THROWS_AS(artin_braid(1), error);
}

TEST_CASE("higher braid groups") {
  const Presentation b44 = higher_braid(4, 4);
  CHECK(lines_of(b44) == std::vector<std::string>{"s1 s2 s3 s1 = s2 s3 s1 s2 = s3 s1 s2 s3"});

  const Presentation b84 = higher_braid(8, 4);
  CHECK(b84.generators == 7);
  CHECK(count_tag(b84, ChainTag::braid) == 5);
  REQUIRE(count_tag(b84, ChainTag::far) == 1);
  const RelationChain& far = b84.chains.back();
  CHECK(far.size() == 6);
  CHECK(far.first() == w("s1 s4 s7"));
  for (const Word& x : far.words()) {
    std::vector<int> idx;
    for (const Letter& l : x.letters()) idx.push_back(l.generator);
    std::sort(idx.begin(), idx.end());
    CHECK(idx == std::vector<int>{1, 4, 7});
  }

  const Presentation b74 = higher_braid(7, 4);
  CHECK(count_tag(b74, ChainTag::braid) == 4);
  CHECK(count_tag(b74, ChainTag::far) == 0);
  CHECK_THROWS_AS(higher_braid(3, 4), error);
  CHECK_THROWS_AS(higher_braid(5, 2), error);
}

TEST_CASE("higher braid with k = 3 is the classical braid group") {
  for (int n = 3; n <= 9; ++n) {
    const Presentation h = higher_braid(n, 3);
    const Presentation a = artin_braid(n);
    REQUIRE(h.chains.size() == a.chains.size());
    for (std::size_t c = 0; c < h.chains.size(); ++c) CHECK(h.chains[c] == a.chains[c]);
  }
}

TEST_CASE("braid chain structure") {
  for (int k = 3; k <= 6; ++k) {
    for (int n = k; n <= 12; ++n) {
      const Presentation p = higher_braid(n, k);
      REQUIRE(count_tag(p, ChainTag::braid) == static_cast<std::size_t>(std::max(0, n - k + 1)));
      for (const RelationChain& c : p.chains) {
        if (c.tag() != ChainTag::braid) continue;
        REQUIRE(c.size() == static_cast<std::size_t>(k - 1));
        const int base = c.first()[0].generator;
        for (std::size_t j = 0; j < c.size(); ++j) {
          REQUIRE(c.words()[j].size() == static_cast<std::size_t>(k));
          if (j == 0) continue;
          // successor: drop the first letter, append the next letter of the cyclic window
          const Word& prev = c.words()[j - 1];
          const Word& cur = c.words()[j];
          CHECK(cur.subword(0, static_cast<std::size_t>(k - 1)) == prev.subword(1, static_cast<std::size_t>(k - 1)));
          const int last = prev[static_cast<std::size_t>(k - 1)].generator;
          CHECK(cur[static_cast<std::size_t>(k - 1)].generator == base + (last - base + 1) % (k - 1));
        }
      }
    }
  }
}

TEST_CASE("far chains appear exactly from the threshold on") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = k; n <= 20; ++n) {
      const bool expect = n - 1 >= 1 + (k - 1) * (k - 2);
      CHECK((count_tag(higher_braid(n, k), ChainTag::far) > 0) == expect);
    }
  }
  CHECK(count_tag(higher_braid(8, 4), ChainTag::far) == 1);
  CHECK(count_tag(higher_braid(7, 4), ChainTag::far) == 0);
  for (const auto& t : far_tuples(12, 4)) {
    for (std::size_t j = 1; j < t.size(); ++j) CHECK(t[j] - t[j - 1] >= 3);
  }
}

TEST_CASE("higher symmetric groups") {
  CHECK(lines_of(higher_symmetric(4, 4)) ==
        std::vector<std::string>{"s1 s2 s3 s1 = s2 s3 s1 s2 = s3 s1 s2 s3", "s1 s1 s1 = e", "s2 s2 s2 = e",
                                 "s3 s3 s3 = e"});
  CHECK(lines_of(higher_symmetric(4, 3)) ==
        std::vector<std::string>{"s1 s2 s1 = s2 s1 s2", "s2 s3 s2 = s3 s2 s3", "s1 s3 = s3 s1", "s1 s1 = e",
                                 "s2 s2 = e", "s3 s3 = e"});
  CHECK(lines_of(higher_symmetric(3, 3)) ==
        std::vector<std::string>{"s1 s2 s1 = s2 s1 s2", "s1 s1 = e", "s2 s2 = e"});
  CHECK_THROWS_AS(higher_symmetric(3, 4), error);
}

TEST_CASE("higher Coxeter groups") {
  CHECK(lines_of(higher_coxeter(CoxeterSpec::defaults(4, 4))) ==
        std::vector<std::string>{"s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3 = e", "s1 s1 s1 = e", "s2 s2 s2 = e",
                                 "s3 s3 s3 = e"});

  const Presentation w84 = higher_coxeter(CoxeterSpec::defaults(8, 4));
  CHECK(w84.generators == 7);
  std::vector<Word> windows;
  for (const RelationChain& c : w84.chains) {
    if (c.tag() == ChainTag::coxeter_power) windows.push_back(c.first());
  }
  REQUIRE(windows.size() == 6);
  for (int i = 1; i <= 5; ++i) {
    CHECK(windows[static_cast<std::size_t>(i - 1)] ==
          power(Word::from_indices(std::vector<int>{i, i + 1, i + 2}), 4));
  }
  CHECK(windows[5] == power(w("s1 s4 s7"), 3));
  CHECK(count_tag(w84, ChainTag::order) == 7);

  CoxeterSpec one{5, 4, {{{2, 2, 2}, 1}}};
  CHECK(lines_of(higher_coxeter(one)) == std::vector<std::string>{"s2 s2 s2 = e"});
  CoxeterSpec bad_diag{5, 4, {{{2, 2, 2}, 2}}};
  CHECK_THROWS_AS(higher_coxeter(bad_diag), error);
  CoxeterSpec bad_far{8, 4, {{{1, 4, 7}, 2}}};
  CHECK_THROWS_AS(higher_coxeter(bad_far), error);
  CoxeterSpec mixed{8, 4, {{{1, 2, 7}, 4}}};
  CHECK_THROWS_AS(higher_coxeter(mixed), error);
}

TEST_CASE("classical Coxeter groups") {
  CHECK(lines_of(coxeter_classic({{1, 3}, {3, 1}})) ==
        std::vector<std::string>{"s1 s2 s1 s2 s1 s2 = e", "s1 s1 = e", "s2 s2 = e"});
  CHECK(lines_of(coxeter_classic({{1, 2}, {2, 1}})) ==
        std::vector<std::string>{"s1 s2 s1 s2 = e", "s1 s1 = e", "s2 s2 = e"});
  CHECK_THROWS_AS(coxeter_classic({{2, 3}, {3, 1}}), error);
  CHECK_THROWS_AS(coxeter_classic({{1, 1}, {1, 1}}), error);
  CHECK_THROWS_AS(coxeter_classic({{1, 3}, {4, 1}}), error);
  CHECK(coxeter_matrix_a(4) == std::vector<std::vector<int>>{{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
}

TEST_CASE("matrix correspondence") {
  for (int k = 3; k <= 5; ++k) {
    for (int n = k; n <= 9; ++n) {
      const CorrespondenceReport r = verify_braid_matrix_correspondence(n, k);
      INFO("n=" << n << " k=" << k << "\n" << format_correspondence(r, n, k));
      CHECK(r.ok);
    }
  }
  const CorrespondenceReport r44 = verify_braid_matrix_correspondence(4, 4);
  CHECK(r44.matrix_equations == 3);
  CHECK(r44.word_equations == 9);
  CHECK_THROWS_AS(verify_braid_matrix_correspondence(3, 4), error);
}

TEST_CASE("export formats") {
  CHECK(export_presentation(higher_braid(4, 4), ExportFormat::plain) ==
        "generators: 3\ns1 s2 s3 s1 = s2 s3 s1 s2 = s3 s1 s2 s3\n");
  CHECK(export_presentation(artin_braid(2), ExportFormat::plain) == "generators: 1\n");
  CHECK(export_presentation(artin_braid(4), ExportFormat::plain, Alphabet::sigma) ==
        "generators: 3\nsigma1 sigma2 sigma1 = sigma2 sigma1 sigma2\nsigma2 sigma3 sigma2 = sigma3 sigma2 sigma3\n"
        "sigma1 sigma3 = sigma3 sigma1\n");
  CHECK(export_presentation(artin_braid(3), ExportFormat::json) ==
        "{\"family\":\"artin-braid\",\"n\":3,\"k\":3,\"generators\":2,\"chains\":[{\"tag\":\"braid\",\"words\":"
        "[[[1,1],[2,1],[1,1]],[[2,1],[1,1],[2,1]]]}]}\n");
  CHECK_THROWS_AS(parse_export_format("xml"), error);
}

TEST_CASE("export round trips") {
  const std::vector<Presentation> ps{artin_braid(5), higher_braid(8, 4), higher_symmetric(5, 4),
                                     higher_coxeter(CoxeterSpec::defaults(8, 4)), coxeter_classic(coxeter_matrix_a(4))};
  for (const Presentation& p : ps) {
    const Presentation j = parse_presentation(export_presentation(p, ExportFormat::json));
    CHECK(j.family == p.family);
    CHECK(j.n == p.n);
    CHECK(j.k == p.k);
    CHECK(j.generators == p.generators);
    CHECK(j.chains == p.chains);
    const Presentation t = parse_presentation(export_presentation(p, ExportFormat::plain));
    CHECK(t.generators == p.generators);
    REQUIRE(t.chains.size() == p.chains.size());
    for (std::size_t c = 0; c < p.chains.size(); ++c) {
      CHECK(std::equal(t.chains[c].words().begin(), t.chains[c].words().end(), p.chains[c].words().begin(),
                       p.chains[c].words().end()));
    }
  }
}

TEST_CASE("presentation parse errors") {
  CHECK_THROWS_AS(parse_presentation(""), error);
  CHECK_THROWS_AS(parse_presentation("s1 = s2\n"), error);
  CHECK_THROWS_AS(parse_presentation("generators: 2\ns1 s3 = s3 s1\n"), error);
  CHECK_THROWS_AS(parse_presentation("generators: 2\ns1 s2\n"), error);
  CHECK_THROWS_AS(parse_presentation("{\"family\": 3}"), error);
  CHECK_THROWS_AS(parse_presentation("{\"family\":\"custom\",\"n\":2,\"k\":3,\"generators\":1,"
                                     "\"chains\":[{\"tag\":\"none\",\"words\":[[[1,2]],[]]}]}"),
                  error);
  try {
    parse_presentation("generators: 2\ns1 s3 = s3 s1\n");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}
