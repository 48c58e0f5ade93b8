#include "polybraid/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "polybraid/error.hpp"
#include "polybraid/polymatrix.hpp"

namespace polybraid {

namespace {

constexpr std::string_view family_names[] = {"artin-braid",      "higher-braid",
                                             "higher-symmetric", "higher-coxeter",
                                             "coxeter-classic",  "custom"};

void require_n_k(int n, int k) {
  if (k < 3) throw error(errc::invalid_argument, "k must be >= 3, got " + std::to_string(k));
  if (n < k) {
    throw error(errc::invalid_argument, "n must be >= k, got n=" + std::to_string(n) +
                                            " k=" + std::to_string(k));
  }
}

RelationChain far_chain(const std::vector<int>& tuple) {
  std::vector<int> perm = tuple;
  std::vector<Word> words;
  do {
    words.push_back(Word::from_indices(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return RelationChain(std::move(words), ChainTag::far);
}

Word product_of(const std::vector<int>& tuple) { return Word::from_indices(tuple); }

enum class TupleKind { diagonal, window, far, mixed };

TupleKind classify(const std::vector<int>& t, int k) {
  if (std::all_of(t.begin(), t.end(), [&](int x) { return x == t.front(); })) {
    return TupleKind::diagonal;
  }
  bool window = true;
  bool far = true;
  for (std::size_t j = 1; j < t.size(); ++j) {
    window = window && t[j] == t[j - 1] + 1;
    far = far && t[j] - t[j - 1] >= k - 1;
  }
  if (window) return TupleKind::window;
  if (far) return TupleKind::far;
  return TupleKind::mixed;
}

/// Disjoint-set forest over interned words.
class WordClasses {
 public:
  std::size_t id(const Word& w) {
    auto [it, inserted] = ids_.try_emplace(w, words_.size());
    if (inserted) {
      words_.push_back(w);
      parent_.push_back(parent_.size());
    }
    return it->second;
  }

  void unite(const Word& a, const Word& b) {
    std::size_t x = find(id(a));
    std::size_t y = find(id(b));
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

  std::set<std::set<Word>> classes(int alphabet) {
    std::map<std::size_t, std::set<Word>> by_root;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i].max_generator() <= alphabet) by_root[find(i)].insert(words_[i]);
    }
    std::set<std::set<Word>> out;
    for (auto& [root, cls] : by_root) {
      if (cls.size() >= 2) out.insert(std::move(cls));
    }
    return out;
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::unordered_map<Word, std::size_t, WordHash> ids_;
  std::vector<Word> words_;
  std::vector<std::size_t> parent_;
};

std::string format_class(const std::set<Word>& cls) {
  std::string out;
  for (const Word& w : cls) {
    if (!out.empty()) out += " = ";
    out += format_word(w);
  }
  return out;
}

}  // namespace

std::string_view family_name(Family f) { return family_names[static_cast<int>(f)]; }

Family parse_family(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (family_names[i] == name) return static_cast<Family>(i);
  }
  throw error(errc::parse_error, "unknown presentation family '" + std::string(name) + "'");
}

void Presentation::validate() const {
  if (generators < 1) throw error(errc::invalid_argument, "a presentation needs >= 1 generator");
  for (const RelationChain& c : chains) {
    if (c.mode() != Mode::group) {
      throw error(errc::mode_mismatch, "presentation relations must be group words");
    }
    if (c.max_generator() > generators) {
      throw error(errc::invalid_argument, "relation uses generator " +
                                              std::to_string(c.max_generator()) + " beyond " +
                                              std::to_string(generators) + " generators");
    }
  }
}

std::vector<std::vector<int>> far_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int size = k - 1;
  // depth-first in lexicographic order
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = next; i <= n - 1; ++i) {
      cur.push_back(i);
      self(self, i + k - 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Word> braid_chain_words(int i, int k) {
  std::vector<Word> words;
  for (int offset = 0; offset <= k - 2; ++offset) {
    std::vector<int> idx;
    for (int t = 0; t < k; ++t) idx.push_back(i + (offset + t) % (k - 1));
    words.push_back(Word::from_indices(idx));
  }
  return words;
}

Presentation artin_braid(int n) {
  if (n < 2) throw error(errc::invalid_argument, "artin braid group needs n >= 2");
  Presentation p{Family::artin_braid, n, 3, n - 1, {}};
  for (int i = 1; i <= n - 2; ++i) {
    p.chains.emplace_back(std::vector<Word>{Word::from_indices(std::vector{i, i + 1, i}),
                                            Word::from_indices(std::vector{i + 1, i, i + 1})},
                          ChainTag::braid);
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      p.chains.emplace_back(std::vector<Word>{Word::from_indices(std::vector{i, j}),
                                              Word::from_indices(std::vector{j, i})},
                            ChainTag::far);
    }
  }
  return p;
}

Presentation higher_braid(int n, int k) {
  require_n_k(n, k);
  Presentation p{Family::higher_braid, n, k, n - 1, {}};
  for (int i = 1; i <= n - k + 1; ++i) p.chains.emplace_back(braid_chain_words(i, k), ChainTag::braid);
  for (const auto& t : far_tuples(n, k)) p.chains.push_back(far_chain(t));
  return p;
}

Presentation higher_symmetric(int n, int k) {
  Presentation p = higher_braid(n, k);
  p.family = Family::higher_symmetric;
  for (int i = 1; i <= n - 1; ++i) {
    p.chains.emplace_back(std::vector<Word>{power(Word::generator(i), k - 1), Word::identity()},
                          ChainTag::order);
  }
  return p;
}

CoxeterSpec CoxeterSpec::defaults(int n, int k) {
  CoxeterSpec spec{n, k, {}};
  if (k < 3) throw error(errc::invalid_argument, "k must be >= 3");
  if (n < 2) throw error(errc::invalid_argument, "n must be >= 2");
  for (int i = 1; i + k - 2 <= n - 1; ++i) {
    std::vector<int> w(static_cast<std::size_t>(k - 1));
    std::iota(w.begin(), w.end(), i);
    spec.exponents[w] = k;
  }
  for (const auto& t : far_tuples(n, k)) spec.exponents[t] = k - 1;
  for (int i = 1; i <= n - 1; ++i) spec.exponents[std::vector<int>(static_cast<std::size_t>(k - 1), i)] = 1;
  return spec;
}

void CoxeterSpec::validate() const {
  if (k < 3) throw error(errc::invalid_argument, "k must be >= 3");
  if (n < 2) throw error(errc::invalid_argument, "n must be >= 2");
  for (const auto& [tuple, m] : exponents) {
    if (tuple.size() != static_cast<std::size_t>(k - 1)) {
      throw error(errc::arity_mismatch, "Coxeter tuples need k-1 indices");
    }
    for (int i : tuple) {
      if (i < 1 || i > n - 1) throw error(errc::invalid_argument, "Coxeter tuple index out of range");
    }
    switch (classify(tuple, k)) {
      case TupleKind::diagonal:
        if (m != 1) throw error(errc::invalid_argument, "diagonal tuples must have exponent 1");
        break;
      case TupleKind::far:
        if (m < k - 1) throw error(errc::invalid_argument, "far tuples need exponent >= k-1");
        break;
      case TupleKind::window:
        if (m < 1) throw error(errc::invalid_argument, "window exponents must be >= 1");
        break;
      case TupleKind::mixed:
        throw error(errc::invalid_argument,
                    "tuple is neither diagonal, a consecutive window, nor pairwise far");
    }
  }
}

Presentation higher_coxeter(const CoxeterSpec& spec) {
  spec.validate();
  Presentation p{Family::higher_coxeter, spec.n, spec.k, spec.n - 1, {}};
  for (TupleKind kind : {TupleKind::window, TupleKind::far, TupleKind::diagonal}) {
    for (const auto& [tuple, m] : spec.exponents) {
      if (classify(tuple, spec.k) != kind) continue;
      p.chains.emplace_back(std::vector<Word>{power(product_of(tuple), m), Word::identity()},
                            kind == TupleKind::diagonal ? ChainTag::order : ChainTag::coxeter_power);
    }
  }
  return p;
}

Presentation coxeter_classic(const std::vector<std::vector<int>>& m) {
  const int size = static_cast<int>(m.size());
  if (size < 1) throw error(errc::invalid_argument, "Coxeter matrix must be non-empty");
  for (int i = 0; i < size; ++i) {
    if (static_cast<int>(m[static_cast<std::size_t>(i)].size()) != size) {
      throw error(errc::invalid_argument, "Coxeter matrix must be square");
    }
  }
  const auto at = [&](int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < size; ++i) {
    if (at(i, i) != 1) throw error(errc::invalid_argument, "Coxeter matrix diagonal must be 1");
    for (int j = 0; j < size; ++j) {
      if (i != j && at(i, j) < 2) {
        throw error(errc::invalid_argument, "Coxeter matrix off-diagonal entries must be >= 2");
      }
      if (at(i, j) != at(j, i)) throw error(errc::invalid_argument, "Coxeter matrix must be symmetric");
    }
  }
  Presentation p{Family::coxeter_classic, size, 3, size, {}};
  for (int i = 1; i <= size; ++i) {
    for (int j = i + 1; j <= size; ++j) {
      p.chains.emplace_back(
          std::vector<Word>{power(Word::from_indices(std::vector{i, j}), at(i - 1, j - 1)),
                            Word::identity()},
          ChainTag::coxeter_power);
    }
  }
  for (int i = 1; i <= size; ++i) {
    p.chains.emplace_back(std::vector<Word>{power(Word::generator(i), 2), Word::identity()},
                          ChainTag::order);
  }
  return p;
}

std::vector<std::vector<int>> coxeter_matrix_a(int n) {
  if (n < 2) throw error(errc::invalid_argument, "A_{n-1} needs n >= 2");
  const std::size_t size = static_cast<std::size_t>(n - 1);
  std::vector<std::vector<int>> m(size, std::vector<int>(size, 2));
  for (std::size_t i = 0; i < size; ++i) {
    m[i][i] = 1;
    if (i + 1 < size) m[i][i + 1] = m[i + 1][i] = 3;
  }
  return m;
}

CorrespondenceReport verify_braid_matrix_correspondence(int n, int k) {
  require_n_k(n, k);
  CorrespondenceReport report;
  WordClasses classes;
  const auto absorb = [&](const std::vector<RelationChain>& slots) {
    ++report.matrix_equations;
    for (const RelationChain& c : slots) {
      ++report.word_equations;
      classes.unite(c.words()[0], c.words()[1]);
    }
  };

  const int alphabet = n - 1;
  for (int i = 1; i <= n - k + 1; ++i) {
    // q_i is a fresh symbol beyond the braid alphabet
    const PolyMatrix q_identity = scalar_identity(k, Word::generator(alphabet + i));
    for (int rot = 0; rot <= k - 2; ++rot) {
      std::vector<int> tuple;
      for (int t = 0; t < k - 1; ++t) tuple.push_back(i + (rot + t) % (k - 1));
      absorb(expand_equation(MatrixExpr(matrix_generator(k, tuple), k), MatrixExpr(q_identity)));
    }
  }
  for (const auto& base : far_tuples(n, k)) {
    const MatrixExpr lhs = MatrixExpr(matrix_generator(k, base), k - 1).times(identity(k));
    std::vector<int> perm = base;
    while (std::next_permutation(perm.begin(), perm.end())) {
      absorb(expand_equation(lhs, MatrixExpr(matrix_generator(k, perm), k - 1).times(identity(k))));
    }
  }

  const std::set<std::set<Word>> derived = classes.classes(alphabet);
  std::set<std::set<Word>> expected;
  for (const RelationChain& c : higher_braid(n, k).chains) {
    expected.insert(std::set<Word>(c.words().begin(), c.words().end()));
  }
  for (const auto& cls : expected) {
    if (!derived.contains(cls)) report.discrepancies.push_back("missing: " + format_class(cls));
  }
  for (const auto& cls : derived) {
    if (!expected.contains(cls)) report.discrepancies.push_back("extra: " + format_class(cls));
  }
  report.ok = report.discrepancies.empty();
  return report;
}

std::string format_correspondence(const CorrespondenceReport& report, int n, int k) {
  std::ostringstream os;
  os << "correspondence n=" << n << " k=" << k << ": " << (report.ok ? "ok" : "FAILED") << '\n';
  os << "matrix equations: " << report.matrix_equations << '\n';
  os << "word equations: " << report.word_equations << '\n';
  for (const auto& d : report.discrepancies) os << d << '\n';
  return os.str();
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "plain") return ExportFormat::plain;
  if (name == "json") return ExportFormat::json;
  throw error(errc::invalid_argument, "unknown export format '" + std::string(name) + "'");
}

std::string export_presentation(const Presentation& p, ExportFormat format, Alphabet alphabet) {
  if (format == ExportFormat::plain) {
    std::ostringstream os;
    os << "generators: " << p.generators << '\n';
    for (const RelationChain& c : p.chains) {
      bool first = true;
      for (const Word& w : c.words()) {
        os << (first ? "" : " = ") << format_word(w, alphabet);
        first = false;
      }
      os << '\n';
    }
    return os.str();
  }
  nlohmann::ordered_json j;
  j["family"] = family_name(p.family);
  j["n"] = p.n;
  j["k"] = p.k;
  j["generators"] = p.generators;
  j["chains"] = nlohmann::ordered_json::array();
  for (const RelationChain& c : p.chains) {
    nlohmann::ordered_json chain;
    chain["tag"] = tag_name(c.tag());
    chain["words"] = nlohmann::ordered_json::array();
    for (const Word& w : c.words()) {
      nlohmann::ordered_json letters = nlohmann::ordered_json::array();
      for (const Letter& l : w.letters()) letters.push_back({l.generator, l.exponent});
      chain["words"].push_back(std::move(letters));
    }
    j["chains"].push_back(std::move(chain));
  }
  return j.dump() + "\n";
}

namespace {

Presentation parse_json_presentation(std::string_view text) {
  Presentation p;
  try {
    const auto j = nlohmann::json::parse(text);
    p.family = parse_family(j.at("family").get<std::string>());
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    p.generators = j.at("generators").get<int>();
    for (const auto& c : j.at("chains")) {
      std::vector<Word> words;
      for (const auto& w : c.at("words")) {
        std::vector<Letter> letters;
        for (const auto& l : w) {
          if (!l.is_array() || l.size() != 2) throw error(errc::parse_error, "letters are [i, e] pairs");
          letters.push_back({l[0].get<int>(), l[1].get<int>()});
        }
        words.emplace_back(Mode::group, std::move(letters));
      }
      p.chains.emplace_back(std::move(words), parse_tag(c.value("tag", std::string("none"))));
    }
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, std::string("malformed presentation json: ") + e.what());
  }
  return p;
}

Presentation parse_plain_presentation(std::string_view text) {
  Presentation p;
  std::istringstream is{std::string(text)};
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (!have_header) {
      constexpr std::string_view key = "generators:";
      if (!t.starts_with(key)) throw error(errc::parse_error, "expected 'generators: G' header");
      try {
        p.generators = std::stoi(std::string(trim(t.substr(key.size()))));
      } catch (const std::exception&) {
        throw error(errc::parse_error, "bad generator count in header");
      }
      have_header = true;
      continue;
    }
    std::vector<Word> words;
    for (const std::string& part : split_trimmed(t, '=')) words.push_back(parse_word(part));
    if (words.size() < 2) throw error(errc::parse_error, "relation line needs '=': " + std::string(t));
    p.chains.emplace_back(std::move(words));
  }
  if (!have_header) throw error(errc::parse_error, "missing 'generators: G' header");
  p.n = p.generators + 1;
  return p;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  const std::string_view t = trim(text);
  Presentation p;
  try {
    p = !t.empty() && t.front() == '{' ? parse_json_presentation(t) : parse_plain_presentation(t);
    p.validate();
  } catch (const error& e) {
    if (e.code() == errc::parse_error) throw;
    throw error(errc::parse_error, e.what());
  }
  return p;
}

}  // namespace polybraid
