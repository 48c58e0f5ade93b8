#include "polybraid/regularity.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "polybraid/error.hpp"
#include "polybraid/polymatrix.hpp"

namespace polybraid {

RegularitySchema idempotence_relations(int k, int ell) {
  if (k < 3) throw error(errc::invalid_argument, "regularity needs k >= 3");
  if (ell < 1) throw error(errc::invalid_argument, "regularity needs ell >= 1");
  std::vector<Word> slots;
  for (int j = 1; j <= k - 1; ++j) slots.push_back(Word::generator(j, Mode::semigroup));
  const PolyMatrix generic = make_matrix(k, std::move(slots));
  const PolyMatrix p = polyadic_power(generic, ell);

  RegularitySchema schema{k, ell, {}};
  for (int j = 0; j < k - 1; ++j) schema.equations.push_back({p.entry(j), j + 1});
  return schema;
}

std::string format_schema(const RegularitySchema& schema, Alphabet alphabet) {
  std::ostringstream os;
  for (const auto& eq : schema.equations) {
    os << format_word(eq.lhs, alphabet) << " = "
       << format_word(Word::generator(eq.generator, Mode::semigroup), alphabet) << '\n';
  }
  return os.str();
}

CayleyTable::CayleyTable(std::vector<std::vector<int>> table, std::optional<int> identity)
    : table_(std::move(table)), identity_(identity) {
  const int m = order();
  if (m < 1) throw error(errc::invalid_argument, "a Cayley table needs at least one element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != m) {
      throw error(errc::invalid_argument, "Cayley table must be square");
    }
    for (int x : row) {
      if (x < 0 || x >= m) throw error(errc::invalid_argument, "Cayley table entry out of range");
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw error(errc::invalid_argument, "table is not associative at (" + std::to_string(a) +
                                                  ", " + std::to_string(b) + ", " +
                                                  std::to_string(c) + ")");
        }
      }
    }
  }
  if (identity_) {
    const int e = *identity_;
    if (e < 0 || e >= m) throw error(errc::invalid_argument, "identity index out of range");
    for (int a = 0; a < m; ++a) {
      if (mul(e, a) != a || mul(a, e) != a) {
        throw error(errc::invalid_argument, "declared identity " + std::to_string(e) +
                                                " is not a two-sided identity");
      }
    }
  }
}

CayleyTable CayleyTable::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw error(errc::parse_error, "empty Cayley table file");

  std::istringstream header(lines.front());
  std::string kw;
  int m = 0;
  if (!(header >> kw >> m) || kw != "order" || m < 1) {
    throw error(errc::parse_error, "expected header 'order m [identity i]'");
  }
  std::optional<int> identity;
  if (header >> kw) {
    int e = 0;
    if (kw != "identity" || !(header >> e)) {
      throw error(errc::parse_error, "expected 'identity i' after the order");
    }
    identity = e;
  }
  if (header >> kw) throw error(errc::parse_error, "trailing text in Cayley table header");
  if (static_cast<int>(lines.size()) != m + 1) {
    throw error(errc::parse_error, "expected " + std::to_string(m) + " table rows, got " +
                                       std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<int>> table;
  for (int r = 0; r < m; ++r) {
    std::istringstream row(lines[static_cast<std::size_t>(r) + 1]);
    std::vector<int> values;
    std::string tok;
    while (row >> tok) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw error(errc::parse_error, "bad table entry '" + tok + "'");
      }
    }
    if (static_cast<int>(values.size()) != m) {
      throw error(errc::parse_error, "row " + std::to_string(r) + " has " +
                                         std::to_string(values.size()) + " entries");
    }
    table.push_back(std::move(values));
  }
  try {
    return CayleyTable(std::move(table), identity);
  } catch (const error& e) {
    throw error(errc::parse_error, e.what());
  }
}

CayleyTable CayleyTable::cyclic(int m) {
  if (m < 1) throw error(errc::invalid_argument, "cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
  }
  return CayleyTable(std::move(t), 0);
}

bool CayleyTable::commutative() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

int CayleyTable::evaluate(const Word& w, std::span<const int> assignment) const {
  if (w.empty()) {
    if (!identity_) throw error(errc::invalid_argument, "empty word needs a table identity");
    return *identity_;
  }
  int acc = -1;
  for (const Letter& l : w.letters()) {
    if (l.exponent != 1) throw error(errc::mode_mismatch, "tables evaluate positive words only");
    if (l.generator > static_cast<int>(assignment.size())) {
      throw error(errc::invalid_argument, "word uses an unassigned generator");
    }
    const int x = assignment[static_cast<std::size_t>(l.generator - 1)];
    acc = acc < 0 ? x : mul(acc, x);
  }
  return acc;
}

namespace {

void check_tuple(const CayleyTable& t, std::span<const int> tuple, int k) {
  if (tuple.size() != static_cast<std::size_t>(k - 1)) {
    throw error(errc::arity_mismatch, "expected a tuple of " + std::to_string(k - 1) + " elements");
  }
  for (int x : tuple) {
    if (x < 0 || x >= t.order()) throw error(errc::invalid_argument, "tuple element out of range");
  }
}

bool holds(const CayleyTable& t, const RegularitySchema& s, std::span<const int> tuple) {
  for (const auto& eq : s.equations) {
    if (t.evaluate(eq.lhs, tuple) != tuple[static_cast<std::size_t>(eq.generator - 1)]) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > enumeration_guard * 16 / base) return enumeration_guard * 16 + 1;
    r *= base;
  }
  return r;
}

}  // namespace

bool is_regular_tuple(const CayleyTable& t, std::span<const int> tuple, int k, int ell) {
  const RegularitySchema s = idempotence_relations(k, ell);
  check_tuple(t, tuple, k);
  return holds(t, s, tuple);
}

std::vector<std::vector<int>> idempotent_matrices(const CayleyTable& t, int k, int ell) {
  const RegularitySchema s = idempotence_relations(k, ell);
  const auto m = static_cast<std::uint64_t>(t.order());
  if (checked_pow(m, k - 1) > enumeration_guard) {
    throw error(errc::limit_exceeded, "enumerating order^(k-1) tuples exceeds the guard of 10^6");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<std::size_t>(k - 1), 0);
  while (true) {
    if (holds(t, s, tuple)) out.push_back(tuple);
    std::size_t pos = tuple.size();
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < t.order()) break;
      tuple[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<int> mu_k_tuples(const CayleyTable& t, std::span<const std::vector<int>> tuples) {
  if (tuples.empty()) throw error(errc::arity_mismatch, "mu_k needs k tuples");
  const std::size_t n = tuples.front().size();
  if (tuples.size() != n + 1) {
    throw error(errc::arity_mismatch, "mu_k needs exactly k = " + std::to_string(n + 1) + " tuples");
  }
  std::vector<int> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    int acc = tuples[0][j];
    for (std::size_t i = 1; i < tuples.size(); ++i) acc = t.mul(acc, tuples[i][(j + i) % n]);
    out[j] = acc;
  }
  return out;
}

ClosureReport closure_violations(const CayleyTable& t, int k, const ClosureOptions& options) {
  const RegularitySchema s = idempotence_relations(k, 1);
  const std::vector<std::vector<int>> ids = idempotent_matrices(t, k);
  ClosureReport report;
  report.k = k;
  report.idempotents = ids.size();

  const auto total = checked_pow(ids.size(), k);
  const auto check = [&](std::span<const std::size_t> pick,
                         std::vector<std::vector<std::vector<int>>>& sink) {
    std::vector<std::vector<int>> args;
    args.reserve(pick.size());
    for (std::size_t p : pick) args.push_back(ids[p]);
    const std::vector<int> prod = mu_k_tuples(t, args);
    if (!holds(t, s, prod)) sink.push_back(std::move(args));
  };

  if (total <= enumeration_guard) {
    report.products_checked = total;
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, 64));
    std::vector<std::vector<std::vector<std::vector<int>>>> partial(threads);
    const auto work = [&](unsigned part) {
      const std::uint64_t begin = total * part / threads;
      const std::uint64_t end = total * (part + 1) / threads;
      std::vector<std::size_t> pick(static_cast<std::size_t>(k));
      for (std::uint64_t flat = begin; flat < end; ++flat) {
        std::uint64_t rest = flat;
        for (std::size_t i = pick.size(); i-- > 0;) {
          pick[i] = static_cast<std::size_t>(rest % ids.size());
          rest /= ids.size();
        }
        check(pick, partial[part]);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned p = 0; p < threads; ++p) pool.emplace_back(work, p);
    }
    for (auto& part : partial) {
      for (auto& v : part) report.violations.push_back(std::move(v));
    }
    return report;
  }

  if (!options.allow_sampling) {
    throw error(errc::limit_exceeded,
                "closure check over " + std::to_string(ids.size()) + "^" + std::to_string(k) +
                    " products exceeds the guard of 10^6 and sampling is disabled");
  }
  report.sampled = true;
  report.products_checked = options.samples;
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  for (std::uint64_t draw = 0; draw < options.samples; ++draw) {
    for (auto& p : pick) p = static_cast<std::size_t>(rng() % ids.size());
    check(pick, report.violations);
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                          report.violations.end());
  return report;
}

std::string format_tuple(std::span<const int> tuple) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
  os << ')';
  return os.str();
}

}  // namespace polybraid
