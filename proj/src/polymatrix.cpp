#include "polybraid/polymatrix.hpp"

#include <sstream>

#include "polybraid/error.hpp"

namespace polybraid {

namespace {

void require_arity(int k) {
  if (k < 3) throw error(errc::invalid_argument, "arity k must be >= 3, got " + std::to_string(k));
}

void require_compatible(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.arity() != b.arity()) {
    throw error(errc::shape_mismatch, "matrices of arity " + std::to_string(a.arity()) + " and " +
                                          std::to_string(b.arity()) + " cannot be multiplied");
  }
  if (a.mode() != b.mode()) {
    throw error(errc::mode_mismatch, "matrices over semigroup and group words cannot be mixed");
  }
}

}  // namespace

PolyMatrix::PolyMatrix(int arity, std::vector<Word> entries, int shift)
    : arity_(arity), shift_(shift), entries_(std::move(entries)) {
  require_arity(arity_);
  if (entries_.size() != static_cast<std::size_t>(arity_ - 1)) {
    throw error(errc::arity_mismatch, "a " + std::to_string(arity_) + "-ary matrix needs " +
                                          std::to_string(arity_ - 1) + " entries, got " +
                                          std::to_string(entries_.size()));
  }
  if (shift_ < 0 || shift_ >= arity_ - 1) {
    throw error(errc::invalid_argument, "shift class must lie in [0, k-2]");
  }
  for (const Word& w : entries_) {
    if (w.mode() != entries_.front().mode()) {
      throw error(errc::mode_mismatch, "matrix entries mix semigroup and group words");
    }
  }
}

PolyMatrix make_matrix(int k, std::vector<Word> entries, int shift) {
  return PolyMatrix(k, std::move(entries), shift);
}

PolyMatrix identity(int k) {
  require_arity(k);
  return PolyMatrix(k, std::vector<Word>(static_cast<std::size_t>(k - 1), Word::identity()), 1);
}

PolyMatrix scalar_identity(int k, const Word& q) {
  require_arity(k);
  return PolyMatrix(k, std::vector<Word>(static_cast<std::size_t>(k - 1), q), 1);
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  require_compatible(a, b);
  const int n = a.size();
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(n));
  // row j of a hits column j + d_a, which is the row of b that contributes
  for (int j = 0; j < n; ++j) out.push_back(concat(a.entry(j), b.entry(a.column(j))));
  return PolyMatrix(a.arity(), std::move(out), (a.shift() + b.shift()) % n);
}

PolyMatrix matrix_power(const PolyMatrix& m, int p) {
  if (p < 0) throw error(errc::invalid_argument, "matrix power must be non-negative");
  if (p == 0) {
    return PolyMatrix(m.arity(),
                      std::vector<Word>(static_cast<std::size_t>(m.size()), Word::identity(m.mode())),
                      0);
  }
  PolyMatrix result = m;
  for (int i = 1; i < p; ++i) result = multiply(result, m);
  return result;
}

PolyMatrix mu_k(std::span<const PolyMatrix> ms) {
  if (ms.empty()) throw error(errc::arity_mismatch, "mu_k needs k matrices, got none");
  const int k = ms.front().arity();
  if (ms.size() != static_cast<std::size_t>(k)) {
    throw error(errc::arity_mismatch, "mu_k needs exactly " + std::to_string(k) +
                                          " matrices, got " + std::to_string(ms.size()));
  }
  for (const PolyMatrix& m : ms) {
    require_compatible(ms.front(), m);
    if (m.shift() != 1) throw error(errc::shape_mismatch, "mu_k arguments must have shift 1");
  }
  const int n = k - 1;
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<Letter> ls;
    for (int i = 0; i < k; ++i) {
      const Word& w = ms[static_cast<std::size_t>(i)].entry((j + i) % n);
      ls.insert(ls.end(), w.letters().begin(), w.letters().end());
    }
    out.emplace_back(ms.front().mode(), std::move(ls));
  }
  return PolyMatrix(k, std::move(out), 1);
}

PolyMatrix polyadic_power(const PolyMatrix& m, int ell) {
  if (m.shift() != 1) throw error(errc::shape_mismatch, "polyadic power needs a shift-1 matrix");
  if (ell < 0) throw error(errc::invalid_argument, "polyadic power must be non-negative");
  return matrix_power(m, ell * (m.arity() - 1) + 1);
}

PolyMatrix querelement(const PolyMatrix& m) {
  if (m.mode() != Mode::group) {
    throw error(errc::mode_mismatch, "querelements need group-mode entries");
  }
  if (m.shift() != 1) throw error(errc::shape_mismatch, "querelement needs a shift-1 matrix");
  const int n = m.size();
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Word prod;
    for (int t = 1; t <= n - 1; ++t) prod = concat(prod, m.entry((j + t) % n));
    out.push_back(invert(prod));
  }
  return PolyMatrix(m.arity(), std::move(out), 1);
}

bool satisfies_querelement_law(const PolyMatrix& m, const PolyMatrix& q) {
  std::vector<PolyMatrix> args(static_cast<std::size_t>(m.arity()), m);
  for (std::size_t pos = 0; pos < args.size(); ++pos) {
    args[pos] = q;
    if (mu_k(args) != m) return false;
    args[pos] = m;
  }
  return true;
}

PolyMatrix matrix_inverse(const PolyMatrix& m) {
  if (m.mode() != Mode::group) {
    throw error(errc::mode_mismatch, "matrix inverse needs group-mode entries");
  }
  const int n = m.size();
  const int inv_shift = (n - m.shift()) % n;
  std::vector<Word> out(static_cast<std::size_t>(n));
  // m sends row j to column j + d with entry_j; the inverse sends j + d back to j
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(m.column(j))] = invert(m.entry(j));
  return PolyMatrix(m.arity(), std::move(out), inv_shift);
}

PolyMatrix matrix_generator(int k, std::span<const int> indices) {
  require_arity(k);
  if (indices.size() != static_cast<std::size_t>(k - 1)) {
    throw error(errc::arity_mismatch, "a " + std::to_string(k) + "-ary matrix generator needs " +
                                          std::to_string(k - 1) + " indices, got " +
                                          std::to_string(indices.size()));
  }
  std::vector<Word> entries;
  entries.reserve(indices.size());
  for (int i : indices) entries.push_back(Word::generator(i));
  return PolyMatrix(k, std::move(entries), 1);
}

MatrixExpr& MatrixExpr::times(PolyMatrix m, int exponent) {
  if (exponent < 1) throw error(errc::invalid_argument, "factor exponent must be >= 1");
  if (!factors_.empty()) require_compatible(factors_.front().matrix, m);
  factors_.push_back({std::move(m), exponent});
  return *this;
}

PolyMatrix MatrixExpr::evaluate() const {
  if (factors_.empty()) throw error(errc::invalid_argument, "empty matrix expression");
  PolyMatrix acc = matrix_power(factors_.front().matrix, factors_.front().exponent);
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    acc = multiply(acc, matrix_power(factors_[i].matrix, factors_[i].exponent));
  }
  return acc;
}

std::vector<RelationChain> expand_equation(const MatrixExpr& lhs, const MatrixExpr& rhs) {
  const PolyMatrix l = lhs.evaluate();
  const PolyMatrix r = rhs.evaluate();
  if (l.arity() != r.arity()) {
    throw error(errc::shape_mismatch, "matrix equation sides have different arity");
  }
  if (l.shift() != r.shift()) {
    throw error(errc::shape_mismatch, "matrix equation sides have shift classes " +
                                          std::to_string(l.shift()) + " and " +
                                          std::to_string(r.shift()));
  }
  std::vector<RelationChain> out;
  out.reserve(static_cast<std::size_t>(l.size()));
  for (int j = 0; j < l.size(); ++j) out.emplace_back(std::vector<Word>{l.entry(j), r.entry(j)});
  return out;
}

std::string format_matrix(const PolyMatrix& m, Alphabet alphabet) {
  std::ostringstream os;
  os << "k=" << m.arity() << " d=" << m.shift() << '\n';
  for (int j = 0; j < m.size(); ++j) {
    os << "entry[" << (j + 1) << "] = " << format_word(m.entry(j), alphabet) << '\n';
  }
  return os.str();
}

}  // namespace polybraid
