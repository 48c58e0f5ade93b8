#pragma once

#include <span>
#include <string>
#include <vector>

#include "polybraid/relation.hpp"
#include "polybraid/text.hpp"
#include "polybraid/word.hpp"

namespace polybraid {

/// (k-1)x(k-1) cyclic-shift matrix over words, used as an element of a k-ary
/// matrix semigroup. Only k-1 slots can be nonzero: slot j (0-based) sits at
/// row j, column (j + shift) mod (k-1). Shift 1 is the k-ary shape; other
/// shifts arise as intermediate binary products.
class PolyMatrix {
 public:
  PolyMatrix(int arity, std::vector<Word> entries, int shift = 1);

  int arity() const { return arity_; }
  int shift() const { return shift_; }
  int size() const { return arity_ - 1; }
  Mode mode() const { return entries_.front().mode(); }
  std::span<const Word> entries() const { return entries_; }
  const Word& entry(int slot) const { return entries_[static_cast<std::size_t>(slot)]; }
  int column(int slot) const { return (slot + shift_) % size(); }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int arity_;
  int shift_;
  std::vector<Word> entries_;
};

PolyMatrix make_matrix(int k, std::vector<Word> entries, int shift = 1);

/// k-ary identity: shift 1, every slot the empty group word.
PolyMatrix identity(int k);

/// q E(k-1): shift 1, every slot equal to q.
PolyMatrix scalar_identity(int k, const Word& q);

/// Ordinary matrix product of two cyclic-shift matrices.
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// Ordinary power p >= 1 (p = 0 gives the diagonal unit matrix).
PolyMatrix matrix_power(const PolyMatrix& m, int p);

/// The k-ary product of exactly k shift-1 matrices, computed slot by slot.
PolyMatrix mu_k(std::span<const PolyMatrix> ms);

/// Polyadic power <ell>: ell k-ary multiplications, i.e. ordinary power ell(k-1)+1.
PolyMatrix polyadic_power(const PolyMatrix& m, int ell);

/// Closed-form querelement of a shift-1 group matrix: slot j holds the inverse
/// of the cyclic product of slots j+1, ..., j+k-2.
PolyMatrix querelement(const PolyMatrix& m);

/// True when mu_k[m, ..., m, q, m, ..., m] = m with q in each of the k positions.
bool satisfies_querelement_law(const PolyMatrix& m, const PolyMatrix& q);

/// Ordinary (binary) matrix inverse; the shift class becomes -shift mod (k-1).
PolyMatrix matrix_inverse(const PolyMatrix& m);

/// Sigma_{i1..i_{k-1}}: shift-1 matrix with slot j = single letter sigma_{i_j}.
PolyMatrix matrix_generator(int k, std::span<const int> indices);

/// Product of ordinary powers of matrices, e.g. (Sigma)^{k-1} E.
class MatrixExpr {
 public:
  struct Factor {
    PolyMatrix matrix;
    int exponent;
  };

  MatrixExpr() = default;
  explicit MatrixExpr(PolyMatrix m, int exponent = 1) { times(std::move(m), exponent); }

  MatrixExpr& times(PolyMatrix m, int exponent = 1);
  std::span<const Factor> factors() const { return factors_; }
  PolyMatrix evaluate() const;

 private:
  std::vector<Factor> factors_;
};

/// Evaluates both sides and pairs corresponding slots, one chain per slot.
std::vector<RelationChain> expand_equation(const MatrixExpr& lhs, const MatrixExpr& rhs);

/// `k=<k> d=<d>` followed by `entry[j] = <word>` lines (1-based j).
std::string format_matrix(const PolyMatrix& m, Alphabet alphabet = Alphabet::s);

}  // namespace polybraid
