#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polybraid/text.hpp"
#include "polybraid/word.hpp"

namespace polybraid {

/// The k-1 word equations lhs_j = g_j read off from M^<ell> = M for the
/// generic k-ary matrix with slots g_1, ..., g_{k-1}.
struct RegularitySchema {
  struct Equation {
    Word lhs;       // semigroup word over generators 1..k-1
    int generator;  // right-hand side g_j
  };

  int k = 3;
  int ell = 1;
  std::vector<Equation> equations;
};

RegularitySchema idempotence_relations(int k, int ell);

/// One line per equation, e.g. `abca = a`.
std::string format_schema(const RegularitySchema& schema, Alphabet alphabet = Alphabet::letters);

/// Finite semigroup given by its multiplication table. Associativity is
/// checked on construction.
class CayleyTable {
 public:
  CayleyTable(std::vector<std::vector<int>> table, std::optional<int> identity = std::nullopt);

  /// `order m [identity i]` followed by m rows of m indices.
  static CayleyTable parse(std::string_view text);
  /// Additive table of Z_m.
  static CayleyTable cyclic(int m);

  int order() const { return static_cast<int>(table_.size()); }
  std::optional<int> identity() const { return identity_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  bool commutative() const;

  /// Evaluates a positive word with generator i mapped to assignment[i-1].
  int evaluate(const Word& w, std::span<const int> assignment) const;

 private:
  std::vector<std::vector<int>> table_;
  std::optional<int> identity_;
};

/// True when all k-1 equations of the <ell> schema hold for the tuple.
bool is_regular_tuple(const CayleyTable& t, std::span<const int> tuple, int k, int ell = 1);

inline constexpr std::uint64_t enumeration_guard = 1'000'000;

/// All (k-1)-tuples whose k-ary matrix is idempotent, in lexicographic order.
std::vector<std::vector<int>> idempotent_matrices(const CayleyTable& t, int k, int ell = 1);

struct ClosureOptions {
  bool allow_sampling = false;
  std::uint64_t seed = 0x5EEDC0DEull;
  std::uint64_t samples = 100'000;
  unsigned threads = 1;
};

struct ClosureReport {
  int k = 3;
  bool sampled = false;
  std::uint64_t idempotents = 0;
  std::uint64_t products_checked = 0;
  /// Each witness lists k idempotent tuples whose mu_k product is not idempotent.
  std::vector<std::vector<std::vector<int>>> violations;
};

/// Checks whether the idempotent k-ary matrices are closed under mu_k.
/// Exhaustive up to the enumeration guard; beyond it, random k-tuples are drawn
/// from a fixed-seed generator when sampling is allowed.
ClosureReport closure_violations(const CayleyTable& t, int k, const ClosureOptions& options = {});

/// mu_k of tuples evaluated in the table, following the cyclic slot formula.
std::vector<int> mu_k_tuples(const CayleyTable& t, std::span<const std::vector<int>> tuples);

std::string format_tuple(std::span<const int> tuple);

}  // namespace polybraid
