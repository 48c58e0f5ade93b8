#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polybraid/presentation.hpp"

namespace polybraid {

/// Closed coset table with live cosets renumbered 0..N-1 in order of first
/// definition. Column 2(g-1) is generator g, column 2(g-1)+1 its inverse.
struct CosetTable {
  int generators = 0;
  std::vector<std::vector<int>> rows;

  std::size_t columns() const { return static_cast<std::size_t>(2 * generators); }
  /// a.g = b implies b.g^-1 = a for every entry.
  bool consistent() const;
};

enum class EnumerationStatus { finite, overflow };

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::overflow;
  std::size_t order = 0;           // live cosets when finite
  std::size_t cosets_defined = 0;  // total cosets ever created
  std::size_t cosets_live = 0;     // live cosets when the run stopped
  CosetTable table;                // filled only when finite
};

/// Relators w_0 w_j^-1 of every chain, freely and cyclically reduced, empty ones dropped.
std::vector<Word> relators(const Presentation& p);

/// HLT coset enumeration over the trivial subgroup. Cosets are processed in
/// creation order and coincidences are resolved as soon as they appear.
/// Overflow means more than max_cosets cosets would have to be defined.
EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets);

/// `cosets_defined`, `cosets_live` and `order` lines (`order: unknown (overflow)` on overflow).
std::string format_enumeration(const EnumerationResult& r);

}  // namespace polybraid
