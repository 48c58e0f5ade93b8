#pragma once

#include <string>
#include <vector>

#include "polybraid/presentation.hpp"

namespace polybraid {

using IntMatrix = std::vector<std::vector<long long>>;

/// Row Hermite normal form: nonzero rows only, pivots positive and strictly
/// moving right, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns);

/// Invariant factors d_1 | d_2 | ... of the row lattice (nonzero ones only).
std::vector<long long> invariant_factors(const IntMatrix& rows, std::size_t columns);

/// Z^n modulo the lattice spanned by the exponent-sum vectors of the relators.
struct AbelianQuotient {
  int generators = 0;
  IntMatrix hermite;               // canonical basis of the relation lattice
  int rank = 0;                    // free rank of the quotient
  std::vector<long long> torsion;  // invariant factors > 1

  bool torsion_free() const { return torsion.empty(); }
  /// True when v lies in the relation lattice.
  bool contains(const std::vector<long long>& v) const;
};

AbelianQuotient abelian_quotient(const Presentation& p);

enum class Separation { distinct, inconclusive };

Separation separate_by_abelianization(const Presentation& p, const Word& a, const Word& b);
Separation separate_by_abelianization(const AbelianQuotient& q, const Word& a, const Word& b);

std::string format_abelian_quotient(const AbelianQuotient& q);

}  // namespace polybraid
