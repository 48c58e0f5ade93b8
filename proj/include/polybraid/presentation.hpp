#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polybraid/relation.hpp"
#include "polybraid/text.hpp"

namespace polybraid {

enum class Family {
  artin_braid,
  higher_braid,
  higher_symmetric,
  higher_coxeter,
  coxeter_classic,
  custom,
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Group presentation: generators 1..generators and relation chains.
struct Presentation {
  Family family = Family::custom;
  int n = 0;
  int k = 0;
  int generators = 1;
  std::vector<RelationChain> chains;

  /// Throws when a chain uses a generator beyond the alphabet or is not group mode.
  void validate() const;
};

Presentation artin_braid(int n);
Presentation higher_braid(int n, int k);
Presentation higher_symmetric(int n, int k);

/// Exponent assignment for the higher Coxeter relations
/// (r_{i1} ... r_{i_{k-1}})^m = e, keyed by index tuples of length k-1.
struct CoxeterSpec {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, int> exponents;

  /// Consecutive windows get m = k, far tuples m = k-1, diagonal tuples m = 1.
  static CoxeterSpec defaults(int n, int k);
  void validate() const;
};

Presentation higher_coxeter(const CoxeterSpec& spec);

/// Classical Coxeter presentation from a symmetric n x n matrix (diagonal 1,
/// off-diagonal >= 2).
Presentation coxeter_classic(const std::vector<std::vector<int>>& m);

/// A_{n-1} Coxeter matrix, whose group is the symmetric group S_n.
std::vector<std::vector<int>> coxeter_matrix_a(int n);

/// Strictly increasing (k-1)-subsets of {1..n-1} with all gaps >= k-1.
std::vector<std::vector<int>> far_tuples(int n, int k);

/// Words of the braid chain for window i: length-k runs of the cyclic sequence
/// i, i+1, ..., i+k-2, i, ... starting at offsets 0..k-2.
std::vector<Word> braid_chain_words(int i, int k);

struct CorrespondenceReport {
  bool ok = true;
  std::size_t matrix_equations = 0;
  std::size_t word_equations = 0;
  std::vector<std::string> discrepancies;
};

/// Expands every finite-order equation (Sigma_rotation)^k = q_i E and every far
/// equation (Sigma_tuple)^{k-1} E = (Sigma_tau(tuple))^{k-1} E into slot
/// equations and checks that the resulting equivalence classes of words are
/// exactly the chains of higher_braid(n, k).
CorrespondenceReport verify_braid_matrix_correspondence(int n, int k);

std::string format_correspondence(const CorrespondenceReport& report, int n, int k);

enum class ExportFormat { plain, json };

ExportFormat parse_export_format(std::string_view name);

/// plain: `generators: G` then one chain per line, words joined by ` = `.
/// json: {"family","n","k","generators","chains":[{"tag","words"}]}
std::string export_presentation(const Presentation& p, ExportFormat format,
                                Alphabet alphabet = Alphabet::s);

/// Reads either export format back (json when the text starts with '{').
Presentation parse_presentation(std::string_view text);

}  // namespace polybraid
