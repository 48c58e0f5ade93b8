#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polybraid/presentation.hpp"

namespace polybraid {

/// A single rewrite rule derived from one relation chain. Substitution rules
/// come from pairs (first word, other word) and their inverses; chains with an
/// identity word yield insertion/deletion rules for every cyclic rotation of
/// the relator and of its inverse.
struct RewriteRule {
  std::size_t chain = 0;  // 1-based chain number
  std::string direction;  // fwd.j, rev.j, inv-fwd.j, inv-rev.j, ins.r, del.r
  Word lhs;
  Word rhs;
};

std::vector<RewriteRule> rewrite_rules(const Presentation& p);

/// One trace line. A step rewrites `from` into `to` by replacing the rule's
/// lhs at `position` with its rhs and freely reducing. Steps with `backward`
/// set were found by searching from the target: there the rule applied to
/// `to` at `position` yields `from`.
struct TraceStep {
  Word from;
  Word to;
  std::size_t chain = 0;
  std::string direction;
  std::size_t position = 0;
  bool backward = false;
};

enum class Verdict { equal, unknown };

struct EqualityResult {
  Verdict verdict = Verdict::unknown;
  std::vector<TraceStep> trace;
  std::size_t states = 0;
};

struct SearchBounds {
  std::size_t max_len = 12;
  std::size_t max_states = 100'000;
};

/// Bidirectional breadth-first search over freely reduced words of length at
/// most max_len, expanding the smaller frontier level by level. Returns
/// unknown once max_states distinct words have been visited without the two
/// searches meeting.
EqualityResult bounded_equal(const Presentation& p, const Word& a, const Word& b,
                             const SearchBounds& bounds = {});

/// Re-applies every step of a trace; true when it leads from a to b.
bool replay_trace(const Presentation& p, const Word& a, const Word& b,
                  const std::vector<TraceStep>& trace);

/// Numbered lines `<word> --[chain#/direction/position]--> <word>`.
std::string format_trace(const std::vector<TraceStep>& trace, Alphabet alphabet = Alphabet::s);

}  // namespace polybraid
