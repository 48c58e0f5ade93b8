#include "polybraid/rewriting.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "polybraid/error.hpp"

namespace polybraid {

namespace {

std::vector<Word> rotations_of(const Word& w) {
  std::vector<Word> out;
  const auto ls = w.letters();
  for (std::size_t r = 0; r < ls.size(); ++r) {
    std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(r), ls.end());
    rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(r));
    Word rw(Mode::group, std::move(rot));
    if (!rw.empty() && std::find(out.begin(), out.end(), rw) == out.end()) out.push_back(std::move(rw));
  }
  return out;
}

bool matches_at(std::span<const Letter> word, std::span<const Letter> pattern, std::size_t pos) {
  if (pos + pattern.size() > word.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
}

Word substitute(const Word& u, const RewriteRule& rule, std::size_t pos) {
  const auto ls = u.letters();
  std::vector<Letter> out(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), rule.rhs.letters().begin(), rule.rhs.letters().end());
  out.insert(out.end(), ls.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), ls.end());
  return Word(Mode::group, std::move(out));
}

/// Rule applied to u at pos, or nothing when the lhs does not occur there.
std::optional<Word> apply(const Word& u, const RewriteRule& rule, std::size_t pos) {
  if (pos > u.size() || !matches_at(u.letters(), rule.lhs.letters(), pos)) return std::nullopt;
  return substitute(u, rule, pos);
}

struct Visit {
  Word parent;
  std::size_t rule = 0;
  std::size_t position = 0;
  bool root = false;
};

using VisitMap = std::unordered_map<Word, Visit, WordHash>;

}  // namespace

std::vector<RewriteRule> rewrite_rules(const Presentation& p) {
  std::vector<RewriteRule> rules;
  std::set<std::pair<Word, Word>> seen;
  const auto add = [&](std::size_t chain, std::string dir, Word lhs, Word rhs) {
    if (lhs == rhs || !seen.emplace(lhs, rhs).second) return;
    rules.push_back({chain, std::move(dir), std::move(lhs), std::move(rhs)});
  };
  for (std::size_t c = 0; c < p.chains.size(); ++c) {
    const RelationChain& chain = p.chains[c];
    const Word& w0 = chain.first();
    std::size_t rot_index = 0;
    for (std::size_t j = 1; j < chain.size(); ++j) {
      const Word& wj = chain.words()[j];
      const std::string suffix = "." + std::to_string(j);
      if (w0.empty() || wj.empty()) {
        const Word& relator = w0.empty() ? wj : w0;
        std::vector<Word> rots = rotations_of(relator);
        for (Word& r : rotations_of(invert(relator))) rots.push_back(std::move(r));
        for (const Word& r : rots) {
          const std::string idx = "." + std::to_string(rot_index++);
          add(c + 1, "ins" + idx, Word::identity(), r);
          add(c + 1, "del" + idx, r, Word::identity());
        }
      } else {
        add(c + 1, "fwd" + suffix, w0, wj);
        add(c + 1, "rev" + suffix, wj, w0);
        add(c + 1, "inv-fwd" + suffix, invert(w0), invert(wj));
        add(c + 1, "inv-rev" + suffix, invert(wj), invert(w0));
      }
    }
  }
  return rules;
}

EqualityResult bounded_equal(const Presentation& p, const Word& a, const Word& b,
                             const SearchBounds& bounds) {
  if (a.mode() != Mode::group || b.mode() != Mode::group) {
    throw error(errc::mode_mismatch, "word problem queries need group words");
  }
  if (a.max_generator() > p.generators || b.max_generator() > p.generators) {
    throw error(errc::invalid_argument, "query word uses a generator outside the presentation");
  }
  if (bounds.max_len < std::max(a.size(), b.size())) {
    throw error(errc::invalid_argument, "max_len is shorter than the query words");
  }
  if (bounds.max_states < 2) throw error(errc::invalid_argument, "max_states must be >= 2");

  EqualityResult result;
  if (a == b) {
    result.verdict = Verdict::equal;
    result.states = 1;
    return result;
  }

  const std::vector<RewriteRule> rules = rewrite_rules(p);
  VisitMap seen[2];
  std::vector<Word> frontier[2] = {{a}, {b}};
  seen[0].emplace(a, Visit{a, 0, 0, true});
  seen[1].emplace(b, Visit{b, 0, 0, true});
  result.states = 2;

  const auto build_trace = [&](const Word& meet) {
    std::vector<TraceStep> head;
    for (Word cur = meet; !seen[0].at(cur).root;) {
      const Visit& v = seen[0].at(cur);
      const RewriteRule& r = rules[v.rule];
      head.push_back({v.parent, cur, r.chain, r.direction, v.position, false});
      cur = v.parent;
    }
    std::reverse(head.begin(), head.end());
    for (Word cur = meet; !seen[1].at(cur).root;) {
      const Visit& v = seen[1].at(cur);
      const RewriteRule& r = rules[v.rule];
      head.push_back({cur, v.parent, r.chain, r.direction, v.position, true});
      cur = v.parent;
    }
    return head;
  };

  while (!frontier[0].empty() || !frontier[1].empty()) {
    const int side = frontier[0].empty()                               ? 1
                     : frontier[1].empty()                             ? 0
                     : frontier[1].size() < frontier[0].size() ? 1
                                                                       : 0;
    std::vector<Word> next;
    for (const Word& u : frontier[side]) {
      for (std::size_t ri = 0; ri < rules.size(); ++ri) {
        const RewriteRule& rule = rules[ri];
        if (rule.lhs.size() > u.size()) continue;
        for (std::size_t pos = 0; pos + rule.lhs.size() <= u.size(); ++pos) {
          if (!matches_at(u.letters(), rule.lhs.letters(), pos)) continue;
          Word v = substitute(u, rule, pos);
          if (v.size() > bounds.max_len || seen[side].contains(v)) continue;
          if (result.states >= bounds.max_states) return result;
          seen[side].emplace(v, Visit{u, ri, pos, false});
          ++result.states;
          if (seen[1 - side].contains(v)) {
            result.verdict = Verdict::equal;
            result.trace = build_trace(v);
            return result;
          }
          next.push_back(std::move(v));
        }
      }
    }
    frontier[side] = std::move(next);
  }
  return result;
}

bool replay_trace(const Presentation& p, const Word& a, const Word& b,
                  const std::vector<TraceStep>& trace) {
  const std::vector<RewriteRule> rules = rewrite_rules(p);
  Word cur = a;
  for (const TraceStep& step : trace) {
    if (step.from != cur) return false;
    const auto it = std::find_if(rules.begin(), rules.end(), [&](const RewriteRule& r) {
      return r.chain == step.chain && r.direction == step.direction;
    });
    if (it == rules.end()) return false;
    const auto produced = step.backward ? apply(step.to, *it, step.position)
                                        : apply(step.from, *it, step.position);
    if (!produced || *produced != (step.backward ? step.from : step.to)) return false;
    cur = step.to;
  }
  return cur == b;
}

std::string format_trace(const std::vector<TraceStep>& trace, Alphabet alphabet) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& s = trace[i];
    os << (i + 1) << ". " << format_word(s.from, alphabet) << " --[" << s.chain << '/'
       << (s.backward ? "~" : "") << s.direction << '/' << s.position << "]--> "
       << format_word(s.to, alphabet) << '\n';
  }
  return os.str();
}

}  // namespace polybraid
