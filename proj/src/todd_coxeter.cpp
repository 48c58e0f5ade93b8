#include "polybraid/coset_enumeration.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "polybraid/error.hpp"

namespace polybraid {

namespace {

constexpr int undefined = -1;

int column_of(const Letter& l) { return 2 * (l.generator - 1) + (l.exponent > 0 ? 0 : 1); }
int inverse_column(int x) { return x ^ 1; }

struct OverflowSignal {};

class Enumerator {
 public:
  Enumerator(int generators, std::size_t max_cosets)
      : columns_(static_cast<std::size_t>(2 * generators)), max_cosets_(max_cosets) {
    new_coset();
  }

  std::size_t defined() const { return parent_.size(); }
  std::size_t live() const { return live_; }
  bool is_live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * columns_ + static_cast<std::size_t>(x)]; }

  void define(int c, int x) {
    const int d = new_coset();
    at(c, x) = d;
    at(d, inverse_column(x)) = c;
  }

  /// Traces w from c forwards and backwards, defining cosets until it closes.
  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c;
    int b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) != undefined) {
        f = at(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_column(w[static_cast<std::size_t>(j)])) != undefined) {
        b = at(b, inverse_column(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int x = w[static_cast<std::size_t>(i)];
        at(f, x) = b;
        at(b, inverse_column(x)) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  int next_live(int c) const {
    for (int d = c + 1; d < static_cast<int>(parent_.size()); ++d) {
      if (is_live(d)) return d;
    }
    return -1;
  }

  CosetTable compact(int generators) {
    std::vector<int> renumber(parent_.size(), undefined);
    int n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (parent_[c] == static_cast<int>(c)) renumber[c] = n++;
    }
    CosetTable t;
    t.generators = generators;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (renumber[c] == undefined) continue;
      std::vector<int> row(columns_);
      for (std::size_t x = 0; x < columns_; ++x) {
        row[x] = renumber[static_cast<std::size_t>(at(static_cast<int>(c), static_cast<int>(x)))];
      }
      t.rows.push_back(std::move(row));
    }
    return t;
  }

 private:
  int new_coset() {
    if (parent_.size() >= max_cosets_) throw OverflowSignal{};
    const int d = static_cast<int>(parent_.size());
    parent_.push_back(d);
    table_.resize(table_.size() + columns_, undefined);
    ++live_;
    return d;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (std::size_t xi = 0; xi < columns_; ++xi) {
        const int x = static_cast<int>(xi);
        const int f = at(e, x);
        if (f == undefined) continue;
        at(f, inverse_column(x)) = undefined;
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (at(e1, x) != undefined) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, inverse_column(x)) != undefined) {
          merge(e1, at(f1, inverse_column(x)), queue);
        } else {
          at(e1, x) = f1;
          at(f1, inverse_column(x)) = e1;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::size_t live_ = 0;
};

}  // namespace

bool CosetTable::consistent() const {
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != columns()) return false;
    for (std::size_t x = 0; x < columns(); ++x) {
      const int b = rows[a][x];
      if (b < 0 || static_cast<std::size_t>(b) >= rows.size()) return false;
      if (rows[static_cast<std::size_t>(b)][x ^ 1u] != static_cast<int>(a)) return false;
    }
  }
  return true;
}

std::vector<Word> relators(const Presentation& p) {
  std::vector<Word> out;
  for (const RelationChain& c : p.chains) {
    for (std::size_t j = 1; j < c.size(); ++j) {
      Word r = c.first() * invert(c.words()[j]);
      // cyclic reduction: strip inverse pairs wrapping around the ends
      auto ls = r.letters();
      std::size_t lo = 0;
      std::size_t hi = ls.size();
      while (hi - lo >= 2 && ls[lo] == ls[hi - 1].inverse()) {
        ++lo;
        --hi;
      }
      if (lo == hi) continue;
      Word cyc = r.subword(lo, hi - lo);
      if (std::find(out.begin(), out.end(), cyc) == out.end()) out.push_back(std::move(cyc));
    }
  }
  return out;
}

EnumerationResult todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  p.validate();
  if (max_cosets < 1) throw error(errc::invalid_argument, "max_cosets must be >= 1");
  std::vector<std::vector<int>> rels;
  for (const Word& r : relators(p)) {
    std::vector<int> cols;
    for (const Letter& l : r.letters()) cols.push_back(column_of(l));
    rels.push_back(std::move(cols));
  }

  EnumerationResult result;
  Enumerator en(p.generators, max_cosets);
  try {
    for (int c = 0; c != -1; c = en.next_live(c)) {
      for (const auto& r : rels) {
        if (!en.is_live(c)) break;
        en.scan_and_fill(c, r);
      }
      if (!en.is_live(c)) continue;
      for (int x = 0; x < 2 * p.generators; ++x) {
        if (en.at(c, x) == undefined) en.define(c, x);
      }
    }
  } catch (const OverflowSignal&) {
    result.status = EnumerationStatus::overflow;
    result.cosets_defined = en.defined();
    result.cosets_live = en.live();
    return result;
  }
  result.status = EnumerationStatus::finite;
  result.cosets_defined = en.defined();
  result.cosets_live = en.live();
  result.order = en.live();
  result.table = en.compact(p.generators);
  return result;
}

std::string format_enumeration(const EnumerationResult& r) {
  std::ostringstream os;
  os << "cosets_defined: " << r.cosets_defined << '\n';
  os << "cosets_live: " << r.cosets_live << '\n';
  if (r.status == EnumerationStatus::finite) {
    os << "order: " << r.order << '\n';
  } else {
    os << "order: unknown (overflow)\n";
  }
  return os.str();
}

}  // namespace polybraid
