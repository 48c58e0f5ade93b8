#include "polybraid/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "polybraid/error.hpp"

namespace polybraid {

namespace {

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw error(errc::limit_exceeded, "integer overflow in lattice reduction");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw error(errc::limit_exceeded, "integer overflow in lattice reduction");
  return r;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// rows[dst] -= q * rows[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, long long q) {
  if (q == 0) return;
  for (auto& row : m) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t columns) {
  for (const auto& r : rows) {
    if (r.size() != columns) throw error(errc::invalid_argument, "ragged relation matrix");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < columns && pivot_row < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        row_axpy(rows, i, pivot_row, rows[i][col] / rows[pivot_row][col]);
        clean = clean && rows[i][col] == 0;
      }
      if (clean) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      row_axpy(rows, i, pivot_row, floor_div(rows[i][col], rows[pivot_row][col]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<long long> invariant_factors(const IntMatrix& rows, std::size_t columns) {
  IntMatrix a = rows;
  for (const auto& r : a) {
    if (r.size() != columns) throw error(errc::invalid_argument, "ragged relation matrix");
  }
  std::vector<long long> d;
  const std::size_t m = a.size();
  const std::size_t n = columns;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] != 0 && (bi == m || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == m) break;
    std::swap(a[t], a[bi]);
    for (auto& row : a) std::swap(row[t], row[bj]);

    while (true) {
      bool done = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        row_axpy(a, i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        col_axpy(a, j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) done = false;
      }
      if (!done) {
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < m; ++i) {
          if (a[i][t] != 0 && std::llabs(a[i][t]) < std::llabs(a[pi][pj])) pi = i, pj = t;
        }
        for (std::size_t j = t; j < n; ++j) {
          if (a[t][j] != 0 && std::llabs(a[t][j]) < std::llabs(a[pi][pj])) pi = t, pj = j;
        }
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);
        continue;
      }
      // the pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            row_axpy(a, t, i, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    d.push_back(std::llabs(a[t][t]));
  }
  return d;
}

bool AbelianQuotient::contains(const std::vector<long long>& v) const {
  if (v.size() != static_cast<std::size_t>(generators)) {
    throw error(errc::invalid_argument, "vector length differs from the generator count");
  }
  std::vector<long long> rest = v;
  std::size_t col = 0;
  for (const auto& row : hermite) {
    while (row[col] == 0) {
      if (rest[col] != 0) return false;
      ++col;
    }
    if (rest[col] % row[col] != 0) return false;
    const long long q = rest[col] / row[col];
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = checked_sub(rest[j], checked_mul(q, row[j]));
  }
  return std::all_of(rest.begin(), rest.end(), [](long long x) { return x == 0; });
}

AbelianQuotient abelian_quotient(const Presentation& p) {
  p.validate();
  AbelianQuotient q;
  q.generators = p.generators;
  IntMatrix rows;
  for (const RelationChain& c : p.chains) {
    const auto base = abelianize(c.first(), p.generators);
    for (std::size_t j = 1; j < c.size(); ++j) {
      const auto other = abelianize(c.words()[j], p.generators);
      std::vector<long long> diff(base.size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = base[i] - other[i];
      if (std::any_of(diff.begin(), diff.end(), [](long long x) { return x != 0; })) {
        rows.push_back(std::move(diff));
      }
    }
  }
  const auto columns = static_cast<std::size_t>(p.generators);
  q.hermite = hermite_normal_form(rows, columns);
  q.rank = p.generators - static_cast<int>(q.hermite.size());
  for (long long f : invariant_factors(q.hermite, columns)) {
    if (f > 1) q.torsion.push_back(f);
  }
  return q;
}

Separation separate_by_abelianization(const AbelianQuotient& q, const Word& a, const Word& b) {
  const auto va = abelianize(a, q.generators);
  const auto vb = abelianize(b, q.generators);
  std::vector<long long> diff(va.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = va[i] - vb[i];
  return q.contains(diff) ? Separation::inconclusive : Separation::distinct;
}

Separation separate_by_abelianization(const Presentation& p, const Word& a, const Word& b) {
  return separate_by_abelianization(abelian_quotient(p), a, b);
}

std::string format_abelian_quotient(const AbelianQuotient& q) {
  std::ostringstream os;
  os << "generators: " << q.generators << '\n';
  os << "free rank: " << q.rank << '\n';
  os << "torsion:";
  if (q.torsion.empty()) os << " none";
  for (long long t : q.torsion) os << ' ' << t;
  os << '\n';
  os << "hermite rows: " << q.hermite.size() << '\n';
  for (const auto& row : q.hermite) {
    os << '[';
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "]\n";
  }
  return os.str();
}

}  // namespace polybraid
