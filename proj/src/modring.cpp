#include "modring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tgrip {

i64 gcd64(i64 a, i64 b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm64(i64 a, i64 b) { return a / gcd64(a, b) * b; }

i64 mod_norm(i64 a, i64 m) {
  a %= m;
  return a < 0 ? a + m : a;
}

namespace {
// Extended gcd: returns g and x with a*x == g (mod m context caller-side).
i64 egcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}
}  // namespace

i64 inv_mod(i64 a, i64 m) {
  a = mod_norm(a, m);
  i64 x, y;
  i64 g = egcd(a, m, x, y);
  if (g != 1) throw std::runtime_error("inv_mod: not a unit");
  return mod_norm(x, m);
}

i64 pow_mod(i64 a, i64 e, i64 m) {
  a = mod_norm(a, m);
  i64 r = 1 % m;
  while (e > 0) {
    if (e & 1) r = (r * a) % m;
    a = (a * a) % m;
    e >>= 1;
  }
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(i64 m, i64* p, int* k) {
  if (m < 2) return false;
  i64 d = 2;
  while (d * d <= m && m % d != 0) ++d;
  if (d * d > m) d = m;  // m prime
  i64 q = m;
  int e = 0;
  while (q % d == 0) {
    q /= d;
    ++e;
  }
  if (q != 1) return false;
  if (p) *p = d;
  if (k) *k = e;
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 m) {
  std::vector<std::pair<i64, int>> out;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.push_back({d, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

int val_p(i64 x, i64 p, int k) {
  x = std::llabs(x);
  if (x == 0) return k;
  int v = 0;
  while (v < k && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

namespace {

// Row echelon over Z/p^k with global minimum-valuation pivoting.  Pivot
// columns are cleared in the still-active rows only; once a row is frozen as
// a pivot it is not touched again, so every elimination divides exactly.  The
// resulting pivots come out in selection order with nondecreasing valuations,
// and frozen row i has zeros at the pivot columns of all earlier pivots.
// Rows may be wider than `ncols` (augmented systems); the extra columns take
// part in the row operations but never in pivot selection.
struct Pivot {
  int row, col, v;
};

std::vector<Pivot> rref_local(Mat& a, int ncols, i64 p, int k, i64 m) {
  std::vector<Pivot> pivots;
  std::vector<bool> row_used(a.size(), false);
  std::vector<bool> col_used(ncols, false);
  for (;;) {
    // Global minimum-valuation entry among active rows / unused cols.
    int br = -1, bc = -1, bv = k;
    for (int r = 0; r < (int)a.size(); ++r) {
      if (row_used[r]) continue;
      for (int c = 0; c < ncols; ++c) {
        if (col_used[c] || a[r][c] == 0) continue;
        int v = val_p(a[r][c], p, k);
        if (v < bv) {
          bv = v;
          br = r;
          bc = c;
          if (bv == 0) break;
        }
      }
      if (bv == 0 && br >= 0) break;
    }
    if (br < 0) break;
    int width = (int)a[br].size();
    // Normalise pivot row: divide unit part out so pivot becomes p^bv.
    i64 piv = a[br][bc];
    i64 unit = piv;
    for (int i = 0; i < bv; ++i) unit /= p;
    i64 uinv = inv_mod(unit, m);
    for (int c = 0; c < width; ++c) a[br][c] = mod_norm(a[br][c] * uinv, m);
    i64 pv = 1;
    for (int i = 0; i < bv; ++i) pv *= p;
    // Clear the pivot column in the remaining active rows; their entries have
    // valuation >= bv by minimality, so the division is exact.
    for (int r = 0; r < (int)a.size(); ++r) {
      if (r == br || row_used[r] || a[r][bc] == 0) continue;
      i64 q = a[r][bc] / pv;
      for (int c = 0; c < width; ++c)
        a[r][c] = mod_norm(a[r][c] - q * a[br][c], m);
    }
    row_used[br] = true;
    col_used[bc] = true;
    pivots.push_back({br, bc, bv});
  }
  return pivots;
}

// Solve row_i . x == rhs_i for the pivot variables by back-substitution in
// reverse selection order; free variables are fixed beforehand by the caller.
// Returns false if some equation has no solution.  All divisions are exact
// because every entry of a frozen pivot row has valuation >= its pivot's.
bool back_substitute(const Mat& a, const std::vector<Pivot>& pivots, int ncols,
                     const Vec& rhs, i64 p, int k, i64 m, Vec& x) {
  for (int i = (int)pivots.size() - 1; i >= 0; --i) {
    auto& pv = pivots[i];
    i64 s = 0;
    for (int c = 0; c < ncols; ++c) {
      if (c == pv.col || x[c] == 0 || a[pv.row][c] == 0) continue;
      s = mod_norm(s + a[pv.row][c] * x[c], m);
    }
    i64 r = mod_norm(rhs[i] - s, m);
    if (val_p(r, p, k) < pv.v) return false;
    i64 pvv = 1;
    for (int t = 0; t < pv.v; ++t) pvv *= p;
    x[pv.col] = r / pvv;
  }
  return true;
}

Mat kernel_prime_power(const Mat& a_in, int ncols, i64 p, int k, i64 m) {
  Mat a = a_in;
  for (auto& row : a)
    for (auto& x : row) x = mod_norm(x, m);
  auto pivots = rref_local(a, ncols, p, k, m);
  std::vector<int> pivot_of_col(ncols, -1);
  for (int i = 0; i < (int)pivots.size(); ++i) pivot_of_col[pivots[i].col] = i;
  Mat gens;
  Vec zero_rhs(pivots.size(), 0);
  // Free-column generators: x_f = 1, pivot variables by back-substitution.
  for (int f = 0; f < ncols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    Vec x(ncols, 0);
    x[f] = 1;
    if (!back_substitute(a, pivots, ncols, zero_rhs, p, k, m, x))
      throw std::runtime_error("kernel: inconsistent echelon");
    gens.push_back(x);
  }
  // Torsion generators: seed pivot i with p^(k-v); rows j > i vanish there
  // (their pivot columns were cleared while they were active), rows j < i
  // are fixed up by back-substitution over the earlier pivots.
  for (int i = 0; i < (int)pivots.size(); ++i) {
    if (pivots[i].v == 0) continue;
    Vec x(ncols, 0);
    i64 t = m;
    for (int j = 0; j < pivots[i].v; ++j) t /= p;
    x[pivots[i].col] = t;
    std::vector<Pivot> earlier(pivots.begin(), pivots.begin() + i);
    Vec rhs(earlier.size(), 0);
    if (!back_substitute(a, earlier, ncols, rhs, p, k, m, x))
      throw std::runtime_error("kernel: inconsistent torsion echelon");
    gens.push_back(x);
  }
  return gens;
}

}  // namespace

Mat kernel_mod(const Mat& a, int ncols, i64 m) {
  if (m == 1) {
    // Everything is a solution; a single basis of unit vectors.
    return mat_identity(ncols);
  }
  i64 p;
  int k;
  if (prime_power(m, &p, &k)) return kernel_prime_power(a, ncols, p, k, m);
  // CRT across prime-power parts.
  Mat gens;
  for (auto [q, e] : factorize(m)) {
    i64 qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    i64 rest = m / qe;
    Mat part = kernel_prime_power(a, ncols, q, e, qe);
    // Lift x (mod qe) to y == x (mod qe), y == 0 (mod rest).
    i64 c = rest * inv_mod(rest % qe, qe) % m;  // c == 1 mod qe, 0 mod rest
    for (auto& x : part) {
      Vec y(ncols);
      for (int i = 0; i < ncols; ++i) y[i] = mod_norm(x[i] * c, m);
      gens.push_back(y);
    }
  }
  return gens;
}

i64 span_size_mod(const Mat& rows, int ncols, i64 m) {
  if (m == 1 || rows.empty()) return 1;
  i64 p;
  int k;
  if (prime_power(m, &p, &k)) {
    Mat a = rows;
    for (auto& r : a) {
      r.resize(ncols);
      for (auto& x : r) x = mod_norm(x, m);
    }
    auto pivots = rref_local(a, ncols, p, k, m);
    // Frozen pivot rows generate the span; combinations hitting each pivot
    // column with a multiple of p^v are injective, so the count is exact.
    i64 s = 1;
    for (auto& pv : pivots) {
      i64 t = m;
      for (int i = 0; i < pv.v; ++i) t /= p;
      s *= t;
    }
    return s;
  }
  i64 s = 1;
  for (auto [q, e] : factorize(m)) {
    i64 qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    s *= span_size_mod(rows, ncols, qe);
  }
  return s;
}

bool row_in_span_mod(const Vec& row, const Mat& rows, int ncols, i64 m) {
  // Coefficients y with sum_i y_i rows_i == row: transpose and solve.
  int nr = (int)rows.size();
  Mat at(ncols, Vec(nr, 0));
  for (int i = 0; i < nr; ++i)
    for (int c = 0; c < ncols && c < (int)rows[i].size(); ++c)
      at[c][i] = rows[i][c];
  Vec b(row);
  b.resize(ncols, 0);
  return solve_mod(at, b, nr, m).has_value();
}

std::optional<Vec> solve_mod(const Mat& a_in, const Vec& b, int ncols, i64 m) {
  if (m == 1) return Vec(ncols, 0);
  i64 p;
  int k;
  if (!prime_power(m, &p, &k)) {
    // CRT: solve separately, combine.
    Vec x(ncols, 0);
    for (auto [q, e] : factorize(m)) {
      i64 qe = 1;
      for (int i = 0; i < e; ++i) qe *= q;
      Mat aa = a_in;
      Vec bb = b;
      auto sol = solve_mod(aa, bb, ncols, qe);
      if (!sol) return std::nullopt;
      i64 rest = m / qe;
      i64 c = rest * inv_mod(rest % qe, qe) % m;
      for (int i = 0; i < ncols; ++i)
        x[i] = mod_norm(x[i] + (*sol)[i] * c, m);
    }
    return x;
  }
  Mat a = a_in;
  int nrows = (int)a.size();
  for (int r = 0; r < nrows; ++r) {
    a[r].resize(ncols + 1);
    a[r][ncols] = mod_norm(b[r], m);
    for (int c = 0; c < ncols; ++c) a[r][c] = mod_norm(a[r][c], m);
  }
  // Eliminate with pivots in the first ncols columns; the augmented column
  // rides along through the row operations.
  auto pivots = rref_local(a, ncols, p, k, m);
  std::vector<bool> row_has_pivot(nrows, false);
  for (auto& pv : pivots) row_has_pivot[pv.row] = true;
  for (int r = 0; r < nrows; ++r)
    if (!row_has_pivot[r] && mod_norm(a[r][ncols], m) != 0) return std::nullopt;
  Vec x(ncols, 0);
  Vec rhs(pivots.size());
  for (int i = 0; i < (int)pivots.size(); ++i)
    rhs[i] = mod_norm(a[pivots[i].row][ncols], m);
  if (!back_substitute(a, pivots, ncols, rhs, p, k, m, x)) return std::nullopt;
  return x;
}

namespace {

void check_entry(i64 x) {
  if (std::llabs(x) > (i64(1) << 52))
    throw std::runtime_error("snf: entry overflow");
}

// Integer Smith normal form on `a` (rows x n), tracking column ops in v/vinv
// when they are non-null.
void snf_core(Mat& a, int n, Mat* v, Mat* vinv) {
  int rows = (int)a.size();
  auto col_swap = [&](int i, int j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    if (v)
      for (auto& r : *v) std::swap(r[i], r[j]);
    if (vinv) std::swap((*vinv)[i], (*vinv)[j]);
  };
  auto col_add = [&](int dst, int src, i64 f) {
    // col_dst += f * col_src
    for (auto& r : a) {
      r[dst] += f * r[src];
      check_entry(r[dst]);
    }
    if (v)
      for (auto& r : *v) {
        r[dst] += f * r[src];
        check_entry(r[dst]);
      }
    if (vinv)
      for (int c = 0; c < n; ++c) {
        (*vinv)[src][c] -= f * (*vinv)[dst][c];
        check_entry((*vinv)[src][c]);
      }
  };
  auto col_neg = [&](int i) {
    for (auto& r : a) r[i] = -r[i];
    if (v)
      for (auto& r : *v) r[i] = -r[i];
    if (vinv)
      for (int c = 0; c < n; ++c) (*vinv)[i][c] = -(*vinv)[i][c];
  };
  auto row_swap = [&](int i, int j) { std::swap(a[i], a[j]); };
  auto row_add = [&](int dst, int src, i64 f) {
    for (int c = 0; c < n; ++c) {
      a[dst][c] += f * a[src][c];
      check_entry(a[dst][c]);
    }
  };

  int t = 0;  // current diagonal position
  int limit = std::min(rows, n);
  while (t < limit) {
    // Find nonzero entry of minimal absolute value in the remaining block.
    int br = -1, bc = -1;
    i64 best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < n; ++c)
        if (a[r][c] != 0 && (br < 0 || std::llabs(a[r][c]) < best)) {
          best = std::llabs(a[r][c]);
          br = r;
          bc = c;
        }
    if (br < 0) break;
    row_swap(t, br);
    col_swap(t, bc);
    if (a[t][t] < 0) col_neg(t);
    // Reduce row and column; restart block if a remainder shrinks the pivot.
    bool dirty = false;
    for (int r = t + 1; r < rows; ++r) {
      if (a[r][t] == 0) continue;
      i64 q = a[r][t] / a[t][t];
      row_add(r, t, -q);
      if (a[r][t] != 0) dirty = true;
    }
    for (int c = t + 1; c < n; ++c) {
      if (a[t][c] == 0) continue;
      i64 q = a[t][c] / a[t][t];
      col_add(c, t, -q);
      if (a[t][c] != 0) dirty = true;
    }
    if (dirty) continue;
    // Divisibility fix-up: pivot must divide every later entry.
    bool fixed = true;
    for (int r = t + 1; r < rows && fixed; ++r)
      for (int c = t + 1; c < n && fixed; ++c)
        if (a[r][c] % a[t][t] != 0) {
          row_add(t, r, 1);
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
}

}  // namespace

std::vector<i64> snf_invariants(Mat rels, int n) {
  for (auto& r : rels) r.resize(n, 0);
  snf_core(rels, n, nullptr, nullptr);
  std::vector<i64> d(n, 0);
  int limit = std::min((int)rels.size(), n);
  for (int i = 0; i < limit; ++i) d[i] = std::llabs(rels[i][i]);
  std::vector<i64> out;
  for (i64 x : d)
    if (x != 1) out.push_back(x);  // keep 0s: caller checks finiteness
  return out;
}

SnfResult snf_with_transform(Mat rels, int n) {
  for (auto& r : rels) r.resize(n, 0);
  SnfResult res;
  res.v = mat_identity(n);
  res.vinv = mat_identity(n);
  snf_core(rels, n, &res.v, &res.vinv);
  res.diag.assign(n, 0);
  int limit = std::min((int)rels.size(), n);
  for (int i = 0; i < limit; ++i) res.diag[i] = std::llabs(rels[i][i]);
  return res;
}

std::vector<i64> quotient_invariants(const std::vector<i64>& d, const Mat& sub) {
  int n = (int)d.size();
  Mat rels;
  for (auto row : sub) {
    row.resize(n, 0);
    rels.push_back(row);
  }
  for (int i = 0; i < n; ++i) {
    Vec row(n, 0);
    row[i] = d[i];
    rels.push_back(row);
  }
  auto inv = snf_invariants(rels, n);
  for (i64 x : inv)
    if (x == 0) throw std::runtime_error("quotient_invariants: infinite part");
  return inv;
}

Mat mat_identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul_mod(const Mat& a, const Mat& b, i64 m) {
  int n = (int)a.size(), k = (int)b.size(), c = b.empty() ? 0 : (int)b[0].size();
  Mat r(n, Vec(c, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (int t = 0; t < c; ++t)
        r[i][t] = mod_norm(r[i][t] + a[i][j] * b[j][t], m);
    }
  return r;
}

}  // namespace tgrip
