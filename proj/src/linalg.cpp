#include "hb/linalg.hpp"
#include <algorithm>
#include <stdexcept>
#include <map>

namespace hb {

using Row = std::vector<std::pair<int, Rational>>;

static void row_axpy(Row& a, const Rational& c, const Row& b) {
  // a += c*b, both sorted by column
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = c * b[j].second;
      if (!is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second + c * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a.swap(out);
}

// Echelon basis: rows keyed by pivot = smallest column, pivot coefficient 1.
// Rows are not inter-reduced; reduce() expands a vector over them exactly.
struct Echelon {
  std::map<int, Row> rows;

  // fully reduce v; if coef != null, record the expansion coefficient used
  // against each pivot (summed)
  Row reduce(Row v, std::map<int, Rational>* coef = nullptr) const {
    // always reduce at the smallest reducible column; row entries beyond a
    // pivot are strictly larger, so that column never reappears
    std::size_t start = 0;
    for (;;) {
      bool hit = false;
      for (std::size_t i = start; i < v.size(); ++i) {
        auto it = rows.find(v[i].first);
        if (it != rows.end()) {
          Rational c = v[i].second;
          if (coef) (*coef)[it->first] += c;
          row_axpy(v, -c, it->second);
          start = i;  // entries before i were checked irreducible and are unchanged
          hit = true;
          break;
        }
      }
      if (!hit) return v;
    }
  }

  // reduce and insert if independent; returns pivot col or -1.
  // If out != null, the normalized inserted row is copied there.
  int insert(Row v, Row* out = nullptr) {
    v = reduce(std::move(v));
    if (v.empty()) return -1;
    Rational lead = v.front().second;
    int pc = v.front().first;
    for (auto& [c, cv] : v) cv /= lead;
    if (out) *out = v;
    rows.emplace(pc, std::move(v));
    return pc;
  }
};

SparseMat SparseMat::identity(int n) {
  SparseMat m(n, n);
  for (int i = 0; i < n; ++i) m.row[i].emplace_back(i, Rational(1));
  return m;
}

void SparseMat::set(int r, int c, const Rational& v) {
  if (hb::is_zero(v)) return;
  auto& rw = row[r];
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != rw.end() && it->first == c) it->second = v;
  else rw.insert(it, {c, v});
}

void SparseMat::add(int r, int c, const Rational& v) {
  if (hb::is_zero(v)) return;
  auto& rw = row[r];
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != rw.end() && it->first == c) {
    it->second += v;
    if (hb::is_zero(it->second)) rw.erase(it);
  } else {
    rw.insert(it, {c, v});
  }
}

Rational SparseMat::get(int r, int c) const {
  const auto& rw = row[r];
  auto it = std::lower_bound(rw.begin(), rw.end(), c,
                             [](const auto& p, int col) { return p.first < col; });
  if (it != rw.end() && it->first == c) return it->second;
  return Rational(0);
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (cols != o.rows) throw std::runtime_error("matmul shape");
  SparseMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    std::map<int, Rational> acc;
    for (auto& [k, v] : row[i])
      for (auto& [j, w] : o.row[k]) acc[j] += v * w;
    for (auto& [j, v] : acc)
      if (!hb::is_zero(v)) r.row[i].emplace_back(j, v);
  }
  return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::runtime_error("matadd shape");
  SparseMat r = *this;
  for (int i = 0; i < rows; ++i) row_axpy(r.row[i], Rational(1), o.row[i]);
  return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::runtime_error("matsub shape");
  SparseMat r = *this;
  for (int i = 0; i < rows; ++i) row_axpy(r.row[i], Rational(-1), o.row[i]);
  return r;
}

SparseMat SparseMat::scaled(const Rational& s) const {
  SparseMat r(rows, cols);
  if (hb::is_zero(s)) return r;
  for (int i = 0; i < rows; ++i) {
    r.row[i] = row[i];
    for (auto& [c, v] : r.row[i]) v *= s;
  }
  return r;
}

SparseMat SparseMat::transpose() const {
  SparseMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (auto& [c, v] : row[i]) r.row[c].emplace_back(i, v);
  return r;
}

bool SparseMat::is_zero() const {
  for (auto& rw : row)
    if (!rw.empty()) return false;
  return true;
}

std::size_t SparseMat::nnz() const {
  std::size_t s = 0;
  for (auto& rw : row) s += rw.size();
  return s;
}

Rref rref(const SparseMat& m) {
  Echelon e;
  for (int i = 0; i < m.rows; ++i) e.insert(m.row[i]);
  // inter-reduce, descending pivots: larger-pivot rows are already clean
  std::vector<int> pivs;
  for (auto& [p, _] : e.rows) pivs.push_back(p);
  for (auto it = pivs.rbegin(); it != pivs.rend(); ++it) {
    Row v = e.rows[*it];
    for (std::size_t i = 1; i < v.size();) {
      auto jt = e.rows.find(v[i].first);
      if (jt != e.rows.end()) {
        row_axpy(v, -v[i].second, jt->second);
        // the eliminated column vanished; entries only shifted left of i never
        // appear (all new entries exceed the eliminated column)
      } else {
        ++i;
      }
    }
    e.rows[*it] = std::move(v);
  }
  Rref r;
  r.ncols = m.cols;
  for (auto& [p, rw] : e.rows) {
    r.pivot_cols.push_back(p);
    r.rows.push_back(rw);
  }
  return r;
}

Row Rref::reduce(Row v) const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int pc = pivot_cols[r];
    Rational cur(0);
    for (auto& p : v)
      if (p.first == pc) { cur = p.second; break; }
    if (!is_zero(cur)) row_axpy(v, -cur, rows[r]);
  }
  return v;
}

bool Rref::in_span(const Row& v) const { return reduce(v).empty(); }

int rank(const SparseMat& m) {
  Echelon e;
  for (int i = 0; i < m.rows; ++i) e.insert(m.row[i]);
  return (int)e.rows.size();
}

std::optional<std::vector<Rational>> solve(const SparseMat& A, const std::vector<Rational>& b) {
  SparseMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    aug.row[i] = A.row[i];
    if (!is_zero(b[i])) aug.row[i].emplace_back(A.cols, b[i]);
  }
  Rref r = rref(aug);
  for (int p : r.pivot_cols)
    if (p == A.cols) return std::nullopt;  // inconsistent
  // fully reduced rows: x_pivot + sum(free) = rhs; free vars set to 0
  std::vector<Rational> x(A.cols, Rational(0));
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    Rational rhs(0);
    for (auto& [c, v] : r.rows[i])
      if (c == A.cols) rhs = v;
    x[r.pivot_cols[i]] = rhs;
  }
  for (int i = 0; i < A.rows; ++i) {
    Rational s(0);
    for (auto& [c, v] : A.row[i]) s += v * x[c];
    if (s != b[i]) throw std::runtime_error("solve: internal reduction error");
  }
  return x;
}

SparseMat solve_multi(const SparseMat& A, const SparseMat& B) {
  if (A.rows != B.rows) throw std::runtime_error("solve_multi: shape mismatch");
  SparseMat aug(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    aug.row[i] = A.row[i];
    for (auto& [c, v] : B.row[i]) aug.row[i].emplace_back(A.cols + c, v);
  }
  Rref r = rref(aug);
  std::vector<int> pivotRow(A.cols, -1);
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] >= A.cols) throw std::runtime_error("solve_multi: inconsistent system");
    pivotRow[r.pivot_cols[i]] = (int)i;
  }
  SparseMat X(A.cols, B.cols);
  for (int j = 0; j < A.cols; ++j) {
    int i = pivotRow[j];
    if (i < 0) continue;  // free variable, set to zero
    for (auto& [c, v] : r.rows[i])
      if (c >= A.cols) X.add(j, c - A.cols, v);
  }
  if (!((A * X) - B).is_zero()) throw std::runtime_error("solve_multi: reduction error");
  return X;
}

std::vector<std::vector<Rational>> kernel(const SparseMat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      Rational cj(0);
      for (auto& [c, val] : r.rows[i])
        if (c == j) cj = val;
      if (!is_zero(cj)) v[r.pivot_cols[i]] = -cj;
    }
    out.push_back(std::move(v));
  }
  return out;
}

SparseMat inverse(const SparseMat& m) {
  if (m.rows != m.cols) throw std::runtime_error("inverse: not square");
  int n = m.rows;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (auto& [c, v] : m.row[i]) a[i][c] = v;
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(a[i][col])) { piv = i; break; }
    if (piv < 0) throw std::runtime_error("inverse: singular");
    std::swap(a[col], a[piv]);
    Rational lead = a[col][col];
    for (int j = col; j < 2 * n; ++j) a[col][j] /= lead;
    for (int i = 0; i < n; ++i) {
      if (i == col || is_zero(a[i][col])) continue;
      Rational f = a[i][col];
      for (int j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  SparseMat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(a[i][n + j])) r.row[i].emplace_back(j, a[i][n + j]);
  return r;
}

HomologyAtV homology_with_transfer(const SparseMat& f, const SparseMat& g) {
  // f: U -> V given as (dim V x dim U), g: V -> W as (dim W x dim V)
  int dimV = f.rows;
  if (g.cols != dimV) throw std::runtime_error("homology: shape");
  SparseMat fT = f.transpose();
  Echelon all;
  for (int i = 0; i < fT.rows; ++i) all.insert(fT.row[i]);

  // kernel vectors independent mod image; representatives are the reduced,
  // inserted rows themselves (still in ker g since im f lies in ker g)
  std::vector<Row> reps;
  std::vector<int> hom_pivots;
  for (auto& kv : kernel(g)) {
    Row v;
    for (int i = 0; i < dimV; ++i)
      if (!is_zero(kv[i])) v.emplace_back(i, kv[i]);
    Row stored;
    int pc = all.insert(std::move(v), &stored);
    if (pc >= 0) {
      reps.push_back(std::move(stored));
      hom_pivots.push_back(pc);
    }
  }

  HomologyAtV h;
  h.dim = (int)reps.size();
  h.rep = SparseMat(dimV, h.dim);
  for (int j = 0; j < h.dim; ++j)
    for (auto& [i, v] : reps[j]) h.rep.add(i, j, v);

  std::map<int, int> hom_index;
  for (int j = 0; j < h.dim; ++j) hom_index[hom_pivots[j]] = j;

  // proj: expansion coefficients against the hom rows; exact on ker g,
  // and zero on im f since expansions in an independent system are unique
  h.proj = SparseMat(h.dim, dimV);
  for (int col = 0; col < dimV; ++col) {
    std::map<int, Rational> coef;
    all.reduce(Row{{col, Rational(1)}}, &coef);
    for (auto& [p, c] : coef) {
      auto it = hom_index.find(p);
      if (it != hom_index.end() && !is_zero(c)) h.proj.add(it->second, col, c);
    }
  }
  return h;
}

}
