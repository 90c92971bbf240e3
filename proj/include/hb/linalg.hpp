#pragma once
#include <vector>
#include <optional>
#include "hb/rational.hpp"

namespace hb {

// Sparse matrix over Q, row-major. Rows are kept sorted by column.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rational>>> row;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), row(r) {}
  static SparseMat identity(int n);
  void set(int r, int c, const Rational& v);  // assumes (r,c) unset or appended in order
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator+(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat scaled(const Rational& s) const;
  SparseMat transpose() const;
  bool is_zero() const;
  std::size_t nnz() const;
};

// Reduced row echelon form data: basis of the row space plus pivot columns.
struct Rref {
  std::vector<std::vector<std::pair<int, Rational>>> rows;  // echelon rows, pivot coeff 1
  std::vector<int> pivot_cols;                              // ascending
  int ncols = 0;

  // reduce v modulo the row space, in place representation returned
  std::vector<std::pair<int, Rational>> reduce(std::vector<std::pair<int, Rational>> v) const;
  bool in_span(const std::vector<std::pair<int, Rational>>& v) const;
};

Rref rref(const SparseMat& m);
int rank(const SparseMat& m);

// Solve A x = b; empty optional if inconsistent. x dense.
std::optional<std::vector<Rational>> solve(const SparseMat& A, const std::vector<Rational>& b);

// Solve A X = B columnwise with one elimination; throws if inconsistent.
SparseMat solve_multi(const SparseMat& A, const SparseMat& B);

// Null space basis (dense columns).
std::vector<std::vector<Rational>> kernel(const SparseMat& m);

// Dense inverse for small matrices; throws if singular.
SparseMat inverse(const SparseMat& m);

// Homology of  U --f--> V --g--> W  at V (g∘f = 0), with transfer data:
//   rep: V-coordinates of chosen homology representatives (dim V x h)
//   proj: homology coordinates of a V-vector (h x dim V), proj∘rep = id, proj∘f = 0
struct HomologyAtV {
  int dim = 0;
  SparseMat rep, proj;
};
HomologyAtV homology_with_transfer(const SparseMat& f, const SparseMat& g);

}
