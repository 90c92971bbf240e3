#pragma once
#include <map>
#include <vector>
#include <string>
#include <cstdint>
#include "hb/rational.hpp"
#include "hb/laurent.hpp"

namespace hb {

// ---------- polynomials ----------

struct Monomial {
  std::vector<uint16_t> e;
  int total() const {
    int s = 0;
    for (auto v : e) s += v;
    return s;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// graded-lex, x1 > x2 > ... ; "less" = smaller in that order
struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    // same degree: a < b iff at first differing variable a has smaller exponent
    for (std::size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

using Perm = std::vector<int>;  // p[i] = p(i), 0-based

Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);  // (p∘q)(i) = p(q(i))
Perm perm_inverse(const Perm& p);
Perm perm_transposition(int n, int i);  // s_i swaps i, i+1 (0-based)
int perm_length(const Perm& p);         // inversions
std::vector<int> reduced_word(Perm w);  // w = s_{i1}...s_{ik}, letters 0-based

struct Poly {
  int n = 0;
  std::map<Monomial, Rational, MonoLess> t;

  static Poly zero(int n) { return {n, {}}; }
  static Poly constant(int n, const Rational& c);
  static Poly var(int n, int i, int pow = 1);

  bool is_zero() const { return t.empty(); }
  // qdeg of a homogeneous poly (2 * total exponent); -1 for zero, throws if inhomogeneous
  int qdeg() const;
  void add_term(const Monomial& m, const Rational& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return n == o.n && t == o.t; }
  std::string str() const;
};

Poly act(const Perm& w, const Poly& f);  // x_i -> x_{w(i)}
Poly demazure(int i, const Poly& f);     // (f - s_i f)/(x_i - x_{i+1}), 0-based i
Poly demazure_word(const std::vector<int>& word, const Poly& f);  // rightmost letter applied first
Poly elementary_symmetric(int n, const std::vector<int>& vars, int j);

// ---------- compositions and invariant rings ----------

struct Composition {
  std::vector<int> parts;
  int N() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int blocks() const { return (int)parts.size(); }
  // first variable index of block b
  int block_start(int b) const;
  std::vector<int> block_vars(int b) const;
  int block_of(int var) const;
  // length of the longest element of the parabolic
  int longest_length() const;
  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator<(const Composition& o) const { return parts < o.parts; }
  std::string str() const;
};

// I refines J with the same N (blockwise: J-blocks are unions of consecutive I-blocks)
bool refines(const Composition& I, const Composition& J);

Perm longest_element(const Composition& I);  // w_I

// trace map R^I -> R^J along w_J w_I (both longest elements; an involution each)
Poly demazure_relative(const Composition& I, const Composition& J, const Poly& f);

HilbSeries qdim_invariant_ring(const Composition& I);
// Poincaré polynomial of W_J / W_I in q^2 steps: graded rank of R^I over R^J
LaurentPoly coset_rank_poly(const Composition& I, const Composition& J);

// e-monomials: exponent vectors over the generators e_j(block b) of R^I
struct EMono {
  std::vector<uint16_t> e;  // flattened over (block, j), j = 1..k_b
  bool operator<(const EMono& o) const { return e < o.e; }
  bool operator==(const EMono& o) const { return e == o.e; }
};

struct InvariantRing {
  Composition I;
  // generator g -> (block, j) with qdeg 2j
  std::vector<std::pair<int, int>> gens;

  explicit InvariantRing(Composition c);
  int qdeg_of(const EMono& m) const;
  std::vector<EMono> monos_of_qdeg(int d) const;   // deterministic order
  Poly realize(const EMono& m) const;              // as Poly in x-variables
  Poly realize_gen(int g) const;
  // expand an I-invariant poly over e-monomials; throws if not invariant
  std::map<EMono, Rational> express(const Poly& f) const;
};

// dual bases of R^I over R^J under demazure_relative
struct FrobeniusData {
  Composition I, J;
  int degdrop;  // 2(l(J) - l(I))
  std::vector<Poly> basis, dual;  // pairing: trace(basis[i]*dual[j]) = delta_ij
  std::vector<int> basis_qdeg;
};

const FrobeniusData& frobenius(const Composition& I, const Composition& J);  // memoized

// deterministic seeded RNG helper for property tests
struct SplitMix {
  std::uint64_t s;
  explicit SplitMix(std::uint64_t seed) : s(seed) {}
  std::uint64_t next();
  int range(int lo, int hi);  // inclusive
};

Poly random_poly(SplitMix& rng, int n, int qdeg, int terms);

}
