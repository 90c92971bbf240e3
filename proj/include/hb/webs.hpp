#pragma once
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>
#include "hb/linalg.hpp"
#include "hb/rings.hpp"

namespace hb {

// ---------- layered merge/split diagrams ----------

enum class LayerKind { Merge, Split };

struct WebLayer {
  LayerKind kind;
  int pos;        // leftmost slice position touched
  int leftColor;  // Split only: color of the left output edge
};

// Diagram read bottom to top.  Each merge of colors (k,l) carries the shift
// q^{-kl}, accumulated in qshift; splits are shift-free.
struct Web {
  Composition bottom, top;
  std::vector<WebLayer> layers;
  int qshift = 0;
};

Web make_web(const Composition& bottom, const std::vector<WebLayer>& layers);
Web identity_web(const Composition& c);
// below then above; top(below) must equal bottom(above)
Web stack_webs(const Web& below, const Web& above);
// crossing-resolution ladder: bottom (k,l), top (l,k), middle right edge
// color i; i = min(k,l) degenerates to the identity and i = 0 to the full bend
Web ladder_web(int k, int l, int i);
// same ladder acting on strands (p, p+1) of a wider bottom composition
Web ladder_web_at(const Composition& bottom, int p, int i);
// swap the two adjacent layers at [j, j+1] (height exchange or elementary
// merge/split reassociation); throws if the pair admits neither
Web assoc_swap(const Web& w, int j);

// ---------- web bimodules as graded quotient-ring presentations ----------

struct WebVertexInfo {
  LayerKind kind;
  int left, right, coarse;  // edge ids, conv(left, right) = coarse
};

using GMono = EMono;                  // exponents over the edge generators
using EPoly = std::map<GMono, Rational>;

struct WebPiece {
  std::vector<GMono> cols;            // all monomials of the degree, sorted
  std::map<GMono, int> colIndex;
  Rref rel;                           // echelon of the relation span
  std::vector<GMono> basis;           // non-pivot monomials
  std::map<GMono, int> basisIndex;
};

struct WebBimodule {
  Web web;
  int nedges = 0;
  std::vector<int> edgeColor;
  std::vector<int> bottomEdges, topEdges;     // left to right
  std::vector<WebVertexInfo> vertices;        // one per layer
  std::vector<std::pair<int, int>> gens;      // (edge, j), qdeg 2j
  std::vector<int> edgeGenStart;              // -1 for colorless edges
  std::vector<EPoly> relations;
  // triangular elimination: merge output and split left-output generators are
  // solved out; pieces run over the free generators and the leftover split
  // relations only
  std::vector<char> genFree;
  std::vector<EPoly> genElim;                 // eliminated gen over free gens
  std::vector<EPoly> freeRelations;
  int window = 0;                             // pieces valid for 0 <= d <= window
  bool zero = false;                          // some edge has negative color

  int ngens() const { return (int)gens.size(); }
  int qdeg_of(const GMono& m) const;
  const WebPiece& piece(int d) const;
  int dim(int d) const;
  EPoly rewrite(const EPoly& p) const;        // substitute eliminated gens
  // coordinates of p in piece(d).basis; p must be homogeneous of degree d
  std::vector<std::pair<int, Rational>> reduce(const EPoly& p, int d) const;
  EPoly gen_poly(int g) const;
  EPoly edge_sym(int edge, int j) const;      // e_j(edge), 1 for j = 0
  EPoly conv(int edgeA, int edgeB, int j) const;
  std::vector<int> boundary_gens(bool top) const;
  std::string dump() const;

  mutable std::map<int, WebPiece> cache_;
  mutable std::map<std::pair<int, int>, EPoly> powCache_;  // (gen, k) -> elim^k
  mutable std::mutex mu_;
  mutable std::mutex rewMu_;
};

using WebPtr = std::shared_ptr<const WebBimodule>;

WebPtr bimodule_of_web(const Web& w, int window);
// A stacked above B
WebPtr horizontal_compose(const WebPtr& A, const WebPtr& B);

// ---------- graded linear maps ----------

struct GradedLinearMap {
  WebPtr src, tgt;
  int rawDeg = 0;
  std::function<EPoly(const GMono&)> apply;   // on free source monomials
  std::shared_ptr<std::map<int, SparseMat>> cache;
  std::shared_ptr<std::mutex> mu;

  GradedLinearMap();
  EPoly apply_poly(const EPoly& p) const;
  // matrix from piece(d) of src to piece(d + rawDeg) of tgt
  const SparseMat& matrix(int d) const;
};

enum class GenKind { Iota, Del, Mu, DeltaUp, Assoc };

struct WebSite {
  int layer;  // first layer index of the local move in the larger web
};

// S and T differ exactly by the named move at the site:
//   Iota: T has an eye [split, merge] (or for a bubble site, the bottom-copy
//         inclusion) that S lacks; ring-generated, raw degree 0
//   Del:  collapse of the eye S has and T lacks (relative Demazure trace), or
//         the left-factor trace on a bubble site
//   Mu:   collapse of the bubble [merge, split] of S (alphabet identification)
//   DeltaUp: insertion of the bubble of T (Frobenius element multiplication)
//   Assoc: S and T differ by assoc_swap at the site
GradedLinearMap generator_map(GenKind kind, WebSite site, const WebPtr& S, const WebPtr& T);

// multiplication by a polynomial in the boundary edge generators of one side
GradedLinearMap action_map(const WebPtr& B, bool leftSide, const EPoly& p);
// multiplication by an arbitrary homogeneous polynomial, interior edges allowed
GradedLinearMap mult_map(const WebPtr& B, const EPoly& p);
// express a (S_a x S_b)-invariant polynomial in x-variables over the edge
// generators of the pair (eL, eR)
EPoly realize_on_edge_pair(const WebBimodule& B, int eL, int eR, const Poly& f);

GradedLinearMap identity_map(const WebPtr& B);
GradedLinearMap zero_map(const WebPtr& S, const WebPtr& T, int rawDeg);
GradedLinearMap compose(const GradedLinearMap& g, const GradedLinearMap& f);
GradedLinearMap map_sum(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap map_scale(const GradedLinearMap& f, const Rational& c);
// f extended by identity webs below and above its source and target
GradedLinearMap extend_map(const GradedLinearMap& f, const Web& below, const Web& above,
                           int window);

// Rickard-Rouquier differentials between consecutive ladder terms, as raw
// bimodule maps (explicit tq-shifts live in the complexes layer):
//   dplus:  W_i -> W_{i+1}, raw degree -2i
//   dminus: W_{i+1} -> W_i, raw degree 2i+2
GradedLinearMap ladder_dplus(int k, int l, int i, int window);
GradedLinearMap ladder_dminus(int k, int l, int i, int window);
GradedLinearMap ladder_dplus_at(const Composition& bottom, int p, int i, int window);
GradedLinearMap ladder_dminus_at(const Composition& bottom, int p, int i, int window);

}
