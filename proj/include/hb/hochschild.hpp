#pragma once
#include <array>
#include <map>
#include <vector>

#include "hb/complexes.hpp"

namespace hb {

// Iterated-cone homology of one web bimodule under strand closures.  Each cone
// factor is multiplication by e_i(top edge) - e_i(bottom edge) of a closed
// strand, placed in the next a-degree with a q^{-2i} shift.  Stages take
// homology after every factor and keep transfer matrices, so later factors and
// bimodule maps act on the shrunken spaces.  Labels Q are raw piece degrees
// with the accumulated cone shifts discounted; truncation-free labels satisfy
// Q <= qmax().
struct HHTower {
  WebPtr B;
  int window = 0;
  std::vector<GradedLinearMap> factors;  // processed order
  std::vector<int> degs;                 // factor q-degrees, parallel to factors
  // stages[s][{a, Q}]: homology after factor s+1 with rep/proj into the pair
  // [stage-s (a, Q); stage-s (a-1, Q + degs[s])]
  std::vector<std::map<std::array<int, 2>, HomologyAtV>> stages;

  int nstages() const { return (int)stages.size(); }
  int amax() const { return (int)factors.size(); }
  int qmin() const;
  int qmax() const;
  int dim(int a, int Q) const;  // final stage; 0 outside the stored slices
  std::map<std::array<int, 2>, int> dims() const;
};

// cone factors closing boundary strand `pos`; bottom and top colors must agree
std::vector<GradedLinearMap> strand_trace_factors(const WebPtr& B, int pos);
// extend the tower by one cone factor of the given q-degree
void tower_push(HHTower& T, const GradedLinearMap& f, int qdeg);
// close the listed strand positions in order
HHTower traced_tower(const WebPtr& B, const std::vector<int>& strands, int window);
// close every strand, rightmost first
HHTower hh(const WebPtr& B, int window);

// matrix induced on final-stage slices by a chain-level bimodule map that
// commutes with every processed factor; S and T must share the schedule
SparseMat induced_on_tower(const HHTower& S, const HHTower& T, const GradedLinearMap& f,
                           int a, int Q);

// independent slow path: materialize the whole Koszul tower at chain level
// with alternating signs and read dimensions off ranks
std::map<std::array<int, 2>, int> hh_dims_direct(const WebPtr& B, int window);

// fixed a-degree: a t-complex of q-graded spaces with explicit differentials
struct TraceSlice {
  std::map<int, std::map<int, int>> dims;        // t -> degree -> dim
  std::map<std::array<int, 2>, SparseMat> diff;  // {t, degree} -> matrix into t+1
};

struct TracedComplex {
  int window = 0;
  int qmax = 0;  // largest shifted degree free of window truncation
  int amax = 0;
  std::map<int, TraceSlice> slices;  // a -> slice

  int dim(int a, int t, int d) const;
  const SparseMat* diff(int a, int t, int d) const;
};

// close the rightmost nstrands strands of every summand and induce the
// t-differentials on the traced slices
TracedComplex trace_strands(const BimoduleComplex& C, int nstrands);
TracedComplex full_trace(const BimoduleComplex& C);

// d^2 = 0 on every stored slice
void check_traced_dsq(const TracedComplex& T);

// homology dimensions of every slice: {a, t, degree} -> dim
std::map<std::array<int, 3>, int> traced_homology(const TracedComplex& T);

// closing the split-off pair (k, l) against closing the merged strand, shifted
// by q^{2kl}; B must run from bottom (..., k, l) to top (..., k+l)
bool vertex_slide_check(const WebPtr& B, int window);

}  // namespace hb
