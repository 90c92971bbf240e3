#pragma once
#include <array>
#include <map>
#include <string>
#include <vector>
#include "hb/braid.hpp"
#include "hb/webs.hpp"

namespace hb {

// recorded in every emitted series and cache key: positive crossing resolves
// into rung terms t^s q^{-s}, negative into t^{-s} q^{s}
inline constexpr const char* kConventionVersion = "rouquier-v1";

struct Summand {
  WebPtr B;
  int qShift = 0;
};

// total q-offset of a summand: intrinsic web shift plus the formal one
inline int total_shift(const Summand& s) { return s.B->web.qshift + s.qShift; }

// {t, source index in terms[t], target index in terms[t+1]}
using BlockKey = std::array<int, 3>;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComplexOptions {
  int window = 20;
  bool reduce = true;
  long long pieceCap = 400000;  // bound on the estimated size of one piece
  int dsqProbe = 8;             // degree cap for construction-time d^2 probes
};

// t-graded complex of shifted web bimodules with block differentials; the
// differential raises t by one and is q-degree 0 against the recorded shifts
struct BimoduleComplex {
  Composition bottom, top;
  int window = 0;
  std::map<int, std::vector<Summand>> terms;
  std::map<BlockKey, GradedLinearMap> blocks;

  int tmin() const;
  int tmax() const;
  int nsummands() const;
  const GradedLinearMap* block(int t, int s, int u) const;
};

// two-strand crossing complex; sign = +1 or -1
BimoduleComplex crossing_complex(int k, int l, int sign, const ComplexOptions& opt);
// crossing acting on strands (p, p+1) of a wider composition
BimoduleComplex crossing_complex_at(const Composition& bottom, int p, int sign,
                                    const ComplexOptions& opt);
// horizontal tensor: A below, B above, Koszul signs from A's t-degrees
BimoduleComplex tensor_step(const BimoduleComplex& A, const BimoduleComplex& B,
                            const ComplexOptions& opt);
// complex of an embedded sigma word over the given bottom colors
BimoduleComplex sigma_word_complex(const ClassicalBraidWord& w, const Composition& colors,
                                   const ComplexOptions& opt);
// full handlebody pipeline entry: embeds the word and colors cores with c.coreColor
BimoduleComplex braid_complex(const BraidWord& b, const Coloring& c, const ComplexOptions& opt);
// stacks the merge-split web closing the g core strands above every term
BimoduleComplex core_closure(const BimoduleComplex& C, int g, int M, const ComplexOptions& opt);

// homotopy-equivalent simplification: strips degenerate merge/split pairs,
// splits adjacent eyes into shifted copies via dual bases, and cancels
// certified-invertible blocks
void reduce_complex(BimoduleComplex& C);

void check_block_degrees(const BimoduleComplex& C);  // throws on violation
void check_dsq(const BimoduleComplex& C, int maxDeg);
// signed dimension per total q-degree, d from 0 to window after shifts
std::map<int, long long> chi_by_qdegree(const BimoduleComplex& C);
std::string complex_summary_json(const BimoduleComplex& C);

// largest degree where B/(both-side boundary ideal) is nonzero, certified by
// a run of vanishing degrees; -1 if not certifiable within the window
int boundary_vanish_degree(const WebPtr& B);

}  // namespace hb
