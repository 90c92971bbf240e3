#pragma once
#include <array>
#include <map>
#include <string>

#include "hb/hochschild.hpp"
#include "hb/oracle.hpp"

namespace hb {

// dimension count of the invariant per tridegree; a- and t-exponents are
// stored doubled so the half-integral normalization shifts stay integral.
// Entries with q <= qhi are exact; below qlo nothing can appear.
struct TriGradedSeries {
  int qlo = 0, qhi = 0;
  std::map<std::array<int, 3>, long long> entries;  // {a2, t2, q} -> dim
  std::string convention = kConventionVersion;

  long long at(int a2, int t2, int q) const;
  bool operator==(const TriGradedSeries& o) const = default;
};

// grading offsets absorbed by the Markov moves
struct NormalizationShift {
  int a2Shift = 0, t2Shift = 0, qShift = 0;
};

NormalizationShift normalization_shift(const BraidWord& b, const Coloring& c);

// homology of every traced slice, before normalization: a2 = 2a, t2 = 2t
TriGradedSeries homology_series(const TracedComplex& T);
TriGradedSeries apply_shift(const TriGradedSeries& S, const NormalizationShift& n);

// full pipeline: complex of the embedded word, core closure, full trace,
// homology, normalization shifts
TriGradedSeries hhh(const BraidWord& b, const Coloring& c, const ComplexOptions& opt);

// equality of all entries up to the smaller trusted q-bound
bool series_equal_common(const TriGradedSeries& A, const TriGradedSeries& B);

// signed dimension count per (a2, q); t2base fixes which t2 residue counts
// as even (pass the t2 shift of the series, 0 for unnormalized ones)
AQSeries euler_characteristic(const TriGradedSeries& S, int t2base);
// same signed count from chain dimensions, skipping homology
AQSeries traced_euler(const TracedComplex& T);

// the computed unknot: empty word in B_{0,1}, color 1
TriGradedSeries unknot_series(const ComplexOptions& opt);
// exact division by the computed unknot series; throws with the first
// failing tridegree when the quotient does not close up
TriGradedSeries reduced_series(const TriGradedSeries& S, const TriGradedSeries& unknot);

std::string series_json(const TriGradedSeries& S);
std::string series_pretty(const TriGradedSeries& S);

}  // namespace hb
