#pragma once
#include <map>
#include <optional>
#include "hb/braid.hpp"
#include "hb/laurent.hpp"

namespace hb {

// Type A Hecke algebra on the permutation basis over Z[q^{+-1}], with the
// quadratic convention (T_s - q^{-1})(T_s + q) = 0. All decategorified
// conventions below are locked to the graded engine: the class of a positive
// crossing complex is T_s + q - q^{-1} = T_s^{-1}, of a negative one T_s.
struct HeckeElement {
  int n = 0;
  std::map<Perm, LaurentPoly> c;
};

HeckeElement hecke_one(int n);
HeckeElement hecke_add(const HeckeElement& x, const HeckeElement& y);
HeckeElement hecke_scale(const HeckeElement& x, const LaurentPoly& p);
HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y);
// image of a classical braid word (positive crossing -> T^{-1})
HeckeElement hecke_of_classical(const ClassicalBraidWord& w);

// (1 + a q^{-2})/(1 - q^2): the value of a closed uncolored circle
AQSeries circle_series(AQWindow w);
// Markov trace parameter: z = a q^{-3} / circle
AQSeries trace_parameter(AQWindow w);

// normalized Jones-Ocneanu trace: trace(1_1) = 1. Computed on a window padded
// internally so the result is sound on w.
AQSeries jones_ocneanu_trace(const HeckeElement& x, AQWindow w);

// decategorified class of the g-core merge-split element inside H_{g+n};
// identity for g <= 1
HeckeElement core_merge_split_class(int g, int n);

// circle^{g+n} * trace(c_g * image(embed(beta))): the decategorified value of
// the fully traced complex before normalization shifts; M=1 cores only
AQSeries handlebody_homfly_decat_raw(const BraidWord& b, AQWindow w);

// independent reduced HOMFLYPT of a classical braid closure via the skein
// relation a P+ - a^{-1} P- = (q - q^{-1}) P0 on diagrams, unknot -> 1
AQSeries homfly_skein(const ClassicalBraidWord& w, AQWindow win);

// exact division U/V restricted to the box w. V's lex-least stored key in
// (a2, q) order must carry coefficient +-1, and after normalizing by that
// monomial the rest of V must only raise a2, or fix a2 and raise q; the
// quotient is then computed by long division in lex order. Throws when V is
// not of that shape or the operand windows cannot certify exactness on w.
AQSeries aq_divide(const AQSeries& u, const AQSeries& v, AQWindow w);

// find a unit monomial sign*alpha^{da2} q^{dq} with A = unit*B on [lo,hi]
struct UnitMatch {
  int sign, da2, dq;
};
std::optional<UnitMatch> match_up_to_unit(const AQSeries& a, const AQSeries& b, int lo, int hi);

}
