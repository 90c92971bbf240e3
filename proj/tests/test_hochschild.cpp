#include "doctest.h"
#include "hb/hochschild.hpp"
#include "hb/rings.hpp"

#include <vector>

using namespace hb;

namespace {

Web bubble_web(const Composition& c) {
  return make_web(c, {{LayerKind::Merge, 0, 0}, {LayerKind::Split, 0, c.parts[0]}});
}

// hh of an identity bimodule: invariant ring times a free exterior algebra
// with one a-degree-1, q-degree -2i generator per symmetric generator
std::map<std::array<int, 2>, int> identity_hh_expected(const Composition& I, int window) {
  std::vector<int> degs;
  for (int k : I.parts)
    for (int i = 1; i <= k; ++i) degs.push_back(2 * i);
  int m = (int)degs.size(), sumD = 0;
  for (int d : degs) sumD += d;
  auto coeffs = qdim_invariant_ring(I).expand(0, window);
  std::map<std::array<int, 2>, int> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int a = __builtin_popcount(mask), D = 0;
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1) D += degs[j];
    for (int Q = -sumD; Q <= window - sumD; Q += 2) {
      auto it = coeffs.find(Q + D);
      if (it != coeffs.end()) out[{a, Q}] += (int)it->second;
    }
  }
  return out;
}

std::map<std::array<int, 2>, int> from_series(const std::vector<HilbSeries>& byA, int lo,
                                              int hi) {
  std::map<std::array<int, 2>, int> out;
  for (int a = 0; a < (int)byA.size(); ++a)
    for (auto& [Q, v] : byA[a].expand(lo, hi))
      if (v) out[{a, Q}] = (int)v;
  return out;
}

ClassicalBraidWord word(int strands, std::vector<std::pair<int, int>> letters) {
  ClassicalBraidWord w;
  w.strands = strands;
  for (auto& [i, e] : letters) w.letters.push_back({i, e});
  return w;
}

}  // namespace

TEST_CASE("closing every strand of an identity bimodule is a free exterior tower") {
  for (auto parts : std::vector<std::vector<int>>{{1},
                                                  {2},
                                                  {3},
                                                  {4},
                                                  {1, 1},
                                                  {2, 1},
                                                  {1, 2},
                                                  {2, 2},
                                                  {3, 1},
                                                  {1, 1, 1},
                                                  {2, 1, 1},
                                                  {1, 1, 1, 1}}) {
    Composition c{parts};
    WebPtr B = bimodule_of_web(identity_web(c), 20);
    HHTower T = hh(B, 20);
    int total = 0;
    for (int k : parts) total += k;
    CHECK(T.amax() == total);
    CHECK(T.dims() == identity_hh_expected(c, 20));
  }
}

TEST_CASE("closing both strands of the two-strand bubble") {
  WebPtr B = bimodule_of_web(bubble_web(Composition{{1, 1}}), 20);
  HHTower T = hh(B, 20);
  CHECK(T.qmin() == -4);
  CHECK(T.qmax() == 16);
  // kernel and cokernel towers of multiplication by the variable difference,
  // in raw degrees
  HilbSeries r2 = HilbSeries::inv_factor(2) * HilbSeries::inv_factor(2);
  LaurentPoly oneq2 = LaurentPoly::one() + LaurentPoly::monomial(-2);
  std::vector<HilbSeries> expect = {r2.shifted(2), HilbSeries::of_poly(oneq2) * r2,
                                    r2.shifted(-4)};
  CHECK(T.dims() == from_series(expect, T.qmin(), T.qmax()));
}

TEST_CASE("stagewise closure agrees with the one-shot signed tower") {
  std::vector<Web> webs = {
      identity_web(Composition{{2}}),
      identity_web(Composition{{1, 1}}),
      bubble_web(Composition{{1, 1}}),
      make_web(Composition{{2}}, {{LayerKind::Split, 0, 1}, {LayerKind::Merge, 0, 0}}),
      make_web(Composition{{1, 1}}, {{LayerKind::Merge, 0, 0},
                                     {LayerKind::Split, 0, 1},
                                     {LayerKind::Merge, 0, 0},
                                     {LayerKind::Split, 0, 1}}),
  };
  for (auto& w : webs) {
    WebPtr B = bimodule_of_web(w, 16);
    HHTower T = hh(B, 16);
    CHECK(T.dims() == hh_dims_direct(B, 16));
  }
}

TEST_CASE("closure order does not change traced dimensions") {
  WebPtr B = bimodule_of_web(bubble_web(Composition{{1, 1}}), 16);
  CHECK(traced_tower(B, {1, 0}, 16).dims() == traced_tower(B, {0, 1}, 16).dims());
  Web w = make_web(Composition{{2, 1}}, {{LayerKind::Split, 0, 1}, {LayerKind::Merge, 0, 0}});
  WebPtr B2 = bimodule_of_web(w, 16);
  CHECK(traced_tower(B2, {1, 0}, 16).dims() == traced_tower(B2, {0, 1}, 16).dims());
}

TEST_CASE("closure rejects mismatched boundaries") {
  WebPtr m = bimodule_of_web(make_web(Composition{{1, 1}}, {{LayerKind::Merge, 0, 0}}), 12);
  CHECK_THROWS(hh(m, 12));
  CHECK_THROWS(strand_trace_factors(m, 0));
  CHECK_THROWS(vertex_slide_check(bimodule_of_web(identity_web(Composition{{2}}), 12), 12));
}

TEST_CASE("a split vertex slides across the closure arc") {
  WebPtr m11 = bimodule_of_web(make_web(Composition{{1, 1}}, {{LayerKind::Merge, 0, 0}}), 16);
  CHECK(vertex_slide_check(m11, 16));
  WebPtr m21 = bimodule_of_web(make_web(Composition{{2, 1}}, {{LayerKind::Merge, 0, 0}}), 16);
  CHECK(vertex_slide_check(m21, 16));
}

TEST_CASE("partially closing a bubble matches the colored circle ladder") {
  struct Case {
    int k, l;
  };
  for (auto [k, l] : {Case{1, 1}, Case{2, 1}, Case{1, 2}}) {
    Composition c{{k, l}};
    WebPtr B = bimodule_of_web(bubble_web(c), 18);
    HHTower T = traced_tower(B, {1}, 18);
    CHECK(T.amax() == l);
    // one circle factor per exterior level of the closed color-l strand
    std::vector<LaurentPoly> numer{LaurentPoly::one()};
    for (int i = 1; i <= l; ++i) {
      std::vector<LaurentPoly> next(numer.size() + 1);
      for (int a = 0; a < (int)numer.size(); ++a) {
        next[a] = next[a] + numer[a] * LaurentPoly::monomial(k);
        next[a + 1] = next[a + 1] + numer[a] * LaurentPoly::monomial(-k - 2 * i);
      }
      numer = next;
    }
    HilbSeries den = qdim_invariant_ring(Composition{{k}});
    for (int i = 1; i <= l; ++i) den = den * HilbSeries::inv_factor(2 * i);
    std::vector<HilbSeries> expect;
    for (auto& p : numer) expect.push_back(HilbSeries::of_poly(p.shifted(k * l)) * den);
    CHECK(T.dims() == from_series(expect, T.qmin(), T.qmax()));
  }
}

TEST_CASE("tracing the identity complex gives the free circle") {
  ComplexOptions opt;
  BimoduleComplex C = sigma_word_complex(word(1, {}), Composition{{1}}, opt);
  TracedComplex T = full_trace(C);
  CHECK(T.qmax == 18);
  check_traced_dsq(T);
  std::map<std::array<int, 3>, int> want;
  for (int D = 0; D <= T.qmax; D += 2) want[{0, 0, D}] = 1;
  for (int D = -2; D <= T.qmax; D += 2) want[{1, 0, D}] = 1;
  CHECK(traced_homology(T) == want);
}

TEST_CASE("partially tracing an identity complex closes one strand only") {
  ComplexOptions opt;
  BimoduleComplex C = sigma_word_complex(word(2, {}), Composition{{1, 1}}, opt);
  TracedComplex T = trace_strands(C, 1);
  CHECK(T.amax == 1);
  CHECK(T.qmax == 18);
  auto r11 = qdim_invariant_ring(Composition{{1, 1}});
  auto c0 = r11.expand(0, 18);
  for (int D = 0; D <= T.qmax; D += 2) CHECK(T.dim(0, 0, D) == (int)c0[D]);
  auto c1 = r11.shifted(-2).expand(-2, 18);
  for (int D = -2; D <= T.qmax; D += 2) CHECK(T.dim(1, 0, D) == (int)c1[D]);
}

TEST_CASE("tracing a positive kink leaves one shifted circle") {
  ComplexOptions opt;
  BimoduleComplex C = sigma_word_complex(word(2, {{1, 1}}), Composition{{1, 1}}, opt);
  TracedComplex T = full_trace(C);
  CHECK(T.qmax == 15);
  check_traced_dsq(T);
  std::map<std::array<int, 3>, int> want;
  for (int D = -1; D <= T.qmax; D += 2) want[{0, 1, D}] = 1;
  for (int D = -3; D <= T.qmax; D += 2) want[{1, 1, D}] = 1;
  CHECK(traced_homology(T) == want);
}

TEST_CASE("tracing a negative kink leaves one shifted circle") {
  ComplexOptions opt;
  BimoduleComplex C = sigma_word_complex(word(2, {{1, -1}}), Composition{{1, 1}}, opt);
  TracedComplex T = full_trace(C);
  CHECK(T.qmax == 15);
  check_traced_dsq(T);
  std::map<std::array<int, 3>, int> want;
  for (int D = -3; D <= T.qmax; D += 2) want[{1, 0, D}] = 1;
  for (int D = -5; D <= T.qmax; D += 2) want[{2, 0, D}] = 1;
  CHECK(traced_homology(T) == want);
}
