#include "doctest.h"
#include "hb/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

using namespace hb;

namespace {

ClassicalBraidWord word(int strands, std::vector<std::pair<int, int>> letters) {
  ClassicalBraidWord w;
  w.strands = strands;
  for (auto& [i, e] : letters) w.letters.push_back({i, e});
  return w;
}

std::string web_key(const Web& w) {
  std::ostringstream os;
  for (int p : w.bottom.parts) os << p << ",";
  os << "|";
  for (auto& L : w.layers)
    os << (L.kind == LayerKind::Merge ? "m" : "s") << L.pos << "." << L.leftColor << ";";
  return os.str();
}

// per-degree summand census, insensitive to ordering inside a term
std::map<int, std::vector<std::pair<std::string, int>>> census(const BimoduleComplex& C) {
  std::map<int, std::vector<std::pair<std::string, int>>> out;
  for (auto& [t, v] : C.terms) {
    for (auto& s : v) out[t].emplace_back(web_key(s.B->web), total_shift(s));
    std::sort(out[t].begin(), out[t].end());
  }
  return out;
}

// overlap of the shifted-degree ranges every summand covers inside the window
std::pair<int, int> common_band(const BimoduleComplex& A, const BimoduleComplex& B) {
  int lo = 0, hi = A.window;
  for (const BimoduleComplex* C : {&A, &B})
    for (auto& [t, v] : C->terms)
      for (auto& s : v) {
        lo = std::max(lo, total_shift(s));
        hi = std::min(hi, C->window + total_shift(s));
      }
  return {lo, hi};
}

long long chi_at(const std::map<int, long long>& chi, int d) {
  auto it = chi.find(d);
  return it == chi.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("uncolored crossing complexes are two-term cones") {
  ComplexOptions opt;
  BimoduleComplex P = crossing_complex(1, 1, 1, opt);
  CHECK(P.tmin() == 0);
  CHECK(P.tmax() == 1);
  REQUIRE(P.terms[0].size() == 1);
  REQUIRE(P.terms[1].size() == 1);
  CHECK(P.terms[0][0].B->web.layers.size() == 2);
  CHECK(P.terms[0][0].qShift == 0);
  CHECK(P.terms[1][0].B->web.layers.empty());
  CHECK(P.terms[1][0].qShift == -1);
  const GradedLinearMap* d0 = P.block(0, 0, 0);
  REQUIRE(d0 != nullptr);
  CHECK(d0->rawDeg == 0);
  CHECK(d0->matrix(0).nnz() > 0);

  BimoduleComplex N = crossing_complex(1, 1, -1, opt);
  CHECK(N.tmin() == -1);
  CHECK(N.tmax() == 0);
  CHECK(N.terms[-1][0].B->web.layers.empty());
  CHECK(N.terms[-1][0].qShift == 1);
  CHECK(N.terms[0][0].B->web.layers.size() == 2);
  const GradedLinearMap* dm = N.block(-1, 0, 0);
  REQUIRE(dm != nullptr);
  CHECK(dm->rawDeg == 2);
  CHECK(dm->matrix(0).nnz() > 0);
}

TEST_CASE("colored crossing complexes run over the ladder resolutions") {
  ComplexOptions opt;
  opt.window = 12;
  BimoduleComplex P = crossing_complex(2, 1, 1, opt);
  CHECK(P.tmin() == 0);
  CHECK(P.tmax() == 1);
  CHECK(P.bottom.parts == std::vector<int>{2, 1});
  CHECK(P.top.parts == std::vector<int>{1, 2});
  REQUIRE(P.block(0, 0, 0) != nullptr);
  CHECK(P.block(0, 0, 0)->matrix(0).nnz() > 0);

  // min color 2: three terms and a two-step differential, squares to zero
  BimoduleComplex Q = crossing_complex(2, 2, 1, opt);
  CHECK(Q.tmin() == 0);
  CHECK(Q.tmax() == 2);
  CHECK(Q.nsummands() == 3);
  check_dsq(Q, 6);
  BimoduleComplex R = crossing_complex(2, 2, -1, opt);
  CHECK(R.tmin() == -2);
  CHECK(R.tmax() == 0);
  check_dsq(R, 6);
}

TEST_CASE("stacked crossings keep a square-zero differential before reduction") {
  ComplexOptions opt;
  opt.reduce = false;
  Composition c{{1, 1}};
  BimoduleComplex PP = sigma_word_complex(word(2, {{1, 1}, {1, 1}}), c, opt);
  CHECK(PP.nsummands() == 4);
  check_dsq(PP, PP.window);
  BimoduleComplex NN = sigma_word_complex(word(2, {{1, -1}, {1, -1}}), c, opt);
  check_dsq(NN, NN.window);
  BimoduleComplex PN = sigma_word_complex(word(2, {{1, 1}, {1, -1}}), c, opt);
  check_dsq(PN, PN.window);
}

TEST_CASE("the square of a crossing reduces to a three-term minimal complex") {
  ComplexOptions opt;
  BimoduleComplex C = sigma_word_complex(word(2, {{1, 1}, {1, 1}}), Composition{{1, 1}}, opt);
  CHECK(C.tmin() == 0);
  CHECK(C.tmax() == 2);
  REQUIRE(C.terms[0].size() == 1);
  REQUIRE(C.terms[1].size() == 1);
  REQUIRE(C.terms[2].size() == 1);
  CHECK(C.terms[0][0].B->web.layers.size() == 2);
  CHECK(C.terms[0][0].qShift == 1);
  CHECK(C.terms[1][0].B->web.layers.size() == 2);
  CHECK(C.terms[1][0].qShift == -1);
  CHECK(C.terms[2][0].B->web.layers.empty());
  CHECK(C.terms[2][0].qShift == -2);
  const GradedLinearMap* d0 = C.block(0, 0, 0);
  const GradedLinearMap* d1 = C.block(1, 0, 0);
  REQUIRE(d0 != nullptr);
  REQUIRE(d1 != nullptr);
  CHECK(d0->rawDeg == 2);
  CHECK(d0->matrix(0).nnz() > 0);
  CHECK(d1->rawDeg == 0);
  CHECK(d1->matrix(0).nnz() > 0);
  check_dsq(C, C.window);
}

TEST_CASE("a crossing against its inverse reduces to the identity complex") {
  ComplexOptions opt;
  for (auto letters : std::vector<std::vector<std::pair<int, int>>>{
           {{1, 1}, {1, -1}}, {{1, -1}, {1, 1}}}) {
    BimoduleComplex C = sigma_word_complex(word(2, letters), Composition{{1, 1}}, opt);
    CHECK(C.nsummands() == 1);
    CHECK(C.tmin() == 0);
    CHECK(C.tmax() == 0);
    CHECK(C.terms[0][0].B->web.layers.empty());
    CHECK(total_shift(C.terms[0][0]) == 0);
    CHECK(C.blocks.empty());
  }
}

TEST_CASE("reduction preserves the euler characteristic on the shared window") {
  ComplexOptions raw;
  raw.reduce = false;
  ComplexOptions red;
  Composition c{{1, 1}};
  for (auto letters : std::vector<std::vector<std::pair<int, int>>>{
           {{1, 1}, {1, 1}}, {{1, 1}, {1, -1}}, {{1, -1}, {1, -1}}}) {
    BimoduleComplex A = sigma_word_complex(word(2, letters), c, raw);
    BimoduleComplex B = sigma_word_complex(word(2, letters), c, red);
    auto [lo, hi] = common_band(A, B);
    REQUIRE(lo <= hi);
    auto ca = chi_by_qdegree(A), cb = chi_by_qdegree(B);
    for (int d = lo; d <= hi; ++d) CHECK(chi_at(ca, d) == chi_at(cb, d));
  }
}

TEST_CASE("a reduced three-crossing braid still squares to zero") {
  ComplexOptions opt;
  opt.window = 14;
  BimoduleComplex C =
      sigma_word_complex(word(3, {{1, 1}, {2, 1}, {1, 1}}), Composition{{1, 1, 1}}, opt);
  check_dsq(C, C.window);
  ComplexOptions raw = opt;
  raw.reduce = false;
  BimoduleComplex A =
      sigma_word_complex(word(3, {{1, 1}, {2, 1}, {1, 1}}), Composition{{1, 1, 1}}, raw);
  CHECK(C.nsummands() < A.nsummands());
}

TEST_CASE("horizontal tensor is associative up to summand order") {
  ComplexOptions opt;
  opt.window = 12;
  Composition c{{1, 1, 1}};
  BimoduleComplex C1 = crossing_complex_at(c, 0, 1, opt);
  BimoduleComplex C2 = crossing_complex_at(c, 1, 1, opt);
  BimoduleComplex C3 = crossing_complex_at(c, 0, -1, opt);
  BimoduleComplex L = tensor_step(tensor_step(C1, C2, opt), C3, opt);
  BimoduleComplex R = tensor_step(C1, tensor_step(C2, C3, opt), opt);
  CHECK(census(L) == census(R));
  CHECK(L.blocks.size() == R.blocks.size());
  CHECK(chi_by_qdegree(L) == chi_by_qdegree(R));
  check_dsq(L, 4);
  check_dsq(R, 4);
}

TEST_CASE("core closure stacks the connecting web above the complex") {
  ComplexOptions opt;
  Composition c{{1, 1}};
  BimoduleComplex C = sigma_word_complex(word(2, {}), c, opt);
  ComplexOptions keep = opt;
  keep.reduce = false;
  BimoduleComplex Z = core_closure(C, 2, 1, keep);
  REQUIRE(Z.nsummands() == 1);
  CHECK(Z.terms[0][0].B->web.layers.size() == 2);
  CHECK(Z.terms[0][0].B->web.layers[0].kind == LayerKind::Merge);
  CHECK(Z.terms[0][0].B->web.layers[1].kind == LayerKind::Split);

  BimoduleComplex same = core_closure(C, 1, 1, opt);
  CHECK(census(same) == census(C));

  BimoduleComplex D = sigma_word_complex(word(2, {}), Composition{{2, 1}}, opt);
  CHECK_THROWS(core_closure(D, 2, 1, opt));
}

TEST_CASE("piece size estimates guard the window budget") {
  ComplexOptions opt;
  opt.pieceCap = 5;
  try {
    crossing_complex(1, 1, 1, opt);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    std::string msg = e.what();
    CHECK(msg.find("budget") != std::string::npos);
    CHECK(msg.find("degree") != std::string::npos);
  }
}

TEST_CASE("complex summaries carry the convention tag") {
  ComplexOptions opt;
  BimoduleComplex C = crossing_complex(1, 1, 1, opt);
  std::string js = complex_summary_json(C);
  CHECK(js.find(kConventionVersion) != std::string::npos);
  CHECK(js.find("window") != std::string::npos);
  CHECK(js.find("terms") != std::string::npos);
}
