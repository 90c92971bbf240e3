#include "hb/hochschild.hpp"

#include <algorithm>
#include <stdexcept>

namespace hb {

namespace {

void place_block(SparseMat& M, int roff, int coff, const SparseMat& B) {
  for (int i = 0; i < B.rows; ++i)
    for (auto& [j, v] : B.row[i]) M.add(roff + i, coff + j, v);
}

int stage_dim(const HHTower& T, int s, int a, int Q) {
  if (a < 0) return 0;
  if (s == 0) {
    if (a != 0 || Q < 0 || Q > T.window) return 0;
    return T.B->dim(Q);
  }
  auto& m = T.stages[s - 1];
  auto it = m.find({a, Q});
  return it == m.end() ? 0 : it->second.dim;
}

using StageMemo = std::map<std::array<int, 3>, SparseMat>;

// matrix of op on stage-s slices, src (a, Q) to tgt (a, Q + op.rawDeg); op must
// commute with every processed factor, so its action passes through the cone
// pair blockwise; memo is per fixed (S, T, op)
const SparseMat& stage_matrix(const HHTower& S, const HHTower& T, const GradedLinearMap& op,
                              int s, int a, int Q, StageMemo& memo) {
  std::array<int, 3> key{s, a, Q};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int sd = stage_dim(S, s, a, Q);
  int td = stage_dim(T, s, a, Q + op.rawDeg);
  SparseMat res(td, sd);
  if (sd && td) {
    if (s == 0) {
      res = op.matrix(Q);
    } else {
      int D = S.degs[s - 1];
      const HomologyAtV& hs = S.stages[s - 1].at({a, Q});
      const HomologyAtV& ht = T.stages[s - 1].at({a, Q + op.rawDeg});
      const SparseMat& m0 = stage_matrix(S, T, op, s - 1, a, Q, memo);
      const SparseMat& m1 = stage_matrix(S, T, op, s - 1, a - 1, Q + D, memo);
      SparseMat mid(m0.rows + m1.rows, m0.cols + m1.cols);
      place_block(mid, 0, 0, m0);
      place_block(mid, m0.rows, m0.cols, m1);
      res = ht.proj * (mid * hs.rep);
    }
  }
  return memo.emplace(key, std::move(res)).first->second;
}

}  // namespace

int HHTower::qmin() const {
  int s = 0;
  for (int d : degs) s += d;
  return -s;
}

int HHTower::qmax() const {
  int s = 0;
  for (int d : degs) s += d;
  return window - s;
}

int HHTower::dim(int a, int Q) const { return stage_dim(*this, nstages(), a, Q); }

std::map<std::array<int, 2>, int> HHTower::dims() const {
  std::map<std::array<int, 2>, int> out;
  for (int a = 0; a <= amax(); ++a)
    for (int Q = qmin(); Q <= qmax(); Q += 2) {
      int d = dim(a, Q);
      if (d) out[{a, Q}] = d;
    }
  return out;
}

std::vector<GradedLinearMap> strand_trace_factors(const WebPtr& B, int pos) {
  if (pos < 0 || pos >= (int)B->bottomEdges.size() || pos >= (int)B->topEdges.size())
    throw std::runtime_error("hochschild: strand position out of range");
  int eb = B->bottomEdges[pos], et = B->topEdges[pos];
  if (B->edgeColor[eb] != B->edgeColor[et])
    throw std::runtime_error("hochschild: closing a strand with unequal colors");
  std::vector<GradedLinearMap> out;
  for (int i = 1; i <= B->edgeColor[eb]; ++i) {
    EPoly p = B->edge_sym(et, i);
    for (auto& [m, c] : B->edge_sym(eb, i)) {
      auto& slot = p[m];
      slot -= c;
      if (slot == 0) p.erase(m);
    }
    out.push_back(p.empty() ? zero_map(B, B, 2 * i) : mult_map(B, p));
  }
  return out;
}

void tower_push(HHTower& T, const GradedLinearMap& f, int qdeg) {
  if (f.rawDeg != qdeg) throw std::runtime_error("hochschild: factor degree mismatch");
  int s = T.nstages();
  int sumD = qdeg;
  for (int d : T.degs) sumD += d;
  std::map<std::array<int, 2>, HomologyAtV> next;
  StageMemo memo;
  auto dm = [&](int a, int Q) { return stage_dim(T, s, a, Q); };
  auto fm = [&](int a, int Q) { return stage_matrix(T, T, f, s, a, Q, memo); };
  for (int a = 0; a <= s + 1; ++a)
    for (int Q = -sumD; Q <= T.window - sumD; Q += 2) {
      int v0 = dm(a, Q), v1 = dm(a - 1, Q + qdeg);
      if (v0 + v1 == 0) continue;
      int u0 = dm(a - 1, Q), u1 = dm(a - 2, Q + qdeg);
      int w0 = dm(a + 1, Q), w1 = dm(a, Q + qdeg);
      SparseMat F(v0 + v1, u0 + u1), G(w0 + w1, v0 + v1);
      if (u0 && v1) place_block(F, v0, 0, fm(a - 1, Q));
      if (v0 && w1) place_block(G, w0, 0, fm(a, Q));
      HomologyAtV h = homology_with_transfer(F, G);
      if (h.dim > 0) next.emplace(std::array<int, 2>{a, Q}, std::move(h));
    }
  T.stages.push_back(std::move(next));
  T.factors.push_back(f);
  T.degs.push_back(qdeg);
}

HHTower traced_tower(const WebPtr& B, const std::vector<int>& strands, int window) {
  HHTower T;
  T.B = B;
  T.window = window;
  for (int pos : strands)
    for (auto& f : strand_trace_factors(B, pos)) tower_push(T, f, f.rawDeg);
  return T;
}

HHTower hh(const WebPtr& B, int window) {
  if (!(B->web.bottom.parts == B->web.top.parts))
    throw std::runtime_error("hochschild: boundary compositions differ");
  std::vector<int> sched;
  for (int p = (int)B->bottomEdges.size() - 1; p >= 0; --p) sched.push_back(p);
  return traced_tower(B, sched, window);
}

SparseMat induced_on_tower(const HHTower& S, const HHTower& T, const GradedLinearMap& f, int a,
                           int Q) {
  if (S.degs != T.degs) throw std::runtime_error("hochschild: tower schedules differ");
  StageMemo memo;
  return stage_matrix(S, T, f, S.nstages(), a, Q, memo);
}

std::map<std::array<int, 2>, int> hh_dims_direct(const WebPtr& B, int window) {
  if (!(B->web.bottom.parts == B->web.top.parts))
    throw std::runtime_error("hochschild: boundary compositions differ");
  std::vector<GradedLinearMap> fs;
  for (int p = (int)B->bottomEdges.size() - 1; p >= 0; --p)
    for (auto& f : strand_trace_factors(B, p)) fs.push_back(f);
  int m = (int)fs.size(), sumD = 0;
  for (auto& f : fs) sumD += f.rawDeg;
  auto maskDeg = [&](unsigned mask) {
    int d = 0;
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1) d += fs[j].rawDeg;
    return d;
  };
  std::map<std::array<int, 2>, int> out;
  for (int Q = -sumD; Q <= window - sumD; Q += 2) {
    // one tower column per subset; a-degree = subset size
    std::vector<std::vector<unsigned>> byA(m + 1);
    std::vector<std::map<unsigned, int>> off(m + 1);
    std::vector<int> tot(m + 1, 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      int a = __builtin_popcount(mask);
      int d = B->dim(Q + maskDeg(mask));
      if (!d) continue;
      off[a][mask] = tot[a];
      byA[a].push_back(mask);
      tot[a] += d;
    }
    std::vector<SparseMat> diff(m + 1);
    for (int a = 0; a < m + 1; ++a) {
      diff[a] = SparseMat(a + 1 <= m ? tot[a + 1] : 0, tot[a]);
      if (a + 1 > m) continue;
      for (unsigned mask : byA[a])
        for (int j = 0; j < m; ++j) {
          if (mask >> j & 1) continue;
          unsigned nm = mask | (1u << j);
          if (!off[a + 1].count(nm)) continue;
          int sign = __builtin_popcount(mask & ((1u << j) - 1)) % 2 ? -1 : 1;
          SparseMat M = fs[j].matrix(Q + maskDeg(mask));
          if (sign < 0) M = M.scaled(Rational(-1));
          place_block(diff[a], off[a + 1][nm], off[a][mask], M);
        }
    }
    for (int a = 0; a + 2 <= m; ++a)
      if (!(diff[a + 1] * diff[a]).is_zero())
        throw std::runtime_error("hochschild: tower differential fails to square to zero");
    int prevRank = 0;
    for (int a = 0; a <= m; ++a) {
      int r = a < m ? rank(diff[a]) : 0;
      int h = tot[a] - r - prevRank;
      if (h) out[{a, Q}] = h;
      prevRank = r;
    }
  }
  return out;
}

int TracedComplex::dim(int a, int t, int d) const {
  auto sa = slices.find(a);
  if (sa == slices.end()) return 0;
  auto st = sa->second.dims.find(t);
  if (st == sa->second.dims.end()) return 0;
  auto sd = st->second.find(d);
  return sd == st->second.end() ? 0 : sd->second;
}

const SparseMat* TracedComplex::diff(int a, int t, int d) const {
  auto sa = slices.find(a);
  if (sa == slices.end()) return nullptr;
  auto it = sa->second.diff.find({t, d});
  return it == sa->second.diff.end() ? nullptr : &it->second;
}

TracedComplex trace_strands(const BimoduleComplex& C, int nstrands) {
  if (!(C.bottom.parts == C.top.parts))
    throw std::runtime_error("hochschild: closing a complex needs equal boundaries");
  int r = C.bottom.blocks();
  if (nstrands < 0 || nstrands > r) throw std::runtime_error("hochschild: bad strand count");
  std::vector<int> sched;
  int sumD = 0, amax = 0;
  for (int j = 0; j < nstrands; ++j) {
    int pos = r - 1 - j, k = C.bottom.parts[pos];
    sched.push_back(pos);
    sumD += k * (k + 1);
    amax += k;
  }
  std::map<const WebBimodule*, HHTower> towers;
  for (auto& [t, v] : C.terms)
    for (auto& s : v)
      if (!towers.count(s.B.get()))
        towers.emplace(s.B.get(), traced_tower(s.B, sched, C.window));
  TracedComplex R;
  R.window = C.window;
  R.amax = amax;
  R.qmax = 0;
  bool first = true;
  int qlo = 0;
  for (auto& [t, v] : C.terms)
    for (auto& s : v) {
      int tau = total_shift(s);
      int hi = C.window + tau - sumD, lo = tau - sumD;
      if (first || hi < R.qmax) R.qmax = hi;
      if (first || lo < qlo) qlo = lo;
      first = false;
    }
  if (first) return R;
  std::map<const GradedLinearMap*, StageMemo> memos;
  for (int a = 0; a <= amax; ++a) {
    TraceSlice slice;
    for (auto& [t, v] : C.terms)
      for (auto& s : v) {
        const HHTower& tw = towers.at(s.B.get());
        int tau = total_shift(s);
        for (int Q = tw.qmin(); Q <= tw.qmax(); Q += 2) {
          int d = tw.dim(a, Q);
          if (d && Q + tau <= R.qmax) slice.dims[t][Q + tau] += d;
        }
      }
    for (auto& [t, v] : C.terms) {
      auto up = C.terms.find(t + 1);
      if (up == C.terms.end()) continue;
      for (int D = qlo; D <= R.qmax; ++D) {
        int cols = 0, rows = 0;
        std::vector<int> coff, roff;
        for (auto& s : v) {
          coff.push_back(cols);
          cols += towers.at(s.B.get()).dim(a, D - total_shift(s));
        }
        for (auto& u : up->second) {
          roff.push_back(rows);
          rows += towers.at(u.B.get()).dim(a, D - total_shift(u));
        }
        if (!cols || !rows) continue;
        SparseMat M(rows, cols);
        for (int si = 0; si < (int)v.size(); ++si)
          for (int ui = 0; ui < (int)up->second.size(); ++ui) {
            const GradedLinearMap* f = C.block(t, si, ui);
            if (!f) continue;
            const HHTower& ts = towers.at(v[si].B.get());
            const HHTower& tu = towers.at(up->second[ui].B.get());
            place_block(M, roff[ui], coff[si],
                        stage_matrix(ts, tu, *f, ts.nstages(), a, D - total_shift(v[si]),
                                     memos[f]));
          }
        slice.diff[{t, D}] = std::move(M);
      }
    }
    if (!slice.dims.empty()) R.slices[a] = std::move(slice);
  }
  return R;
}

TracedComplex full_trace(const BimoduleComplex& C) {
  return trace_strands(C, C.bottom.blocks());
}

void check_traced_dsq(const TracedComplex& T) {
  for (auto& [a, slice] : T.slices)
    for (auto& [key, M] : slice.diff) {
      auto [t, D] = key;
      auto it = slice.diff.find({t + 1, D});
      if (it == slice.diff.end()) continue;
      if (!(it->second * M).is_zero())
        throw std::runtime_error("hochschild: traced differential fails to square to zero");
    }
}

std::map<std::array<int, 3>, int> traced_homology(const TracedComplex& T) {
  std::map<std::array<int, 3>, int> out;
  for (auto& [a, slice] : T.slices)
    for (auto& [t, byD] : slice.dims)
      for (auto& [D, dim] : byD) {
        int rout = 0, rin = 0;
        auto it = slice.diff.find({t, D});
        if (it != slice.diff.end()) rout = rank(it->second);
        it = slice.diff.find({t - 1, D});
        if (it != slice.diff.end()) rin = rank(it->second);
        int h = dim - rout - rin;
        if (h) out[{a, t, D}] = h;
      }
  return out;
}

bool vertex_slide_check(const WebPtr& B, int window) {
  const Composition& bot = B->web.bottom;
  const Composition& top = B->web.top;
  int rb = bot.blocks(), rt = top.blocks();
  if (rb < 2 || rt != rb - 1) throw std::runtime_error("hochschild: slide shape mismatch");
  for (int i = 0; i + 1 < rt; ++i)
    if (bot.parts[i] != top.parts[i]) throw std::runtime_error("hochschild: slide shape mismatch");
  int k = bot.parts[rb - 2], l = bot.parts[rb - 1];
  if (top.parts[rt - 1] != k + l) throw std::runtime_error("hochschild: slide shape mismatch");
  Web split = make_web(top, {{LayerKind::Split, rt - 1, k}});
  WebPtr B1 = bimodule_of_web(stack_webs(B->web, split), window);
  WebPtr B2 = bimodule_of_web(stack_webs(split, B->web), window);
  HHTower T1 = traced_tower(B1, {rb - 1, rb - 2}, window);
  HHTower T2 = traced_tower(B2, {rt - 1}, window);
  int shift = 2 * k * l;
  for (int a = 0; a <= k + l; ++a)
    for (int Q = T1.qmin(); Q <= T1.qmax(); Q += 2)
      if (T1.dim(a, Q) != T2.dim(a, Q - shift)) return false;
  return true;
}

}  // namespace hb
