#include "hb/invariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hb {

namespace {

std::string key_str(const std::array<int, 3>& k) {
  std::ostringstream os;
  os << "(a2=" << k[0] << ", t2=" << k[1] << ", q=" << k[2] << ")";
  return os.str();
}

}  // namespace

long long TriGradedSeries::at(int a2, int t2, int q) const {
  auto it = entries.find({a2, t2, q});
  return it == entries.end() ? 0 : it->second;
}

NormalizationShift normalization_shift(const BraidWord& b, const Coloring& c) {
  auto [w, W] = writhe_stats(b, c);
  int sl = 0, sll = 0;
  for (int l : c.linkColors) {
    sl += l;
    sll += l * l;
  }
  return {w - sl, -w - sl, -W + sll + sl};
}

TriGradedSeries homology_series(const TracedComplex& T) {
  TriGradedSeries S;
  S.qhi = T.qmax;
  for (auto& [k, d] : traced_homology(T)) S.entries[{2 * k[0], 2 * k[1], k[2]}] = d;
  S.qlo = S.entries.empty() ? S.qhi : S.entries.begin()->first[2];
  for (auto& [k, d] : S.entries) S.qlo = std::min(S.qlo, k[2]);
  return S;
}

TriGradedSeries apply_shift(const TriGradedSeries& S, const NormalizationShift& n) {
  TriGradedSeries R;
  R.qlo = S.qlo + n.qShift;
  R.qhi = S.qhi + n.qShift;
  for (auto& [k, d] : S.entries)
    R.entries[{k[0] + n.a2Shift, k[1] + n.t2Shift, k[2] + n.qShift}] = d;
  return R;
}

TriGradedSeries hhh(const BraidWord& b, const Coloring& c, const ComplexOptions& opt) {
  BimoduleComplex C = braid_complex(b, c, opt);
  C = core_closure(C, b.genus, c.coreColor, opt);
  TracedComplex T = full_trace(C);
  return apply_shift(homology_series(T), normalization_shift(b, c));
}

bool series_equal_common(const TriGradedSeries& A, const TriGradedSeries& B) {
  int cut = std::min(A.qhi, B.qhi);
  auto filter = [&](const TriGradedSeries& S) {
    std::map<std::array<int, 3>, long long> m;
    for (auto& [k, d] : S.entries)
      if (k[2] <= cut) m[k] = d;
    return m;
  };
  return filter(A) == filter(B);
}

AQSeries euler_characteristic(const TriGradedSeries& S, int t2base) {
  AQWindow w{0, 0, 0, 0};
  if (!S.entries.empty()) {
    w.qlo = S.qlo;
    w.qhi = S.qhi;
    w.a2lo = S.entries.begin()->first[0];
    w.a2hi = w.a2lo;
    for (auto& [k, d] : S.entries) {
      w.a2lo = std::min(w.a2lo, k[0]);
      w.a2hi = std::max(w.a2hi, k[0]);
    }
  }
  AQSeries r = AQSeries::zero(w);
  for (auto& [k, d] : S.entries) {
    int dt = k[1] - t2base;
    if (dt % 2) throw std::runtime_error("euler_characteristic: odd t2 offset");
    r.add(k[0], k[2], (dt / 2) % 2 ? -d : d);
  }
  return r;
}

AQSeries traced_euler(const TracedComplex& T) {
  std::map<AQKey, long long> acc;
  int qlo = T.qmax;
  for (auto& [a, slice] : T.slices)
    for (auto& [t, byD] : slice.dims)
      for (auto& [D, d] : byD) {
        acc[{2 * a, D}] += (t % 2) ? -d : d;
        qlo = std::min(qlo, D);
      }
  AQWindow w{qlo, T.qmax, 0, 2 * T.amax};
  AQSeries r = AQSeries::zero(w);
  for (auto& [k, v] : acc) r.add(k.a2, k.q, v);
  return r;
}

TriGradedSeries unknot_series(const ComplexOptions& opt) {
  BraidWord b;
  b.genus = 0;
  b.strands = 1;
  Coloring c;
  c.coreColor = 1;
  c.linkColors = {1};
  return hhh(b, c, opt);
}

TriGradedSeries reduced_series(const TriGradedSeries& S, const TriGradedSeries& U) {
  if (U.entries.empty()) throw std::runtime_error("reduced_series: empty divisor");
  auto lead = U.entries.begin();
  std::array<int, 3> k0 = lead->first;
  long long c0 = lead->second;
  if (c0 != 1 && c0 != -1) throw std::runtime_error("reduced_series: divisor lead not a unit");
  // map order makes every tail offset lex-positive, so consuming the least
  // remainder key only ever pollutes strictly greater keys
  std::vector<std::pair<std::array<int, 3>, long long>> tail;
  for (auto& [k, v] : U.entries)
    if (k != k0) tail.push_back({{k[0] - k0[0], k[1] - k0[1], k[2] - k0[2]}, v});
  TriGradedSeries R;
  R.qlo = S.qlo - k0[2];
  R.qhi = std::min(S.qhi, U.qhi) - k0[2];
  if (S.entries.empty()) return R;
  int a2minS = S.entries.begin()->first[0], a2maxS = a2minS;
  for (auto& [k, v] : S.entries) {
    a2minS = std::min(a2minS, k[0]);
    a2maxS = std::max(a2maxS, k[0]);
  }
  int a2maxU = k0[0];
  for (auto& [k, v] : U.entries) a2maxU = std::max(a2maxU, k[0]);
  int levelCap = a2maxS - a2maxU;
  std::map<std::array<int, 3>, long long> rem = S.entries, quot;
  int qminQ = 0;
  while (!rem.empty()) {
    auto it = rem.begin();
    std::array<int, 3> k = it->first;
    long long v = it->second;
    std::array<int, 3> qk{k[0] - k0[0], k[1] - k0[1], k[2] - k0[2]};
    if (qk[0] > levelCap) break;
    long long qv = v * c0;
    quot[qk] += qv;
    qminQ = std::min(qminQ, qk[2]);
    rem.erase(it);
    for (auto& [off, tv] : tail) {
      std::array<int, 3> tk{k[0] + off[0], k[1] + off[1], k[2] + off[2]};
      if (tk[2] > S.qhi) continue;
      auto& slot = rem[tk];
      slot -= qv * tv;
      if (slot == 0) rem.erase(tk);
    }
  }
  int span = a2maxS - a2minS;
  int qcut = std::min(S.qhi, U.qhi + std::min(0, qminQ)) - k0[2] - span;
  R.qhi = std::min(R.qhi, qcut);
  for (auto& [k, v] : rem) {
    std::array<int, 3> qk{k[0] - k0[0], k[1] - k0[1], k[2] - k0[2]};
    if (qk[2] <= R.qhi)
      throw std::runtime_error("reduced_series: not divisible, residue at " + key_str(k));
  }
  for (auto& [k, v] : quot) {
    if (k[2] > R.qhi || v == 0) continue;
    if (v < 0)
      throw std::runtime_error("reduced_series: negative dimension at " + key_str(k));
    R.entries[k] = v;
  }
  return R;
}

std::string series_json(const TriGradedSeries& S) {
  nlohmann::json j;
  j["window"] = {S.qlo, S.qhi};
  j["convention"] = S.convention;
  nlohmann::json es = nlohmann::json::array();
  for (auto& [k, d] : S.entries)
    es.push_back({{"a2", k[0]}, {"t2", k[1]}, {"q", k[2]}, {"dim", d}});
  j["entries"] = es;
  return j.dump(2);
}

namespace {

// prints a doubled exponent as itself or a half
void print_half_power(std::ostringstream& os, const char* var, int e2) {
  if (e2 == 0) return;
  os << " " << var << "^";
  if (e2 % 2 == 0)
    os << (e2 / 2);
  else
    os << "{" << e2 << "/2}";
}

}  // namespace

std::string series_pretty(const TriGradedSeries& S) {
  if (S.entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, d] : S.entries) {
    if (!first) os << " + ";
    first = false;
    os << d;
    print_half_power(os, "a", k[0]);
    print_half_power(os, "t", k[1]);
    if (k[2] != 0) os << " q^" << k[2];
  }
  return os.str();
}

}  // namespace hb
