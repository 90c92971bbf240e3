#include "hb/oracle.hpp"
#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <stdexcept>

namespace hb {

namespace {

// exact finite objects carry this as their truncation bound so that window
// arithmetic never spuriously erodes through them
constexpr int kFarQ = 1 << 22;

AQSeries aq_mono(int a2, int q, long long v) {
  AQSeries r = AQSeries::zero(AQWindow{q, kFarQ, a2, a2});
  r.add(a2, q, v);
  return r;
}

AQSeries aq_of_laurent(const LaurentPoly& p) {
  if (p.zero()) return AQSeries::zero(AQWindow{0, kFarQ, 0, 0});
  AQSeries r = AQSeries::zero(AQWindow{p.c.begin()->first, kFarQ, 0, 0});
  for (auto& [e, v] : p.c) r.add(0, e, v);
  return r;
}

// restrict to an a2 strip; the result represents the clipped object
AQSeries clip_a2(const AQSeries& s, int a2lo, int a2hi) {
  AQSeries r = s;
  r.w.a2lo = std::max(s.w.a2lo, a2lo);
  r.w.a2hi = std::min(s.w.a2hi, a2hi);
  for (auto it = r.c.begin(); it != r.c.end();) {
    if (it->first.a2 < a2lo || it->first.a2 > a2hi) it = r.c.erase(it);
    else ++it;
  }
  return r;
}

void ensure_qhi(const AQSeries& s, int qhi, const char* who) {
  if (s.w.qhi < qhi)
    throw std::runtime_error(std::string(who) + ": window erosion exceeded padding");
}

std::vector<ClassicalLetter> unit_letters(const ClassicalBraidWord& w) {
  std::vector<ClassicalLetter> out;
  for (auto& l : w.letters) {
    int s = l.exp < 0 ? -1 : 1;
    for (int k = 0; k < std::abs(l.exp); ++k) out.push_back({l.index, s});
  }
  return out;
}

}  // namespace

HeckeElement hecke_one(int n) {
  HeckeElement e;
  e.n = n;
  e.c[perm_identity(n)] = LaurentPoly::one();
  return e;
}

HeckeElement hecke_add(const HeckeElement& x, const HeckeElement& y) {
  if (x.n != y.n) throw std::runtime_error("hecke_add: strand mismatch");
  HeckeElement r = x;
  for (auto& [w, p] : y.c) {
    auto it = r.c.find(w);
    if (it == r.c.end()) {
      r.c[w] = p;
    } else {
      it->second = it->second + p;
      if (it->second.zero()) r.c.erase(it);
    }
  }
  return r;
}

HeckeElement hecke_scale(const HeckeElement& x, const LaurentPoly& p) {
  HeckeElement r;
  r.n = x.n;
  if (p.zero()) return r;
  for (auto& [w, q] : x.c) r.c[w] = q * p;
  return r;
}

// right multiplication by the standard generator T_i; the quadratic relation
// gives T_w T_i = T_{w s_i} + (q^{-1} - q) T_w when s_i is a right descent
static HeckeElement mul_T(const HeckeElement& x, int i) {
  HeckeElement r;
  r.n = x.n;
  Perm s = perm_transposition(x.n, i);
  LaurentPoly qterm;
  qterm.add(-1, 1);
  qterm.add(1, -1);
  auto acc = [&r](const Perm& w, const LaurentPoly& p) {
    if (p.zero()) return;
    auto it = r.c.find(w);
    if (it == r.c.end()) {
      r.c[w] = p;
    } else {
      it->second = it->second + p;
      if (it->second.zero()) r.c.erase(it);
    }
  };
  for (auto& [w, p] : x.c) {
    Perm ws = perm_compose(w, s);
    if (perm_length(ws) > perm_length(w)) {
      acc(ws, p);
    } else {
      acc(ws, p);
      acc(w, p * qterm);
    }
  }
  return r;
}

HeckeElement hecke_multiply(const HeckeElement& x, const HeckeElement& y) {
  if (x.n != y.n) throw std::runtime_error("hecke_multiply: strand mismatch");
  HeckeElement r;
  r.n = x.n;
  for (auto& [v, p] : y.c) {
    HeckeElement term = hecke_scale(x, p);
    for (int i : reduced_word(v)) term = mul_T(term, i);
    r = hecke_add(r, term);
  }
  return r;
}

HeckeElement hecke_of_classical(const ClassicalBraidWord& w) {
  HeckeElement r = hecke_one(w.strands);
  LaurentPoly qq;  // q - q^-1
  qq.add(1, 1);
  qq.add(-1, -1);
  for (auto& l : unit_letters(w)) {
    HeckeElement t = mul_T(r, l.index - 1);
    if (l.exp == 1) {
      // positive crossing: T^{-1} = T + (q - q^{-1})
      r = hecke_add(t, hecke_scale(r, qq));
    } else {
      r = t;
    }
  }
  return r;
}

AQSeries circle_series(AQWindow w) {
  // (1 + a q^{-2}) / (1 - q^2), truncated at w.qhi
  AQSeries r = AQSeries::zero(AQWindow{-2, w.qhi, 0, 2});
  for (int q = 0; q <= w.qhi; q += 2) r.add(0, q, 1);
  for (int q = -2; q <= w.qhi; q += 2) r.add(2, q, 1);
  return r;
}

// 1/(1 + a q^{-2}) = sum_k (-a)^k q^{-2k}, cut at the a2 cap; exact there
static AQSeries inv_one_plus_aqm2(int a2cap) {
  int kmax = std::max(0, a2cap) / 2;
  AQSeries r = AQSeries::zero(AQWindow{-2 * kmax, kFarQ, 0, 2 * kmax});
  for (int k = 0; k <= kmax; ++k) r.add(2 * k, -2 * k, k % 2 ? -1 : 1);
  return r;
}

AQSeries trace_parameter(AQWindow w) {
  // z = a q^{-3} (1 - q^2) / (1 + a q^{-2}); the a-support is truncated just
  // above the requested strip, which is safe because every factor it ever
  // multiplies has nonnegative a-support
  AQSeries num = aq_mono(2, -3, 1) + aq_mono(2, -1, -1);
  return num * inv_one_plus_aqm2(std::max(0, w.a2hi));
}

static AQSeries jo_trace_impl(const HeckeElement& x, const AQSeries& z);

static AQSeries jo_trace_basis(int n, const Perm& p, const LaurentPoly& coeff,
                               const AQSeries& z) {
  if (n <= 1) return aq_of_laurent(coeff);
  if (p[n - 1] == n - 1) {
    Perm q(p.begin(), p.end() - 1);
    HeckeElement e;
    e.n = n - 1;
    e.c[q] = coeff;
    return jo_trace_impl(e, z);
  }
  // write p = u * (s_{n-2} ... s_{j0}) with u fixing the last strand; the
  // cycle is the minimal-length coset representative, so lengths add
  int j0 = -1;
  for (int i = 0; i < n; ++i)
    if (p[i] == n - 1) {
      j0 = i;
      break;
    }
  Perm cinv = perm_identity(n);
  for (int i = j0; i <= n - 2; ++i) cinv = perm_compose(cinv, perm_transposition(n, i));
  Perm u = perm_compose(p, cinv);
  if (u[n - 1] != n - 1 || perm_length(p) != perm_length(u) + (n - 1 - j0))
    throw std::runtime_error("jones_ocneanu_trace: coset decomposition failed");
  Perm ur(u.begin(), u.end() - 1);
  HeckeElement rest;
  rest.n = n - 1;
  rest.c[ur] = coeff;
  // T_p = T_u T_{n-2} (T_{n-3} ... T_{j0}) and the middle factor traces to z
  for (int i = n - 3; i >= j0; --i) rest = mul_T(rest, i);
  return z * jo_trace_impl(rest, z);
}

static AQSeries jo_trace_impl(const HeckeElement& x, const AQSeries& z) {
  AQSeries r = AQSeries::zero(AQWindow{0, kFarQ, 0, 0});
  for (auto& [p, coeff] : x.c) r = r + jo_trace_basis(x.n, p, coeff, z);
  return r;
}

AQSeries jones_ocneanu_trace(const HeckeElement& x, AQWindow w) {
  AQSeries z = trace_parameter(w);
  return clip_a2(jo_trace_impl(x, z), w.a2lo, w.a2hi);
}

HeckeElement core_merge_split_class(int g, int n) {
  HeckeElement r = hecke_one(g + n);
  if (g <= 1) return r;
  r.c.clear();
  int l0 = g * (g - 1) / 2;
  Perm p(g);
  std::vector<bool> used(g, false);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == g) {
      Perm full = perm_identity(g + n);
      for (int i = 0; i < g; ++i) full[i] = p[i];
      r.c[full] = LaurentPoly::monomial(l0 - perm_length(p));
      return;
    }
    for (int v = 0; v < g; ++v) {
      if (used[v]) continue;
      used[v] = true;
      p[pos] = v;
      self(self, pos + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return r;
}

AQSeries handlebody_homfly_decat_raw(const BraidWord& b, AQWindow w) {
  int total = b.genus + b.strands;
  // the trace itself is exact in q; only the circle factors truncate, so give
  // each one enough headroom for the low q-support accumulated so far
  AQWindow tw{w.qlo, w.qhi, std::min(0, w.a2lo), std::max(0, w.a2hi)};
  HeckeElement h = hecke_of_classical(embed_classical(b));
  HeckeElement x = hecke_multiply(core_merge_split_class(b.genus, b.strands), h);
  AQSeries r = jones_ocneanu_trace(x, tw);
  for (int i = 0; i < total; ++i) {
    AQSeries circ = circle_series(AQWindow{0, w.qhi - r.w.qlo + 2 * (total - i) + 2, 0, 0});
    r = clip_a2(r * circ, tw.a2lo, tw.a2hi);
  }
  ensure_qhi(r, w.qhi, "handlebody_homfly_decat_raw");
  return clip_a2(r, w.a2lo, w.a2hi);
}

// ---------- independent skein recursion on closure diagrams ----------

namespace {

struct Diagram {
  int n;
  std::vector<ClassicalLetter> xs;
};

struct Traversal {
  int components = 0;
  int first_under_pos = -1;  // word index of the first crossing met under
};

// walk the closure component by component, each started at its least top
// column, recording the first crossing whose first encounter is on the under
// strand; switching crossings preserves the shadow, hence the walk order
Traversal traverse(const Diagram& d) {
  std::vector<bool> seen(d.n, false);
  std::vector<char> met(d.xs.size(), 0);
  Traversal t;
  for (int base = 0; base < d.n; ++base) {
    if (seen[base]) continue;
    ++t.components;
    int cur = base;
    do {
      seen[cur] = true;
      int col = cur;
      for (std::size_t k = 0; k < d.xs.size(); ++k) {
        auto& l = d.xs[k];
        int i = l.index - 1;
        if (col != i && col != i + 1) continue;
        bool over = (l.exp == 1 && col == i) || (l.exp == -1 && col == i + 1);
        if (!met[k]) {
          met[k] = 1;
          if (!over && t.first_under_pos < 0) t.first_under_pos = (int)k;
        }
        col = (col == i) ? i + 1 : i;
      }
      cur = col;
    } while (cur != base);
  }
  return t;
}

// (a - a^{-1})/(q - q^{-1}) = (a^{-1} - a)(q + q^3 + ...): the extra-component
// factor of the reduced invariant
AQSeries delta_series(int qhi) {
  AQSeries r = AQSeries::zero(AQWindow{1, qhi, -2, 2});
  for (int q = 1; q <= qhi; q += 2) {
    r.add(-2, q, 1);
    r.add(2, q, -1);
  }
  return r;
}

AQSeries skein(const Diagram& d, int qhi) {
  Traversal t = traverse(d);
  if (t.first_under_pos < 0) {
    // descending diagram: an unlink
    AQSeries r = aq_mono(0, 0, 1);
    AQSeries dl = delta_series(qhi);
    for (int i = 1; i < t.components; ++i) r = r * dl;
    return r;
  }
  int k = t.first_under_pos;
  Diagram sw = d, sm = d;
  sw.xs[k].exp = -sw.xs[k].exp;
  sm.xs.erase(sm.xs.begin() + k);
  AQSeries qq = aq_mono(0, 1, 1) + aq_mono(0, -1, -1);
  if (d.xs[k].exp == 1) {
    // P+ = a^{-2} P- + a^{-1}(q - q^{-1}) P0
    return skein(sw, qhi).shifted(-4, 0) + (qq * skein(sm, qhi)).shifted(-2, 0);
  }
  // P- = a^2 P+ - a(q - q^{-1}) P0
  return skein(sw, qhi).shifted(4, 0) - (qq * skein(sm, qhi)).shifted(2, 0);
}

}  // namespace

AQSeries homfly_skein(const ClassicalBraidWord& w, AQWindow win) {
  Diagram d{w.strands, unit_letters(w)};
  // each smoothing erodes the q truncation by one
  AQSeries r = skein(d, win.qhi + (int)d.xs.size() + 2);
  ensure_qhi(r, win.qhi, "homfly_skein");
  return clip_a2(r, win.a2lo, win.a2hi);
}

AQSeries aq_divide(const AQSeries& u, const AQSeries& v, AQWindow w) {
  if (v.is_zero()) throw std::runtime_error("aq_divide: zero divisor");
  AQKey lead = v.c.begin()->first;
  long long lc = v.c.begin()->second;
  if (lc != 1 && lc != -1)
    throw std::runtime_error("aq_divide: divisor lead is not a unit monomial");
  // v = lc alpha^{lead.a2} q^{lead.q} (1 + W) with W raising a2, or raising q
  // at the same a2
  std::vector<std::pair<AQKey, long long>> W;
  int wqmin = 0;
  for (auto it = std::next(v.c.begin()); it != v.c.end(); ++it) {
    AQKey dk{it->first.a2 - lead.a2, it->first.q - lead.q};
    if (dk.a2 < 0 || (dk.a2 == 0 && dk.q <= 0))
      throw std::runtime_error("aq_divide: divisor not expandable at its lead");
    wqmin = std::min(wqmin, dk.q);
    W.push_back({dk, it->second * lc});
  }
  AQSeries us = u.shifted(-lead.a2, -lead.q).scaled(lc);
  // keys above the requested a2 strip never flow back down; keys above qhi at
  // low a2 can descend while climbing in a2, so work in a taller q range. The
  // flow starts at the dividend's own a2 floor.
  int a2span = std::max(0, w.a2hi - us.w.a2lo);
  int qtop = w.qhi + a2span * std::max(0, -wqmin);
  if (us.w.qhi < qtop)
    throw std::runtime_error("aq_divide: dividend window too small for the requested box");
  int qbot = us.w.qlo - a2span * std::max(0, -wqmin);
  if (v.w.qhi - lead.q < qtop - qbot)
    throw std::runtime_error("aq_divide: divisor window too small for the requested box");
  std::map<AQKey, long long> rem(us.c.begin(), us.c.end());
  AQSeries quot = AQSeries::zero(AQWindow{qbot, w.qhi, us.w.a2lo, w.a2hi});
  for (auto it = rem.begin(); it != rem.end(); ++it) {
    AQKey k = it->first;
    long long cv = it->second;
    if (cv == 0 || k.a2 > w.a2hi || k.q > qtop) continue;
    if (k.q <= w.qhi) quot.add(k.a2, k.q, cv);
    for (auto& [dk, dv] : W) rem[AQKey{k.a2 + dk.a2, k.q + dk.q}] -= cv * dv;
  }
  return quot;
}

std::optional<UnitMatch> match_up_to_unit(const AQSeries& a, const AQSeries& b, int lo, int hi) {
  auto least = [&](const AQSeries& s) -> std::optional<std::pair<AQKey, long long>> {
    for (auto& [k, v] : s.c)
      if (k.q >= lo && k.q <= hi) return {{k, v}};
    return std::nullopt;
  };
  auto la = least(a), lb = least(b);
  if (!la && !lb) return UnitMatch{1, 0, 0};
  if (!la || !lb) return std::nullopt;
  if (la->second != lb->second && la->second != -lb->second) return std::nullopt;
  UnitMatch m{la->second == lb->second ? 1 : -1, la->first.a2 - lb->first.a2,
              la->first.q - lb->first.q};
  AQSeries bb = b.shifted(m.da2, m.dq).scaled(m.sign);
  if (hi > a.w.qhi || hi > bb.w.qhi) return std::nullopt;
  if (!a.equal_on(bb, lo, hi)) return std::nullopt;
  return m;
}

}
