#include "hb/rings.hpp"
#include "hb/linalg.hpp"
#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hb {

// ---------- Laurent / Hilbert series ----------

std::string LaurentPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, v] : c) {
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    long long av = v > 0 ? v : -v;
    if (av != 1 || e == 0) os << av;
    if (e != 0) {
      if (av != 1) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

static LaurentPoly den_factor(int d) {
  LaurentPoly f = LaurentPoly::one();
  f.add(d, -1);
  return f;
}

static LaurentPoly den_poly(const std::map<int, int>& den) {
  LaurentPoly p = LaurentPoly::one();
  for (auto& [d, m] : den)
    for (int i = 0; i < m; ++i) p = p * den_factor(d);
  return p;
}

HilbSeries HilbSeries::operator+(const HilbSeries& o) const {
  HilbSeries r;
  for (auto& [d, m] : den) r.den[d] = m;
  for (auto& [d, m] : o.den) r.den[d] = std::max(r.den[d], m);
  LaurentPoly a = num, b = o.num;
  for (auto& [d, m] : r.den) {
    int ma = m - (den.count(d) ? den.at(d) : 0);
    int mb = m - (o.den.count(d) ? o.den.at(d) : 0);
    for (int i = 0; i < ma; ++i) a = a * den_factor(d);
    for (int i = 0; i < mb; ++i) b = b * den_factor(d);
  }
  r.num = a + b;
  return r;
}

HilbSeries HilbSeries::operator-(const HilbSeries& o) const {
  HilbSeries neg = o;
  LaurentPoly m1;
  m1.add(0, -1);
  neg.num = neg.num * m1;
  return *this + neg;
}

bool HilbSeries::operator==(const HilbSeries& o) const {
  return num * den_poly(o.den) == o.num * den_poly(den);
}

std::map<int, long long> HilbSeries::expand(int lo, int hi) const {
  std::map<int, long long> out;
  if (num.zero()) return out;
  int base = num.c.begin()->first;
  if (hi < base) return out;
  std::vector<long long> v(hi - base + 1, 0);
  for (auto& [e, cv] : num.c)
    if (e <= hi) v[e - base] = cv;
  for (auto& [d, m] : den)
    for (int rep = 0; rep < m; ++rep)
      for (int e = d; e < (int)v.size(); ++e) v[e] += v[e - d];
  for (int e = std::max(lo, base); e <= hi; ++e)
    if (v[e - base] != 0) out[e] = v[e - base];
  return out;
}

// exact division attempt by (1 - q^d); nullopt if not divisible
static std::optional<LaurentPoly> div_one_factor(const LaurentPoly& p, int d) {
  if (p.zero()) return p;
  LaurentPoly n = p, q;
  int top = n.c.rbegin()->first;
  while (!n.zero()) {
    auto [e, cv] = *n.c.begin();
    if (e > top) return std::nullopt;
    q.add(e, cv);
    n.add(e, -cv);
    n.add(e + d, cv);
  }
  return q;
}

void HilbSeries::reduce() {
  for (auto it = den.begin(); it != den.end();) {
    while (it->second > 0) {
      auto q = div_one_factor(num, it->first);
      if (!q) break;
      num = *q;
      --it->second;
    }
    if (it->second == 0) it = den.erase(it);
    else ++it;
  }
}

AQSeries AQSeries::operator+(const AQSeries& o) const {
  // qlo/a2lo/a2hi bound the support exactly, so they combine by union;
  // qhi is a truncation bound and intersects
  AQSeries r;
  r.w = AQWindow{std::min(w.qlo, o.w.qlo), std::min(w.qhi, o.w.qhi),
                 std::min(w.a2lo, o.w.a2lo), std::max(w.a2hi, o.w.a2hi)};
  for (auto& [k, v] : c) r.add(k.a2, k.q, v);
  for (auto& [k, v] : o.c) r.add(k.a2, k.q, v);
  return r;
}

AQSeries AQSeries::operator-(const AQSeries& o) const { return *this + o.scaled(-1); }

AQSeries AQSeries::operator*(const AQSeries& o) const {
  // an output key is sound iff every in-support decomposition lies inside
  // both boxes; supports are bounded below in q and on both sides in a2
  AQSeries r;
  r.w.qlo = w.qlo + o.w.qlo;
  r.w.qhi = std::min(w.qhi + o.w.qlo, o.w.qhi + w.qlo);
  r.w.a2lo = w.a2lo + o.w.a2lo;
  r.w.a2hi = w.a2hi + o.w.a2hi;
  for (auto& [k1, v1] : c)
    for (auto& [k2, v2] : o.c) r.add(k1.a2 + k2.a2, k1.q + k2.q, v1 * v2);
  return r;
}

AQSeries AQSeries::scaled(long long s) const {
  AQSeries r;
  r.w = w;
  if (s != 0)
    for (auto& [k, v] : c) r.c[k] = v * s;
  return r;
}

AQSeries AQSeries::shifted(int da2, int dq) const {
  AQSeries r;
  r.w = AQWindow{w.qlo + dq, w.qhi + dq, w.a2lo + da2, w.a2hi + da2};
  for (auto& [k, v] : c) r.c[AQKey{k.a2 + da2, k.q + dq}] = v;
  return r;
}

bool AQSeries::equal_on(const AQSeries& o, int lo, int hi) const {
  // below qlo and outside the a2 strip a series is exactly zero, so only the
  // truncation bound qhi restricts the comparison; keys outside the common
  // strip belong to at most one operand's represented object
  if (hi > w.qhi || hi > o.w.qhi)
    throw std::runtime_error("equal_on: range beyond truncation window");
  int slo = std::max(w.a2lo, o.w.a2lo), shi = std::min(w.a2hi, o.w.a2hi);
  auto inside = [&](const AQKey& k) {
    return k.q >= lo && k.q <= hi && k.a2 >= slo && k.a2 <= shi;
  };
  for (auto& [k, v] : c)
    if (inside(k) && o.coeff_at(k) != v) return false;
  for (auto& [k, v] : o.c)
    if (inside(k) && coeff_at(k) != v) return false;
  return true;
}

std::string AQSeries::str() const {
  std::ostringstream os;
  os << "window q in [" << w.qlo << "," << w.qhi << "], a2 in [" << w.a2lo << "," << w.a2hi << "]\n";
  for (auto& [k, v] : c)
    os << "  a2=" << k.a2 << " q=" << k.q << " : " << v << "\n";
  return os.str();
}

// ---------- permutations ----------

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
  return r;
}

Perm perm_transposition(int n, int i) {
  Perm p = perm_identity(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

int perm_length(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

std::vector<int> reduced_word(Perm w) {
  // peel right descents; collected letters come out rightmost first
  std::vector<int> collected;
  for (;;) {
    int d = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) { d = (int)i; break; }
    if (d < 0) break;
    collected.push_back(d);
    std::swap(w[d], w[d + 1]);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

// ---------- polynomials ----------

Poly Poly::constant(int n, const Rational& c) {
  Poly p = zero(n);
  if (!hb::is_zero(c)) p.t[Monomial{std::vector<uint16_t>(n, 0)}] = c;
  return p;
}

Poly Poly::var(int n, int i, int pow) {
  Poly p = zero(n);
  Monomial m{std::vector<uint16_t>(n, 0)};
  m.e[i] = (uint16_t)pow;
  p.t[m] = 1;
  return p;
}

int Poly::qdeg() const {
  if (t.empty()) return -1;
  int d = t.begin()->first.total();
  if (t.rbegin()->first.total() != d) throw std::runtime_error("qdeg: inhomogeneous");
  return 2 * d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (hb::is_zero(c)) return;
  auto it = t.find(m);
  if (it == t.end()) { t[m] = c; return; }
  it->second += c;
  if (hb::is_zero(it->second)) t.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r = zero(n);
  for (auto& [m1, c1] : t)
    for (auto& [m2, c2] : o.t) {
      Monomial m = m1;
      for (int i = 0; i < n; ++i) m.e[i] = (uint16_t)(m.e[i] + m2.e[i]);
      r.add_term(m, c1 * c2);
    }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t) c = -c;
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (hb::is_zero(c)) return zero(n);
  Poly r = *this;
  for (auto& [m, v] : r.t) v *= c;
  return r;
}

std::string Poly::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    auto& [m, c] = *it;
    if (!first) os << " + ";
    os << c.str();
    for (int i = 0; i < n; ++i)
      if (m.e[i]) {
        os << "*x" << (i + 1);
        if (m.e[i] > 1) os << "^" << (int)m.e[i];
      }
    first = false;
  }
  return os.str();
}

Poly act(const Perm& w, const Poly& f) {
  Poly r = Poly::zero(f.n);
  for (auto& [m, c] : f.t) {
    Monomial nm{std::vector<uint16_t>(f.n, 0)};
    for (int i = 0; i < f.n; ++i) nm.e[w[i]] = m.e[i];
    r.add_term(nm, c);
  }
  return r;
}

Poly demazure(int i, const Poly& f) {
  Poly g = f - act(perm_transposition(f.n, i), f);
  Poly q = Poly::zero(f.n);
  while (!g.is_zero()) {
    auto& [m, c] = *g.t.rbegin();
    if (m.e[i] == 0) throw std::runtime_error("demazure: leading term not divisible");
    Monomial qm = m;
    qm.e[i] -= 1;
    Rational qc = c;
    q.add_term(qm, qc);
    // g -= qc * (x_i - x_{i+1}) * x^qm
    Monomial m2 = qm;
    m2.e[i + 1] += 1;
    g.add_term(m, -qc);
    g.add_term(m2, qc);
  }
  return q;
}

Poly demazure_word(const std::vector<int>& word, const Poly& f) {
  Poly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure(*it, g);
  return g;
}

Poly elementary_symmetric(int n, const std::vector<int>& vars, int j) {
  if (j == 0) return Poly::constant(n, 1);
  if (j > (int)vars.size()) return Poly::zero(n);
  Poly r = Poly::zero(n);
  std::vector<int> idx(j);
  for (int i = 0; i < j; ++i) idx[i] = i;
  for (;;) {
    Monomial m{std::vector<uint16_t>(n, 0)};
    for (int i : idx) m.e[vars[i]] = 1;
    r.add_term(m, 1);
    int k = j - 1;
    while (k >= 0 && idx[k] == (int)vars.size() - j + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int l = k + 1; l < j; ++l) idx[l] = idx[l - 1] + 1;
  }
  return r;
}

// ---------- compositions ----------

int Composition::block_start(int b) const {
  int s = 0;
  for (int i = 0; i < b; ++i) s += parts[i];
  return s;
}

std::vector<int> Composition::block_vars(int b) const {
  std::vector<int> v;
  int s = block_start(b);
  for (int i = 0; i < parts[b]; ++i) v.push_back(s + i);
  return v;
}

int Composition::block_of(int var) const {
  int s = 0;
  for (int b = 0; b < (int)parts.size(); ++b) {
    s += parts[b];
    if (var < s) return b;
  }
  throw std::runtime_error("block_of: out of range");
}

int Composition::longest_length() const {
  int l = 0;
  for (int k : parts) l += k * (k - 1) / 2;
  return l;
}

std::string Composition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

bool refines(const Composition& I, const Composition& J) {
  if (I.N() != J.N()) return false;
  std::size_t i = 0;
  for (int jp : J.parts) {
    int acc = 0;
    while (acc < jp) {
      if (i >= I.parts.size()) return false;
      acc += I.parts[i++];
    }
    if (acc != jp) return false;
  }
  return i == I.parts.size();
}

Perm longest_element(const Composition& I) {
  Perm w = perm_identity(I.N());
  for (int b = 0; b < I.blocks(); ++b) {
    int s = I.block_start(b), k = I.parts[b];
    for (int i = 0; i < k; ++i) w[s + i] = s + k - 1 - i;
  }
  return w;
}

Poly demazure_relative(const Composition& I, const Composition& J, const Poly& f) {
  if (!refines(I, J)) throw std::runtime_error("demazure_relative: I must refine J");
  Perm w = perm_compose(longest_element(J), longest_element(I));
  return demazure_word(reduced_word(w), f);
}

HilbSeries qdim_invariant_ring(const Composition& I) {
  HilbSeries h = HilbSeries::of_poly(LaurentPoly::one());
  for (int k : I.parts)
    for (int i = 1; i <= k; ++i) h.den[2 * i] += 1;
  return h;
}

LaurentPoly coset_rank_poly(const Composition& I, const Composition& J) {
  if (!refines(I, J)) throw std::runtime_error("coset_rank_poly: I must refine J");
  // multiset quotient of the (1-q^{2i}) factor lists
  std::map<int, int> nf, df;
  for (int k : J.parts)
    for (int i = 1; i <= k; ++i) nf[2 * i] += 1;
  for (int k : I.parts)
    for (int i = 1; i <= k; ++i) {
      auto it = nf.find(2 * i);
      if (it != nf.end() && it->second > 0) --it->second;
      else df[2 * i] += 1;
    }
  LaurentPoly p = LaurentPoly::one();
  for (auto& [d, m] : nf)
    for (int i = 0; i < m; ++i) p = p * den_factor(d);
  for (auto& [d, m] : df)
    for (int i = 0; i < m; ++i) {
      auto q = div_one_factor(p, d);
      if (!q) throw std::runtime_error("coset_rank_poly: not a polynomial");
      p = *q;
    }
  return p;
}

// ---------- invariant rings ----------

InvariantRing::InvariantRing(Composition c) : I(std::move(c)) {
  for (int b = 0; b < I.blocks(); ++b)
    for (int j = 1; j <= I.parts[b]; ++j) gens.emplace_back(b, j);
}

int InvariantRing::qdeg_of(const EMono& m) const {
  int d = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) d += 2 * gens[g].second * m.e[g];
  return d;
}

std::vector<EMono> InvariantRing::monos_of_qdeg(int d) const {
  std::vector<EMono> out;
  if (d < 0 || d % 2) return out;
  EMono cur;
  cur.e.assign(gens.size(), 0);
  // lexicographic over exponent vectors, first generator most significant
  auto rec = [&](auto&& self, std::size_t g, int rem) -> void {
    if (g == gens.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    int step = 2 * gens[g].second;
    for (int e = 0; e * step <= rem; ++e) {
      cur.e[g] = (uint16_t)e;
      self(self, g + 1, rem - e * step);
    }
    cur.e[g] = 0;
  };
  rec(rec, 0, d);
  return out;
}

Poly InvariantRing::realize_gen(int g) const {
  auto [b, j] = gens[g];
  return elementary_symmetric(I.N(), I.block_vars(b), j);
}

Poly InvariantRing::realize(const EMono& m) const {
  Poly p = Poly::constant(I.N(), 1);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int k = 0; k < (int)m.e[g]; ++k) p = p * realize_gen((int)g);
  return p;
}

std::map<EMono, Rational> InvariantRing::express(const Poly& f) const {
  if (f.n != I.N()) throw std::runtime_error("express: variable count mismatch");
  std::map<EMono, Rational> out;
  Poly g = f;
  while (!g.is_zero()) {
    auto& [m, c] = *g.t.rbegin();
    // leading exponents must be weakly decreasing within each block
    EMono em;
    em.e.assign(gens.size(), 0);
    std::size_t gi = 0;
    for (int b = 0; b < I.blocks(); ++b) {
      int s = I.block_start(b), k = I.parts[b];
      for (int i = 0; i + 1 < k; ++i)
        if (m.e[s + i] < m.e[s + i + 1]) throw std::runtime_error("express: not invariant");
      for (int j = 1; j <= k; ++j) {
        int cur = m.e[s + j - 1];
        int nxt = j < k ? m.e[s + j] : 0;
        em.e[gi + j - 1] = (uint16_t)(cur - nxt);
      }
      gi += k;
    }
    Rational cc = c;
    out[em] += cc;
    g = g - realize(em).scaled(cc);
    if (!g.is_zero() && !MonoLess{}(g.t.rbegin()->first, m))
      throw std::runtime_error("express: leading term did not decrease");
  }
  for (auto it = out.begin(); it != out.end();)
    it = hb::is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

// ---------- Frobenius dual bases ----------

namespace {

struct MonoIndex {
  std::map<Monomial, int, MonoLess> idx;
  int of(const Monomial& m) {
    auto it = idx.find(m);
    if (it != idx.end()) return it->second;
    int v = (int)idx.size();
    idx.emplace(m, v);
    return v;
  }
};

std::vector<std::pair<int, Rational>> vectorize(const Poly& p, MonoIndex& mi) {
  std::vector<std::pair<int, Rational>> v;
  for (auto& [m, c] : p.t) v.emplace_back(mi.of(m), c);
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return v;
}

// insert-only echelon over monomial indices, local to frobenius construction
struct PolyEchelon {
  std::map<int, std::vector<std::pair<int, Rational>>> rows;
  bool insert(std::vector<std::pair<int, Rational>> v) {
    for (;;) {
      bool hit = false;
      for (std::size_t i = 0; i < v.size(); ++i) {
        auto it = rows.find(v[i].first);
        if (it != rows.end()) {
          Rational c = v[i].second;
          // v -= c * row
          auto& r = it->second;
          std::map<int, Rational> acc;
          for (auto& [col, val] : v) acc[col] = val;
          for (auto& [col, val] : r) {
            acc[col] -= c * val;
            if (hb::is_zero(acc[col])) acc.erase(col);
          }
          v.assign(acc.begin(), acc.end());
          hit = true;
          break;
        }
      }
      if (!hit) break;
    }
    if (v.empty()) return false;
    Rational lead = v.front().second;
    for (auto& [col, val] : v) val /= lead;
    int pc = v.front().first;
    rows.emplace(pc, std::move(v));
    return true;
  }
};

FrobeniusData compute_frobenius(const Composition& I, const Composition& J) {
  FrobeniusData fd;
  fd.I = I;
  fd.J = J;
  fd.degdrop = 2 * (J.longest_length() - I.longest_length());
  LaurentPoly target = coset_rank_poly(I, J);
  InvariantRing RI(I), RJ(J);

  for (int d = 0; d <= fd.degdrop; d += 2) {
    long long want = target.coeff(d);
    if (want == 0) continue;
    MonoIndex mi;
    PolyEchelon ech;
    for (std::size_t bi = 0; bi < fd.basis.size(); ++bi) {
      int hd = d - fd.basis_qdeg[bi];
      for (auto& h : RJ.monos_of_qdeg(hd))
        ech.insert(vectorize(RJ.realize(h) * fd.basis[bi], mi));
    }
    long long got = 0;
    for (auto& m : RI.monos_of_qdeg(d)) {
      if (got == want) break;
      Poly p = RI.realize(m);
      if (ech.insert(vectorize(p, mi))) {
        fd.basis.push_back(p);
        fd.basis_qdeg.push_back(d);
        ++got;
      }
    }
    if (got != want) throw std::runtime_error("frobenius: basis shortfall at degree " + std::to_string(d));
  }

  // duals: unique elements of complementary degree pairing to delta
  fd.dual.resize(fd.basis.size());
  for (std::size_t j = 0; j < fd.basis.size(); ++j) {
    int dd = fd.degdrop - fd.basis_qdeg[j];
    auto cand = RI.monos_of_qdeg(dd);
    std::vector<Poly> P;
    for (auto& m : cand) P.push_back(RI.realize(m));
    // rows: for each basis element i, each x-monomial of the traced product
    MonoIndex mi;
    std::vector<std::vector<Rational>> dense;  // per unknown, stacked later
    std::vector<std::map<std::pair<std::size_t, int>, Rational>> colent(P.size());
    std::map<std::pair<std::size_t, int>, Rational> rhs;
    Monomial unit{std::vector<uint16_t>(I.N(), 0)};
    for (std::size_t i = 0; i < fd.basis.size(); ++i) {
      int td = fd.basis_qdeg[i] + dd - fd.degdrop;
      if (td < 0) continue;  // trace lands in negative degree: identically zero
      for (std::size_t k = 0; k < P.size(); ++k) {
        Poly tr = demazure_relative(I, J, fd.basis[i] * P[k]);
        for (auto& [m, c] : tr.t) colent[k][{i, mi.of(m)}] = c;
      }
      if (i == j) rhs[{i, mi.of(unit)}] = 1;
    }
    std::map<std::pair<std::size_t, int>, int> rowidx;
    for (auto& col : colent)
      for (auto& [key, c] : col)
        if (!rowidx.count(key)) { int v = (int)rowidx.size(); rowidx[key] = v; }
    for (auto& [key, c] : rhs)
      if (!rowidx.count(key)) { int v = (int)rowidx.size(); rowidx[key] = v; }
    SparseMat A((int)rowidx.size(), (int)P.size());
    std::vector<Rational> b(rowidx.size(), Rational(0));
    for (std::size_t k = 0; k < P.size(); ++k)
      for (auto& [key, c] : colent[k]) A.add(rowidx[key], (int)k, c);
    for (auto& [key, c] : rhs) b[rowidx[key]] = c;
    auto x = solve(A, b);
    if (!x) throw std::runtime_error("frobenius: dual system inconsistent");
    Poly dj = Poly::zero(I.N());
    for (std::size_t k = 0; k < P.size(); ++k) dj = dj + P[k].scaled((*x)[k]);
    fd.dual[j] = dj;
  }

  // safety: verify the pairing is exactly delta
  for (std::size_t i = 0; i < fd.basis.size(); ++i)
    for (std::size_t j = 0; j < fd.basis.size(); ++j) {
      Poly tr = demazure_relative(I, J, fd.basis[i] * fd.dual[j]);
      Poly expect = (i == j) ? Poly::constant(I.N(), 1) : Poly::zero(I.N());
      if (!(tr == expect)) throw std::runtime_error("frobenius: pairing verification failed");
    }
  return fd;
}

}  // namespace

const FrobeniusData& frobenius(const Composition& I, const Composition& J) {
  static std::map<std::pair<Composition, Composition>, FrobeniusData> cache;
  auto key = std::make_pair(I, J);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, compute_frobenius(I, J)).first->second;
}

// ---------- RNG ----------

std::uint64_t SplitMix::next() {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

int SplitMix::range(int lo, int hi) {
  return lo + (int)(next() % (std::uint64_t)(hi - lo + 1));
}

Poly random_poly(SplitMix& rng, int n, int qdeg, int terms) {
  Poly p = Poly::zero(n);
  int total = qdeg / 2;
  for (int t = 0; t < terms; ++t) {
    Monomial m{std::vector<uint16_t>(n, 0)};
    int rem = total;
    for (int i = 0; i + 1 < n; ++i) {
      int e = rng.range(0, rem);
      m.e[i] = (uint16_t)e;
      rem -= e;
    }
    m.e[n - 1] = (uint16_t)rem;
    int c = rng.range(-9, 9);
    if (c == 0) c = 1;
    p.add_term(m, c);
  }
  return p;
}

}
