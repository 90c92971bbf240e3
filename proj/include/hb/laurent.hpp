#pragma once
#include <map>
#include <string>
#include <stdexcept>
#include <cstdint>

namespace hb {

// Laurent polynomial in one variable q with integer coefficients.
struct LaurentPoly {
  std::map<int, long long> c;  // exponent -> coefficient, zeros never stored

  static LaurentPoly monomial(int e, long long v = 1) {
    LaurentPoly p;
    if (v != 0) p.c[e] = v;
    return p;
  }
  static LaurentPoly one() { return monomial(0, 1); }

  bool zero() const { return c.empty(); }
  long long coeff(int e) const {
    auto it = c.find(e);
    return it == c.end() ? 0 : it->second;
  }
  void add(int e, long long v) {
    if (v == 0) return;
    auto it = c.find(e);
    if (it == c.end()) { c[e] = v; return; }
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, v] : o.c) r.add(e, v);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, v] : o.c) r.add(e, -v);
    return r;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, v1] : c)
      for (auto& [e2, v2] : o.c) r.add(e1 + e2, v1 * v2);
    return r;
  }
  LaurentPoly shifted(int e) const {
    LaurentPoly r;
    for (auto& [d, v] : c) r.c[d + e] = v;
    return r;
  }
  bool operator==(const LaurentPoly& o) const { return c == o.c; }
  std::string str(const std::string& var = "q") const;
};

// Exact Hilbert-series type: num / prod_d (1-q^d)^{mult[d]}.
// Used as the soundness certificate for graded dimensions of bimodules.
struct HilbSeries {
  LaurentPoly num;
  std::map<int, int> den;  // d -> multiplicity of factor (1 - q^d), d > 0

  static HilbSeries zero() { return {}; }
  static HilbSeries of_poly(const LaurentPoly& p) { return {p, {}}; }
  static HilbSeries inv_factor(int d) { return {LaurentPoly::one(), {{d, 1}}}; }

  HilbSeries operator*(const HilbSeries& o) const {
    HilbSeries r;
    r.num = num * o.num;
    r.den = den;
    for (auto& [d, m] : o.den) r.den[d] += m;
    return r;
  }
  HilbSeries operator+(const HilbSeries& o) const;
  HilbSeries operator-(const HilbSeries& o) const;
  HilbSeries shifted(int e) const { return {num.shifted(e), den}; }
  bool operator==(const HilbSeries& o) const;
  // coefficients on [lo,hi]
  std::map<int, long long> expand(int lo, int hi) const;
  void reduce();  // cancel (1-q^d) factors dividing num
};

// Two-variable truncated series in (alpha, q), alpha^2 = a. The a2 field is
// the alpha exponent, so integer a-powers sit at even a2. Decategorified
// values live here.
struct AQKey {
  int a2, q;
  bool operator<(const AQKey& o) const {
    return a2 != o.a2 ? a2 < o.a2 : q < o.q;
  }
  bool operator==(const AQKey& o) const { return a2 == o.a2 && q == o.q; }
};

// Truncation box. Contract: stored coefficients are exact for keys inside the
// box, and the represented object has no support outside [a2lo, a2hi] or
// below qlo within that strip. qhi is pure truncation.
struct AQWindow {
  int qlo = 0, qhi = 0, a2lo = 0, a2hi = 0;
  AQWindow padded(int dq, int da2 = 0) const { return {qlo - dq, qhi + dq, a2lo - da2, a2hi + da2}; }
  bool contains(int a2, int q) const { return a2 >= a2lo && a2 <= a2hi && q >= qlo && q <= qhi; }
  bool operator==(const AQWindow& o) const = default;
};

struct AQSeries {
  AQWindow w;
  std::map<AQKey, long long> c;

  static AQSeries zero(AQWindow w) { return {w, {}}; }
  long long coeff_at(const AQKey& k) const {
    auto it = c.find(k);
    return it == c.end() ? 0 : it->second;
  }
  void add(int a2, int q, long long v) {
    if (v == 0 || !w.contains(a2, q)) return;
    AQKey k{a2, q};
    auto it = c.find(k);
    if (it == c.end()) { c[k] = v; return; }
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
  AQSeries operator+(const AQSeries& o) const;
  AQSeries operator-(const AQSeries& o) const;
  AQSeries operator*(const AQSeries& o) const;  // truncating per the box rule
  AQSeries scaled(long long s) const;
  AQSeries shifted(int da2, int dq) const;  // multiply by alpha^{da2} q^{dq}
  bool is_zero() const { return c.empty(); }
  // equality of coefficients for q in [lo,hi] within the common a2 strip
  bool equal_on(const AQSeries& o, int lo, int hi) const;
  std::string str() const;
};

}
