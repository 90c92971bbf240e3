#include "hb/webs.hpp"
#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hb {

namespace {

GMono gmono_add(const GMono& a, const GMono& b) {
  GMono r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

EPoly epoly_scaled(const EPoly& p, const Rational& c) {
  EPoly r;
  if (c == 0) return r;
  for (auto& [m, v] : p) r[m] = v * c;
  return r;
}

void epoly_acc(EPoly& a, const EPoly& b, const Rational& c) {
  if (c == 0) return;
  for (auto& [m, v] : b) {
    auto& slot = a[m];
    slot += v * c;
    if (slot == 0) a.erase(m);
  }
}

EPoly epoly_mul(const EPoly& a, const EPoly& b) {
  EPoly r;
  for (auto& [ma, va] : a)
    for (auto& [mb, vb] : b) {
      GMono m = gmono_add(ma, mb);
      auto& slot = r[m];
      slot += va * vb;
      if (slot == 0) r.erase(m);
    }
  return r;
}

EPoly epoly_one(int ngens) {
  GMono m;
  m.e.assign(ngens, 0);
  return {{m, Rational(1)}};
}

bool layers_equal(const WebLayer& a, const WebLayer& b) {
  if (a.kind != b.kind || a.pos != b.pos) return false;
  return a.kind == LayerKind::Merge || a.leftColor == b.leftColor;
}

}  // namespace

// ---------- webs ----------

Web make_web(const Composition& bottom, const std::vector<WebLayer>& layers) {
  std::vector<int> slice = bottom.parts;
  int qshift = 0;
  for (auto& L : layers) {
    if (L.kind == LayerKind::Merge) {
      if (L.pos < 0 || L.pos + 1 >= (int)slice.size())
        throw std::runtime_error("web: merge position out of range");
      int a = slice[L.pos], b = slice[L.pos + 1];
      qshift -= a * b;
      slice[L.pos] = a + b;
      slice.erase(slice.begin() + L.pos + 1);
    } else {
      if (L.pos < 0 || L.pos >= (int)slice.size())
        throw std::runtime_error("web: split position out of range");
      int c = slice[L.pos];
      slice[L.pos] = L.leftColor;
      slice.insert(slice.begin() + L.pos + 1, c - L.leftColor);
    }
  }
  Web w;
  w.bottom = bottom;
  w.top = Composition{slice};
  w.layers = layers;
  w.qshift = qshift;
  return w;
}

Web identity_web(const Composition& c) { return make_web(c, {}); }

Web stack_webs(const Web& below, const Web& above) {
  if (!(below.top.parts == above.bottom.parts))
    throw std::runtime_error("web: stacking boundary mismatch");
  std::vector<WebLayer> ls = below.layers;
  ls.insert(ls.end(), above.layers.begin(), above.layers.end());
  return make_web(below.bottom, ls);
}

Web ladder_web_at(const Composition& bottom, int p, int i) {
  if (p < 0 || p + 1 >= bottom.blocks()) throw std::runtime_error("web: bad ladder position");
  int k = bottom.parts[p], l = bottom.parts[p + 1];
  if (k < 0 || l < 0 || i < 0 || i > std::min(k, l))
    throw std::runtime_error("web: bad ladder parameters");
  using LK = LayerKind;
  return make_web(bottom, {{LK::Split, p + 1, l - i},
                           {LK::Merge, p, 0},
                           {LK::Split, p, l},
                           {LK::Merge, p + 1, 0}});
}

Web ladder_web(int k, int l, int i) { return ladder_web_at(Composition{{k, l}}, 0, i); }

Web assoc_swap(const Web& w, int j) {
  if (j < 0 || j + 1 >= (int)w.layers.size())
    throw std::runtime_error("web: assoc site out of range");
  const WebLayer L1 = w.layers[j], L2 = w.layers[j + 1];
  using LK = LayerKind;
  int p = L1.pos, q = L2.pos;
  WebLayer A, B;  // replacement pair
  if (L1.kind == LK::Merge && L2.kind == LK::Merge) {
    if (q == p) {
      A = {LK::Merge, p + 1, 0};
      B = {LK::Merge, p, 0};
    } else if (q == p - 1) {
      A = {LK::Merge, q, 0};
      B = {LK::Merge, q, 0};
    } else if (q >= p + 1) {
      A = {LK::Merge, q + 1, 0};
      B = {LK::Merge, p, 0};
    } else {
      A = {LK::Merge, q, 0};
      B = {LK::Merge, p - 1, 0};
    }
  } else if (L1.kind == LK::Split && L2.kind == LK::Split) {
    // recover colors from the slice before layer j
    std::vector<int> slice = w.bottom.parts;
    for (int t = 0; t < j; ++t) {
      auto& L = w.layers[t];
      if (L.kind == LK::Merge) {
        slice[L.pos] += slice[L.pos + 1];
        slice.erase(slice.begin() + L.pos + 1);
      } else {
        int c = slice[L.pos];
        slice[L.pos] = L.leftColor;
        slice.insert(slice.begin() + L.pos + 1, c - L.leftColor);
      }
    }
    if (q == p) {
      // D -> (X, C) -> ((A,B), C) becomes D -> (A, Z) -> (A, (B, C))
      int cA = L2.leftColor;
      A = {LK::Split, p, cA};
      B = {LK::Split, p + 1, L1.leftColor - cA};
    } else if (q == p + 1) {
      // D -> (A, Z) -> (A, (B, C)) becomes D -> (X, C) -> ((A, B), C)
      int cA = L1.leftColor, cB = L2.leftColor;
      A = {LK::Split, p, cA + cB};
      B = {LK::Split, p, cA};
    } else if (q >= p + 2) {
      A = {LK::Split, q - 1, L2.leftColor};
      B = {LK::Split, p, L1.leftColor};
    } else {
      A = {LK::Split, q, L2.leftColor};
      B = {LK::Split, p + 1, L1.leftColor};
    }
  } else if (L1.kind == LK::Merge && L2.kind == LK::Split) {
    if (q == p) throw std::runtime_error("web: bubble pair is not an assoc site");
    if (q >= p + 1) {
      A = {LK::Split, q + 1, L2.leftColor};
      B = {LK::Merge, p, 0};
    } else {
      A = {LK::Split, q, L2.leftColor};
      B = {LK::Merge, p + 1, 0};
    }
  } else {
    if (q == p) throw std::runtime_error("web: eye pair is not an assoc site");
    if (q == p - 1 || q == p + 1)
      throw std::runtime_error("web: split and merge share an edge; not an assoc site");
    if (q >= p + 2) {
      A = {LK::Merge, q - 1, 0};
      B = {LK::Split, p, L1.leftColor};
    } else {
      A = {LK::Merge, q, 0};
      B = {LK::Split, p - 1, L1.leftColor};
    }
  }
  std::vector<WebLayer> ls = w.layers;
  ls[j] = A;
  ls[j + 1] = B;
  return make_web(w.bottom, ls);
}

// ---------- bimodule presentations ----------

WebPtr bimodule_of_web(const Web& w, int window) {
  // memoize by structure so separately built chains share bimodule objects;
  // map composition then lets pointer-checked composes cross call boundaries
  static std::map<std::string, WebPtr> memo;
  static std::mutex memoMutex;
  std::ostringstream key;
  key << window << ";";
  for (int p : w.bottom.parts) key << p << ",";
  for (auto& L : w.layers)
    key << (L.kind == LayerKind::Merge ? ";m" : ";s") << L.pos << "." << L.leftColor;
  {
    std::lock_guard<std::mutex> lk(memoMutex);
    auto it = memo.find(key.str());
    if (it != memo.end()) return it->second;
  }
  auto B = std::make_shared<WebBimodule>();
  B->web = w;
  B->window = window;
  auto& color = B->edgeColor;
  std::vector<int> slice;
  for (int p : w.bottom.parts) {
    slice.push_back((int)color.size());
    color.push_back(p);
  }
  B->bottomEdges = slice;
  for (auto& L : w.layers) {
    if (L.kind == LayerKind::Merge) {
      int ea = slice[L.pos], eb = slice[L.pos + 1];
      int ec = (int)color.size();
      color.push_back(color[ea] + color[eb]);
      B->vertices.push_back({L.kind, ea, eb, ec});
      slice[L.pos] = ec;
      slice.erase(slice.begin() + L.pos + 1);
    } else {
      int ec = slice[L.pos];
      int ea = (int)color.size();
      color.push_back(L.leftColor);
      int eb = (int)color.size();
      color.push_back(color[ec] - L.leftColor);
      B->vertices.push_back({L.kind, ea, eb, ec});
      slice[L.pos] = ea;
      slice.insert(slice.begin() + L.pos + 1, eb);
    }
  }
  B->topEdges = slice;
  B->nedges = (int)color.size();
  for (int c : color)
    if (c < 0) B->zero = true;
  B->edgeGenStart.assign(B->nedges, -1);
  if (!B->zero) {
    for (int e = 0; e < B->nedges; ++e) {
      if (color[e] <= 0) continue;
      B->edgeGenStart[e] = (int)B->gens.size();
      for (int j = 1; j <= color[e]; ++j) B->gens.emplace_back(e, j);
    }
    for (auto& v : B->vertices) {
      for (int t = 1; t <= color[v.coarse]; ++t) {
        EPoly rel = B->conv(v.left, v.right, t);
        epoly_acc(rel, B->edge_sym(v.coarse, t), Rational(-1));
        if (!rel.empty()) B->relations.push_back(std::move(rel));
      }
    }
    // solve each vertex's relations for the generators of an edge it creates:
    // merges eliminate the coarse edge, splits the left output. Creation
    // order makes the substitution cascade acyclic.
    B->genFree.assign(B->ngens(), 1);
    B->genElim.assign(B->ngens(), {});
    for (auto& v : B->vertices) {
      if (v.kind == LayerKind::Merge) {
        for (int t = 1; t <= color[v.coarse]; ++t) {
          int g = B->edgeGenStart[v.coarse] + t - 1;
          B->genElim[g] = B->rewrite(B->conv(v.left, v.right, t));
          B->genFree[g] = 0;
        }
      } else {
        int a = color[v.left], b = color[v.right];
        for (int t = 1; t <= a; ++t) {
          EPoly expr = B->rewrite(B->edge_sym(v.coarse, t));
          for (int p = 1; p < t; ++p) {
            EPoly cross = epoly_mul(B->genElim[B->edgeGenStart[v.left] + p - 1],
                                    B->edge_sym(v.right, t - p));
            epoly_acc(expr, cross, Rational(-1));
          }
          if (t <= b) epoly_acc(expr, B->edge_sym(v.right, t), Rational(-1));
          int g = B->edgeGenStart[v.left] + t - 1;
          B->genElim[g] = std::move(expr);
          B->genFree[g] = 0;
        }
        for (int t = a + 1; t <= a + b; ++t) {
          EPoly rel = B->rewrite(B->conv(v.left, v.right, t));
          epoly_acc(rel, B->rewrite(B->edge_sym(v.coarse, t)), Rational(-1));
          if (!rel.empty()) B->freeRelations.push_back(std::move(rel));
        }
      }
    }
  }
  {
    std::lock_guard<std::mutex> lk(memoMutex);
    auto [it, fresh] = memo.emplace(key.str(), B);
    if (!fresh) return it->second;
  }
  return B;
}

int WebBimodule::qdeg_of(const GMono& m) const {
  int d = 0;
  for (std::size_t g = 0; g < m.e.size(); ++g) d += 2 * gens[g].second * m.e[g];
  return d;
}

EPoly WebBimodule::gen_poly(int g) const {
  GMono m;
  m.e.assign(ngens(), 0);
  m.e[g] = 1;
  return {{m, Rational(1)}};
}

EPoly WebBimodule::edge_sym(int edge, int j) const {
  if (j == 0) return epoly_one(ngens());
  if (edge < 0 || edgeColor[edge] < j) return {};
  return gen_poly(edgeGenStart[edge] + j - 1);
}

EPoly WebBimodule::conv(int edgeA, int edgeB, int j) const {
  EPoly r;
  int ca = edgeA >= 0 ? edgeColor[edgeA] : 0, cb = edgeB >= 0 ? edgeColor[edgeB] : 0;
  for (int p = std::max(0, j - cb); p <= std::min(j, ca); ++p) {
    EPoly t = epoly_mul(edge_sym(edgeA, p), edge_sym(edgeB, j - p));
    epoly_acc(r, t, Rational(1));
  }
  return r;
}

std::vector<int> WebBimodule::boundary_gens(bool top) const {
  std::vector<int> out;
  for (int e : (top ? topEdges : bottomEdges)) {
    if (edgeGenStart[e] < 0) continue;
    for (int j = 1; j <= edgeColor[e]; ++j) out.push_back(edgeGenStart[e] + j - 1);
  }
  return out;
}

namespace {

// slots are (generator position, j weight); exponents land at the position
void enum_monos(const std::vector<std::pair<int, int>>& slots, int g, int rem, GMono& cur,
                std::vector<GMono>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  if (g == (int)slots.size()) return;
  int step = 2 * slots[g].second;
  for (int e = 0; e * step <= rem; ++e) {
    cur.e[slots[g].first] = (uint16_t)e;
    enum_monos(slots, g + 1, rem - e * step, cur, out);
  }
  cur.e[slots[g].first] = 0;
}

}  // namespace

EPoly WebBimodule::rewrite(const EPoly& p) const {
  EPoly out;
  for (auto& [m, c] : p) {
    GMono mf;
    mf.e.assign(ngens(), 0);
    std::vector<std::pair<int, int>> elim;
    for (std::size_t g = 0; g < m.e.size(); ++g) {
      if (!m.e[g]) continue;
      if (genFree[g])
        mf.e[g] = m.e[g];
      else
        elim.emplace_back((int)g, (int)m.e[g]);
    }
    EPoly acc{{mf, c}};
    for (auto [g, k] : elim) {
      EPoly pw;
      {
        std::lock_guard<std::mutex> lk(rewMu_);
        auto it = powCache_.find({g, k});
        if (it != powCache_.end()) {
          pw = it->second;
        } else {
          pw = genElim[g];
          for (int t = 1; t < k; ++t) pw = epoly_mul(pw, genElim[g]);
          powCache_[{g, k}] = pw;
        }
      }
      acc = epoly_mul(acc, pw);
    }
    epoly_acc(out, acc, Rational(1));
  }
  return out;
}

const WebPiece& WebBimodule::piece(int d) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  if (d > window) throw std::runtime_error("webs: degree outside window");
  WebPiece P;
  if (!zero && d >= 0 && d % 2 == 0) {
    std::vector<std::pair<int, int>> slots;
    for (int g = 0; g < ngens(); ++g)
      if (genFree[g]) slots.emplace_back(g, gens[g].second);
    GMono cur;
    cur.e.assign(ngens(), 0);
    enum_monos(slots, 0, d, cur, P.cols);
    std::sort(P.cols.begin(), P.cols.end());
    for (int i = 0; i < (int)P.cols.size(); ++i) P.colIndex[P.cols[i]] = i;
    SparseMat rows(0, (int)P.cols.size());
    for (auto& rel : freeRelations) {
      int qr = qdeg_of(rel.begin()->first);
      if (qr > d) continue;
      std::vector<GMono> mults;
      GMono c2;
      c2.e.assign(ngens(), 0);
      enum_monos(slots, 0, d - qr, c2, mults);
      for (auto& m : mults) {
        std::vector<std::pair<int, Rational>> row;
        for (auto& [rm, rv] : rel) row.emplace_back(P.colIndex.at(gmono_add(m, rm)), rv);
        std::sort(row.begin(), row.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        rows.row.push_back(std::move(row));
        ++rows.rows;
      }
    }
    P.rel = rref(rows);
    std::vector<char> pivot(P.cols.size(), 0);
    for (int c : P.rel.pivot_cols) pivot[c] = 1;
    for (int i = 0; i < (int)P.cols.size(); ++i)
      if (!pivot[i]) {
        P.basisIndex[P.cols[i]] = (int)P.basis.size();
        P.basis.push_back(P.cols[i]);
      }
  }
  return cache_.emplace(d, std::move(P)).first->second;
}

int WebBimodule::dim(int d) const { return (int)piece(d).basis.size(); }

std::vector<std::pair<int, Rational>> WebBimodule::reduce(const EPoly& p, int d) const {
  const WebPiece& P = piece(d);
  EPoly q = rewrite(p);
  std::vector<std::pair<int, Rational>> v;
  for (auto& [m, c] : q) {
    auto it = P.colIndex.find(m);
    if (it == P.colIndex.end()) throw std::runtime_error("webs: reduce degree mismatch");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  v = P.rel.reduce(std::move(v));
  std::vector<std::pair<int, Rational>> out;
  for (auto& [c, val] : v) out.emplace_back(P.basisIndex.at(P.cols[c]), val);
  return out;
}

std::string WebBimodule::dump() const {
  std::ostringstream os;
  os << "web bottom=" << web.bottom.str() << " top=" << web.top.str()
     << " qshift=" << web.qshift << "\n";
  os << "edges:";
  for (int e = 0; e < nedges; ++e) os << " " << e << ":c" << edgeColor[e];
  os << "\nvertices:\n";
  for (auto& v : vertices)
    os << (v.kind == LayerKind::Merge ? "  merge " : "  split ") << v.left << "," << v.right
       << " <-> " << v.coarse << "\n";
  os << "relations: " << relations.size() << "\n";
  for (int d = 0; d <= std::min(window, 8); d += 2) os << "dim[" << d << "]=" << dim(d) << " ";
  os << "\n";
  return os.str();
}

WebPtr horizontal_compose(const WebPtr& A, const WebPtr& B) {
  return bimodule_of_web(stack_webs(B->web, A->web), std::min(A->window, B->window));
}

// ---------- graded linear maps ----------

GradedLinearMap::GradedLinearMap()
    : cache(std::make_shared<std::map<int, SparseMat>>()), mu(std::make_shared<std::mutex>()) {}

EPoly GradedLinearMap::apply_poly(const EPoly& p) const {
  EPoly r;
  for (auto& [m, c] : p) epoly_acc(r, apply(m), c);
  return r;
}

const SparseMat& GradedLinearMap::matrix(int d) const {
  std::lock_guard<std::mutex> lk(*mu);
  auto it = cache->find(d);
  if (it != cache->end()) return it->second;
  const WebPiece& ps = src->piece(d);
  int dt = d + rawDeg;
  int tdim = dt >= 0 ? tgt->dim(dt) : 0;
  SparseMat M(tdim, (int)ps.basis.size());
  for (int j = 0; j < (int)ps.basis.size(); ++j) {
    EPoly im = apply(ps.basis[j]);
    if (im.empty()) continue;
    for (auto& [i, c] : tgt->reduce(im, dt)) M.add(i, j, c);
  }
  return cache->emplace(d, std::move(M)).first->second;
}

GradedLinearMap identity_map(const WebPtr& B) {
  GradedLinearMap f;
  f.src = f.tgt = B;
  f.rawDeg = 0;
  f.apply = [](const GMono& m) { return EPoly{{m, Rational(1)}}; };
  return f;
}

GradedLinearMap zero_map(const WebPtr& S, const WebPtr& T, int rawDeg) {
  GradedLinearMap f;
  f.src = S;
  f.tgt = T;
  f.rawDeg = rawDeg;
  f.apply = [](const GMono&) { return EPoly{}; };
  return f;
}

GradedLinearMap compose(const GradedLinearMap& g, const GradedLinearMap& f) {
  if (g.src != f.tgt) throw std::runtime_error("webs: compose source/target mismatch");
  GradedLinearMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.rawDeg = f.rawDeg + g.rawDeg;
  auto fa = f.apply, ga = g.apply;
  h.apply = [fa, ga](const GMono& m) {
    EPoly mid = fa(m), out;
    for (auto& [mm, c] : mid) epoly_acc(out, ga(mm), c);
    return out;
  };
  return h;
}

GradedLinearMap map_sum(const GradedLinearMap& f, const GradedLinearMap& g) {
  if (f.src != g.src || f.tgt != g.tgt || f.rawDeg != g.rawDeg)
    throw std::runtime_error("webs: map_sum shape mismatch");
  GradedLinearMap h = zero_map(f.src, f.tgt, f.rawDeg);
  auto fa = f.apply, ga = g.apply;
  h.apply = [fa, ga](const GMono& m) {
    EPoly r = fa(m);
    epoly_acc(r, ga(m), Rational(1));
    return r;
  };
  return h;
}

GradedLinearMap map_scale(const GradedLinearMap& f, const Rational& c) {
  GradedLinearMap h = zero_map(f.src, f.tgt, f.rawDeg);
  auto fa = f.apply;
  h.apply = [fa, c](const GMono& m) { return epoly_scaled(fa(m), c); };
  return h;
}

GradedLinearMap action_map(const WebPtr& B, bool leftSide, const EPoly& p) {
  auto bd = B->boundary_gens(leftSide);
  std::vector<char> ok(B->ngens(), 0);
  for (int g : bd) ok[g] = 1;
  int deg = -1;
  for (auto& [m, c] : p) {
    for (std::size_t g = 0; g < m.e.size(); ++g)
      if (m.e[g] && !ok[g])
        throw std::runtime_error("webs: action polynomial mentions non-boundary generators");
    int d = B->qdeg_of(m);
    if (deg < 0) deg = d;
    if (d != deg) throw std::runtime_error("webs: action polynomial not homogeneous");
  }
  GradedLinearMap f = zero_map(B, B, deg < 0 ? 0 : deg);
  f.apply = [p](const GMono& m) {
    EPoly r;
    for (auto& [pm, c] : p) r[gmono_add(pm, m)] = c;
    return r;
  };
  return f;
}

// ---------- generator maps ----------

namespace {

struct SiteInfo {
  bool isEye = false;
  int left = -1, right = -1;   // eye: split pair; bubble: lower through edges
  int upLeft = -1, upRight = -1;  // bubble: upper pair
  int mid = -1;                // eye: lower through edge; bubble: fat middle edge
  int eupper = -1;             // eye: upper through edge
  int c0 = -1;
  std::vector<int> mOfL, lOfM;  // -1 marks local edges of L
};

SiteInfo analyze_site(const WebBimodule& L, const WebBimodule& M, int j) {
  auto& ll = L.web.layers;
  auto& ml = M.web.layers;
  if (j < 0 || j + 1 >= (int)ll.size() || (int)ml.size() + 2 != (int)ll.size())
    throw std::runtime_error("webs: sites not matching");
  if (!(L.web.bottom == M.web.bottom)) throw std::runtime_error("webs: sites not matching");
  for (int t = 0; t < (int)ml.size(); ++t)
    if (!layers_equal(ml[t], ll[t < j ? t : t + 2]))
      throw std::runtime_error("webs: sites not matching");
  SiteInfo si;
  auto& vj = L.vertices[j];
  auto& vj1 = L.vertices[j + 1];
  if (vj.kind == LayerKind::Split && vj1.kind == LayerKind::Merge) {
    if (vj1.left != vj.left || vj1.right != vj.right)
      throw std::runtime_error("webs: sites not matching");
    si.isEye = true;
    si.left = vj.left;
    si.right = vj.right;
    si.mid = vj.coarse;
    si.eupper = vj1.coarse;
    si.c0 = vj.left;
  } else if (vj.kind == LayerKind::Merge && vj1.kind == LayerKind::Split) {
    if (vj1.coarse != vj.coarse || L.edgeColor[vj1.left] != L.edgeColor[vj.left])
      throw std::runtime_error("webs: sites not matching");
    si.isEye = false;
    si.left = vj.left;
    si.right = vj.right;
    si.mid = vj.coarse;
    si.upLeft = vj1.left;
    si.upRight = vj1.right;
    si.c0 = vj.coarse;
  } else {
    throw std::runtime_error("webs: sites not matching");
  }
  si.mOfL.assign(L.nedges, -1);
  si.lOfM.assign(M.nedges, -1);
  for (int e = 0; e < L.nedges; ++e) {
    if (e < si.c0)
      si.mOfL[e] = e;
    else if (e > si.c0 + 2)
      si.mOfL[e] = e - 3;
  }
  if (si.isEye) si.mOfL[si.eupper] = si.eupper >= si.c0 ? si.mOfL[si.mid] : -1;
  if (si.isEye && si.mOfL[si.eupper] < 0) throw std::runtime_error("webs: sites not matching");
  if (!si.isEye) {
    si.mOfL[si.upLeft] = si.mOfL[si.left];
    si.mOfL[si.upRight] = si.mOfL[si.right];
  }
  for (int e = 0; e < M.nedges; ++e) si.lOfM[e] = e < si.c0 ? e : e + 3;
  return si;
}

// ring homomorphism from per-edge images: each source edge maps to a target
// edge or to the convolution of a target pair
struct EdgeImage {
  int e1 = -1, e2 = -1;
};

GradedLinearMap ring_hom(const WebPtr& S, const WebPtr& T, const std::vector<EdgeImage>& img,
                         int rawDeg) {
  auto genImg = std::make_shared<std::vector<EPoly>>(S->ngens());
  for (int g = 0; g < S->ngens(); ++g) {
    auto [e, jj] = S->gens[g];
    const EdgeImage& ei = img[e];
    if (ei.e2 < 0)
      (*genImg)[g] = T->edge_sym(ei.e1, jj);
    else
      (*genImg)[g] = T->conv(ei.e1, ei.e2, jj);
  }
  GradedLinearMap f = zero_map(S, T, rawDeg);
  int nt = T->ngens();
  f.apply = [genImg, nt](const GMono& m) {
    EPoly r = epoly_one(nt);
    for (std::size_t g = 0; g < m.e.size(); ++g)
      for (int t = 0; t < m.e[g]; ++t) r = epoly_mul(r, (*genImg)[g]);
    return r;
  };
  return f;
}

std::vector<EdgeImage> images_from(const std::vector<int>& edgeMap) {
  std::vector<EdgeImage> img(edgeMap.size());
  for (std::size_t e = 0; e < edgeMap.size(); ++e) img[e] = {edgeMap[e], -1};
  return img;
}

// band data: a pair of source edges treated as one nested alphabet
struct BandSpec {
  std::vector<int> bandGen;     // source gen indices, block A then block B
  Composition I, J;
  int c1 = 0, c2 = 0;
};

BandSpec band_of(const WebBimodule& S, int eA, int eB) {
  BandSpec b;
  b.c1 = eA >= 0 ? S.edgeColor[eA] : 0;
  b.c2 = eB >= 0 ? S.edgeColor[eB] : 0;
  for (int j = 1; j <= b.c1; ++j) b.bandGen.push_back(S.edgeGenStart[eA] + j - 1);
  for (int j = 1; j <= b.c2; ++j) b.bandGen.push_back(S.edgeGenStart[eB] + j - 1);
  b.I = Composition{{b.c1, b.c2}};
  b.J = Composition{{b.c1 + b.c2}};
  return b;
}

// shared per-band-monomial memo for Demazure / Frobenius expansions
using BandCache = std::map<EMono, EPoly>;

GradedLinearMap band_map(const WebPtr& S, const WebPtr& T, const BandSpec& band,
                         const std::vector<int>& restGenMap, int rawDeg,
                         std::function<EPoly(const EMono&)> bandImage) {
  auto cache = std::make_shared<BandCache>();
  auto cmu = std::make_shared<std::mutex>();
  auto bg = band.bandGen;
  std::vector<char> isBand(S->ngens(), 0);
  for (int g : bg) isBand[g] = 1;
  GradedLinearMap f = zero_map(S, T, rawDeg);
  int nt = T->ngens();
  f.apply = [=](const GMono& m) {
    EMono bm;
    bm.e.assign(bg.size(), 0);
    for (std::size_t t = 0; t < bg.size(); ++t) bm.e[t] = m.e[bg[t]];
    GMono rest;
    rest.e.assign(nt, 0);
    for (std::size_t g = 0; g < m.e.size(); ++g) {
      if (isBand[g] || !m.e[g]) continue;
      if (restGenMap[g] < 0) throw std::runtime_error("webs: band factorization fails");
      rest.e[restGenMap[g]] += m.e[g];
    }
    EPoly bandPart;
    {
      std::lock_guard<std::mutex> lk(*cmu);
      auto it = cache->find(bm);
      if (it != cache->end())
        bandPart = it->second;
      else {
        bandPart = bandImage(bm);
        cache->emplace(bm, bandPart);
      }
    }
    EPoly out;
    for (auto& [bmm, c] : bandPart) out[gmono_add(bmm, rest)] = c;
    return out;
  };
  return f;
}

// gen index table: source gen -> target gen for the 1-1 part, -1 on band gens
std::vector<int> rest_map(const WebBimodule& S, const WebBimodule& T,
                          const std::vector<int>& edgeMap, const std::vector<char>& bandEdge) {
  std::vector<int> gm(S.ngens(), -1);
  for (int g = 0; g < S.ngens(); ++g) {
    auto [e, j] = S.gens[g];
    if (bandEdge[e]) continue;
    int te = edgeMap[e];
    if (te < 0) throw std::runtime_error("webs: band factorization fails");
    gm[g] = T.edgeGenStart[te] + j - 1;
  }
  return gm;
}

}  // namespace

GradedLinearMap generator_map(GenKind kind, WebSite site, const WebPtr& S, const WebPtr& T) {
  int j = site.layer;
  if (kind == GenKind::Assoc) {
    Web sw = assoc_swap(S->web, j);
    if (!(sw.bottom == T->web.bottom) || sw.layers.size() != T->web.layers.size())
      throw std::runtime_error("webs: sites not matching");
    for (std::size_t t = 0; t < sw.layers.size(); ++t)
      if (!layers_equal(sw.layers[t], T->web.layers[t]))
        throw std::runtime_error("webs: sites not matching");
    // local correspondence between the two creation blocks
    auto& v1 = S->vertices[j];
    auto& v2 = S->vertices[j + 1];
    auto& w1 = T->vertices[j];
    auto& w2 = T->vertices[j + 1];
    std::vector<EdgeImage> img(S->nedges);
    for (int e = 0; e < S->nedges; ++e) img[e] = {e, -1};
    auto created = [](const WebVertexInfo& v) {
      return v.kind == LayerKind::Merge ? std::vector<int>{v.coarse}
                                        : std::vector<int>{v.left, v.right};
    };
    auto c1 = created(v1), c2 = created(v2), d1 = created(w1), d2 = created(w2);
    bool overlap1 = v1.kind == LayerKind::Merge
                        ? (v2.kind == LayerKind::Merge &&
                           (v2.left == v1.coarse || v2.right == v1.coarse))
                        : (v2.kind == LayerKind::Merge
                               ? false
                               : (v2.coarse == v1.left || v2.coarse == v1.right));
    if (!overlap1) {
      // height exchange: first block pairs with the second of T and vice versa
      if (c1.size() != d2.size() || c2.size() != d1.size())
        throw std::runtime_error("webs: sites not matching");
      for (std::size_t t = 0; t < c1.size(); ++t) img[c1[t]] = {d2[t], -1};
      for (std::size_t t = 0; t < c2.size(); ++t) img[c2[t]] = {d1[t], -1};
    } else if (v1.kind == LayerKind::Merge) {
      // merge reassociation
      if (v2.left == v1.coarse) {
        // ((A,B),C) -> (A,(B,C)):  X -> conv(A,B), Y -> Y'
        img[v1.coarse] = {v1.left, v1.right};
        img[v2.coarse] = {w2.coarse, -1};
      } else {
        // (C,(A,B)) -> ((C,A),B)
        img[v1.coarse] = {v1.left, v1.right};
        img[v2.coarse] = {w2.coarse, -1};
      }
    } else {
      // split reassociation: S's intermediate maps to the conv of its refinement
      // identify leaves: S: D -> (v1.left, v1.right), one of them split by v2
      if (v2.coarse == v1.left) {
        // ((A,B),C): leaves A = v2.left, B = v2.right, C = v1.right
        // T: D -> (A', Z) -> (A', B', C'): A' = w1.left, B' = w2.left, C' = w2.right
        img[v2.left] = {w1.left, -1};
        img[v2.right] = {w2.left, -1};
        img[v1.right] = {w2.right, -1};
        img[v1.left] = {w1.left, w2.left};
      } else {
        // (A,(B,C)): A = v1.left, B = v2.left, C = v2.right
        // T: D -> (X, C') -> ((A', B'), C'): X = w1.left, C' = w1.right,
        //    A' = w2.left, B' = w2.right
        img[v1.left] = {w2.left, -1};
        img[v2.left] = {w2.right, -1};
        img[v2.right] = {w1.right, -1};
        img[v1.right] = {w2.right, w1.right};
      }
    }
    return ring_hom(S, T, img, 0);
  }

  if (kind == GenKind::Iota) {
    SiteInfo si = analyze_site(*T, *S, j);
    return ring_hom(S, T, images_from(si.lOfM), 0);
  }

  if (kind == GenKind::Mu) {
    SiteInfo si = analyze_site(*S, *T, j);
    if (si.isEye) throw std::runtime_error("webs: mu needs a bubble site");
    std::vector<EdgeImage> img(S->nedges);
    for (int e = 0; e < S->nedges; ++e) img[e] = {si.mOfL[e], -1};
    img[si.mid] = {si.mOfL[si.left], si.mOfL[si.right]};
    return ring_hom(S, T, img, 0);
  }

  if (kind == GenKind::Del) {
    SiteInfo si = analyze_site(*S, *T, j);
    if (si.isEye) {
      int c1 = S->edgeColor[si.left], c2 = S->edgeColor[si.right];
      int eT = si.mOfL[si.mid];
      if (c1 == 0 || c2 == 0) {
        std::vector<int> em = si.mOfL;
        em[si.left] = eT;
        em[si.right] = eT;
        return ring_hom(S, T, images_from(em), 0);
      }
      BandSpec band = band_of(*S, si.left, si.right);
      std::vector<char> be(S->nedges, 0);
      be[si.left] = be[si.right] = 1;
      auto rm = rest_map(*S, *T, si.mOfL, be);
      InvariantRing RI(band.I), RJ(band.J);
      auto I = band.I, J = band.J;
      int tstart = T->edgeGenStart[eT], nt = T->ngens();
      auto bandImage = [RI, RJ, I, J, tstart, nt](const EMono& bm) {
        Poly f = RI.realize(bm);
        Poly g = demazure_relative(I, J, f);
        EPoly out;
        for (auto& [em, c] : RJ.express(g)) {
          GMono t;
          t.e.assign(nt, 0);
          for (std::size_t u = 0; u < em.e.size(); ++u) t.e[tstart + u] = em.e[u];
          out[t] = c;
        }
        return out;
      };
      return band_map(S, T, band, rm, -2 * c1 * c2, bandImage);
    }
    // bubble site: trace the upper tensor factor
    int c1 = S->edgeColor[si.upLeft], c2 = S->edgeColor[si.upRight];
    int tA = si.mOfL[si.left], tB = si.mOfL[si.right];
    std::vector<int> em = si.mOfL;
    em[si.upLeft] = tA;
    em[si.upRight] = tB;
    if (c1 == 0 || c2 == 0) {
      std::vector<EdgeImage> img(S->nedges);
      for (int e = 0; e < S->nedges; ++e) img[e] = {em[e], -1};
      img[si.mid] = {tA, tB};
      return ring_hom(S, T, img, 0);
    }
    BandSpec band = band_of(*S, si.upLeft, si.upRight);
    std::vector<char> be(S->nedges, 0);
    be[si.upLeft] = be[si.upRight] = 1;
    // the fat middle edge maps through the convolution, not the 1-1 table
    std::vector<int> rm(S->ngens(), -1);
    std::vector<EdgeImage> cimg(S->nedges);
    for (int e = 0; e < S->nedges; ++e) cimg[e] = {em[e], -1};
    cimg[si.mid] = {tA, tB};
    for (int g = 0; g < S->ngens(); ++g) {
      auto [e, jj] = S->gens[g];
      if (be[e]) continue;
      if (e != si.mid && em[e] >= 0) rm[g] = T->edgeGenStart[em[e]] + jj - 1;
    }
    InvariantRing RI(band.I), RJ(band.J);
    auto I = band.I, J = band.J;
    auto Tb = T;
    int midStart = S->edgeGenStart[si.mid];
    int cmid = S->edgeColor[si.mid];
    auto bandImage = [RI, RJ, I, J, Tb, tA, tB](const EMono& bm) {
      Poly f = RI.realize(bm);
      Poly g = demazure_relative(I, J, f);
      EPoly out;
      for (auto& [em2, c] : RJ.express(g)) {
        EPoly term = epoly_one(Tb->ngens());
        for (std::size_t u = 0; u < em2.e.size(); ++u)
          for (int rep = 0; rep < em2.e[u]; ++rep)
            term = epoly_mul(term, Tb->conv(tA, tB, (int)u + 1));
        epoly_acc(out, term, c);
      }
      return out;
    };
    // fold the fat middle gens into the band handling: conv images commute with
    // the trace since they come from the base ring
    GradedLinearMap inner = band_map(S, T, band, rm, -2 * c1 * c2, bandImage);
    auto ia = inner.apply;
    GradedLinearMap f = zero_map(S, T, inner.rawDeg);
    f.apply = [ia, Tb, midStart, cmid, tA, tB](const GMono& m) {
      GMono base = m;
      EPoly midPart = epoly_one(Tb->ngens());
      for (int u = 0; u < cmid; ++u) {
        for (int rep = 0; rep < m.e[midStart + u]; ++rep)
          midPart = epoly_mul(midPart, Tb->conv(tA, tB, u + 1));
        base.e[midStart + u] = 0;
      }
      return epoly_mul(ia(base), midPart);
    };
    return f;
  }

  if (kind == GenKind::DeltaUp) {
    SiteInfo si = analyze_site(*T, *S, j);
    if (si.isEye) throw std::runtime_error("webs: delta needs a bubble site");
    int c1 = T->edgeColor[si.left], c2 = T->edgeColor[si.right];
    if (c1 == 0 || c2 == 0) return ring_hom(S, T, images_from(si.lOfM), 0);
    // band: the source through edges, which keep their ids in T as the lower pair
    BandSpec band = band_of(*S, si.left, si.right);
    std::vector<char> be(S->nedges, 0);
    be[si.left] = be[si.right] = 1;
    auto rm = rest_map(*S, *T, si.lOfM, be);
    InvariantRing RI(band.I);
    const FrobeniusData& fd = frobenius(band.I, band.J);
    // tables: basis elements over the upper pair, duals handled per monomial
    int loA = T->edgeGenStart[si.left], loB = T->edgeGenStart[si.right];
    int upA = T->edgeGenStart[si.upLeft], upB = T->edgeGenStart[si.upRight];
    auto emb = [c1, c2](int start1, int start2, const EMono& em, GMono& t) {
      for (int u = 0; u < c1; ++u) t.e[start1 + u] += em.e[u];
      for (int u = 0; u < c2; ++u) t.e[start2 + u] += em.e[c1 + u];
    };
    std::vector<std::vector<std::pair<EMono, Rational>>> topTerms(fd.basis.size());
    for (std::size_t t = 0; t < fd.basis.size(); ++t)
      for (auto& [em, c] : RI.express(fd.basis[t])) topTerms[t].emplace_back(em, c);
    int nt = T->ngens();
    auto fdp = &fd;
    auto bandImage = [RI, fdp, topTerms, emb, loA, loB, upA, upB, nt](const EMono& bm) {
      Poly mpoly = RI.realize(bm);
      EPoly out;
      for (std::size_t t = 0; t < fdp->dual.size(); ++t) {
        auto bot = RI.express(fdp->dual[t] * mpoly);
        for (auto& [emTop, cTop] : topTerms[t])
          for (auto& [emBot, cBot] : bot) {
            GMono g;
            g.e.assign(nt, 0);
            emb(upA, upB, emTop, g);
            emb(loA, loB, emBot, g);
            auto& slot = out[g];
            slot += cTop * cBot;
            if (slot == 0) out.erase(g);
          }
      }
      return out;
    };
    return band_map(S, T, band, rm, 2 * c1 * c2, bandImage);
  }
  throw std::runtime_error("webs: unknown generator map kind");
}

// ---------- extension by identity webs ----------

GradedLinearMap extend_map(const GradedLinearMap& f, const Web& below, const Web& above,
                           int window) {
  const WebBimodule& MS = *f.src;
  const WebBimodule& MT = *f.tgt;
  WebPtr bigS = bimodule_of_web(stack_webs(stack_webs(below, MS.web), above), window);
  WebPtr bigT = bimodule_of_web(stack_webs(stack_webs(below, MT.web), above), window);
  // replay the lower region to find the interface slice (same for S and T)
  int nb = (int)below.bottom.parts.size();
  std::vector<int> slice;
  int counter = 0;
  for (int t = 0; t < nb; ++t) slice.push_back(counter++);
  for (auto& L : below.layers) {
    if (L.kind == LayerKind::Merge) {
      slice[L.pos] = counter++;
      slice.erase(slice.begin() + L.pos + 1);
    } else {
      slice[L.pos] = counter++;
      slice.insert(slice.begin() + L.pos + 1, counter++);
    }
  }
  int B0 = counter;  // creation counter at the interface
  // mid edge id -> big edge id (same table for S and T webs up front)
  auto midToBig = [&](const WebBimodule& mid) {
    std::vector<int> m2b(mid.nedges, -1);
    int mb = (int)mid.bottomEdges.size();
    for (int t = 0; t < mb; ++t) m2b[mid.bottomEdges[t]] = slice[t];
    for (int e = mb; e < mid.nedges; ++e) m2b[e] = B0 + (e - mb);
    return m2b;
  };
  std::vector<int> s2big = midToBig(MS), t2big = midToBig(MT);
  int sMid = MS.nedges - (int)MS.bottomEdges.size();
  int tMid = MT.nedges - (int)MT.bottomEdges.size();
  // big S edge -> mid S edge, and big S edge -> big T edge for the outer region
  std::vector<int> big2midS(bigS->nedges, -1), big2bigT(bigS->nedges, -1);
  for (int e = 0; e < MS.nedges; ++e) big2midS[s2big[e]] = e;
  for (int e = 0; e < bigS->nedges; ++e) {
    if (big2midS[e] >= 0) continue;
    big2bigT[e] = e < B0 + sMid ? e : e - sMid + tMid;
  }
  // gen tables
  std::vector<int> gS2mid(bigS->ngens(), -1), gS2T(bigS->ngens(), -1);
  for (int g = 0; g < bigS->ngens(); ++g) {
    auto [e, jj] = bigS->gens[g];
    if (big2midS[e] >= 0)
      gS2mid[g] = MS.edgeGenStart[big2midS[e]] + jj - 1;
    else
      gS2T[g] = bigT->edgeGenStart[big2bigT[e]] + jj - 1;
  }
  std::vector<int> gMid2T(MT.ngens(), -1);
  for (int g = 0; g < MT.ngens(); ++g) {
    auto [e, jj] = MT.gens[g];
    gMid2T[g] = bigT->edgeGenStart[t2big[e]] + jj - 1;
  }
  auto fa = f.apply;
  int nMid = MS.ngens(), nBigT = bigT->ngens();
  GradedLinearMap h = zero_map(bigS, bigT, f.rawDeg);
  h.apply = [fa, gS2mid, gS2T, gMid2T, nMid, nBigT](const GMono& m) {
    EMono midM;
    midM.e.assign(nMid, 0);
    GMono rest;
    rest.e.assign(nBigT, 0);
    for (std::size_t g = 0; g < m.e.size(); ++g) {
      if (!m.e[g]) continue;
      if (gS2mid[g] >= 0)
        midM.e[gS2mid[g]] += m.e[g];
      else
        rest.e[gS2T[g]] += m.e[g];
    }
    EPoly im = fa(midM), out;
    for (auto& [mm, c] : im) {
      GMono t = rest;
      for (std::size_t g = 0; g < mm.e.size(); ++g) t.e[gMid2T[g]] += mm.e[g];
      out[t] = c;
    }
    return out;
  };
  return h;
}

// ---------- crossing differentials between ladder terms ----------

namespace {

struct LadderChain {
  std::vector<WebPtr> webs;
  std::vector<GradedLinearMap> fwd;  // steps in the dplus direction
};

std::vector<std::vector<WebLayer>> ladder_stage_layers(int k, int l, int i, int off) {
  using LK = LayerKind;
  int a = l - i, b = k - i, K1 = k + l - i - 1;
  auto Sp = [off](int pos, int c) { return WebLayer{LK::Split, pos + off, c}; };
  auto Mg = [off](int pos) { return WebLayer{LK::Merge, pos + off, 0}; };
  return {
      {Sp(1, a), Mg(0), Sp(0, l), Mg(1)},                                            // X1 = W_i
      {Sp(1, a), Sp(1, a - 1), Mg(1), Mg(0), Sp(0, l), Mg(1)},                       // X2p
      {Sp(1, a), Sp(1, a - 1), Mg(1), Mg(0), Sp(0, l), Sp(1, b - 1), Mg(1), Mg(1)},  // X2
      {Sp(1, a - 1), Sp(2, 1), Mg(1), Mg(0), Sp(0, l), Sp(1, b - 1), Mg(1), Mg(1)},  // Y1
      {Sp(1, a - 1), Sp(2, 1), Mg(0), Mg(0), Sp(0, l), Sp(1, b - 1), Mg(1), Mg(1)},  // Y2
      {Sp(1, a - 1), Sp(2, 1), Mg(0), Mg(0), Sp(0, K1), Sp(0, l), Mg(1), Mg(1)},     // Y3
      {Sp(1, a - 1), Sp(2, 1), Mg(0), Mg(0), Sp(0, K1), Sp(0, l), Mg(2), Mg(1)},     // X3
      {Sp(1, a - 1), Sp(2, 1), Mg(0), Sp(0, l), Mg(2), Mg(1)},                       // X4
      {Sp(1, a - 1), Sp(2, 1), Mg(0), Mg(1), Sp(0, l), Mg(1)},                       // X45
      {Sp(1, a - 1), Sp(2, 1), Mg(2), Mg(0), Sp(0, l), Mg(1)},                       // X5e
      {Sp(1, a - 1), Mg(0), Sp(0, l), Mg(1)},                                        // X5 = W_{i+1}
      {Sp(1, a), Mg(0), Sp(0, l), Sp(1, b - 1), Mg(1), Mg(1)},                       // X2pp
  };
}

}  // namespace

GradedLinearMap ladder_dplus_at(const Composition& bot, int p, int i, int window) {
  int k = bot.parts.at(p), l = bot.parts.at(p + 1);
  if (i < 0 || i + 1 > std::min(k, l)) throw std::runtime_error("webs: bad ladder differential");
  auto ls = ladder_stage_layers(k, l, i, p);
  std::vector<WebPtr> W;
  for (auto& lay : ls) W.push_back(bimodule_of_web(make_web(bot, lay), window));
  using GK = GenKind;
  std::vector<GradedLinearMap> steps = {
      generator_map(GK::Iota, {1}, W[0], W[1]),  generator_map(GK::Iota, {5}, W[1], W[2]),
      generator_map(GK::Assoc, {0}, W[2], W[3]), generator_map(GK::Assoc, {2}, W[3], W[4]),
      generator_map(GK::Assoc, {4}, W[4], W[5]), generator_map(GK::Assoc, {6}, W[5], W[6]),
      generator_map(GK::Mu, {3}, W[6], W[7]),    generator_map(GK::Assoc, {3}, W[7], W[8]),
      generator_map(GK::Assoc, {2}, W[8], W[9]), generator_map(GK::Del, {1}, W[9], W[10]),
  };
  GradedLinearMap d = steps[0];
  for (std::size_t t = 1; t < steps.size(); ++t) d = compose(steps[t], d);
  if (d.rawDeg != -2 * i) throw std::runtime_error("webs: dplus degree check failed");
  return d;
}

GradedLinearMap ladder_dminus_at(const Composition& bot, int p, int i, int window) {
  int k = bot.parts.at(p), l = bot.parts.at(p + 1);
  if (i < 0 || i + 1 > std::min(k, l)) throw std::runtime_error("webs: bad ladder differential");
  auto ls = ladder_stage_layers(k, l, i, p);
  std::vector<WebPtr> W;
  for (auto& lay : ls) W.push_back(bimodule_of_web(make_web(bot, lay), window));
  using GK = GenKind;
  std::vector<GradedLinearMap> steps = {
      generator_map(GK::Iota, {1}, W[10], W[9]),    generator_map(GK::Assoc, {2}, W[9], W[8]),
      generator_map(GK::Assoc, {3}, W[8], W[7]),    generator_map(GK::DeltaUp, {3}, W[7], W[6]),
      generator_map(GK::Assoc, {6}, W[6], W[5]),    generator_map(GK::Assoc, {4}, W[5], W[4]),
      generator_map(GK::Assoc, {2}, W[4], W[3]),    generator_map(GK::Assoc, {0}, W[3], W[2]),
      generator_map(GK::Del, {1}, W[2], W[11]),     generator_map(GK::Del, {3}, W[11], W[0]),
  };
  GradedLinearMap d = steps[0];
  for (std::size_t t = 1; t < steps.size(); ++t) d = compose(steps[t], d);
  if (d.rawDeg != 2 * i + 2) throw std::runtime_error("webs: dminus degree check failed");
  return d;
}

GradedLinearMap ladder_dplus(int k, int l, int i, int window) {
  return ladder_dplus_at(Composition{{k, l}}, 0, i, window);
}

GradedLinearMap ladder_dminus(int k, int l, int i, int window) {
  return ladder_dminus_at(Composition{{k, l}}, 0, i, window);
}

GradedLinearMap mult_map(const WebPtr& B, const EPoly& p) {
  int deg = -1;
  for (auto& [m, c] : p) {
    int d = B->qdeg_of(m);
    if (deg < 0) deg = d;
    if (d != deg) throw std::runtime_error("webs: multiplier not homogeneous");
  }
  GradedLinearMap f = zero_map(B, B, deg < 0 ? 0 : deg);
  f.apply = [p](const GMono& m) {
    EPoly r;
    for (auto& [pm, c] : p) r[gmono_add(pm, m)] = c;
    return r;
  };
  return f;
}

EPoly realize_on_edge_pair(const WebBimodule& B, int eL, int eR, const Poly& f) {
  Composition I{{B.edgeColor[eL], B.edgeColor[eR]}};
  InvariantRing RI(I);
  int c1 = I.parts[0];
  EPoly out;
  for (auto& [em, c] : RI.express(f)) {
    GMono g;
    g.e.assign(B.ngens(), 0);
    for (int u = 0; u < c1; ++u) g.e[B.edgeGenStart[eL] + u] += em.e[u];
    for (int u = c1; u < (int)em.e.size(); ++u) g.e[B.edgeGenStart[eR] + (u - c1)] += em.e[u];
    out[g] = c;
  }
  return out;
}

}  // namespace hb
