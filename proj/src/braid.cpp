#include "hb/braid.hpp"
#include <algorithm>
#include <sstream>
#include "json.hpp"

namespace hb {

static void validate_letter(const BraidLetter& l, int g, int n) {
  if (l.exp != 1 && l.exp != -1) throw ParseError("exponent must be +1 or -1");
  if (l.kind == Gen::Sigma) {
    if (l.index < 1 || l.index > n - 1)
      throw ParseError("braid generator index " + std::to_string(l.index) + " out of range for " +
                       std::to_string(n) + " strands");
  } else {
    if (l.index < 1 || l.index > g)
      throw ParseError("twist generator index " + std::to_string(l.index) + " out of range for genus " +
                       std::to_string(g));
  }
}

BraidWord parse_braid(const std::string& text, int g, int n) {
  if (g < 0 || n < 0) throw ParseError("genus and strand count must be nonnegative");
  BraidWord b;
  b.genus = g;
  b.strands = n;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    BraidLetter l;
    if (tok[0] == 's') l.kind = Gen::Sigma;
    else if (tok[0] == 't') l.kind = Gen::Tau;
    else throw ParseError("bad token '" + tok + "'");
    std::size_t p = 1;
    std::size_t q = p;
    while (q < tok.size() && isdigit((unsigned char)tok[q])) ++q;
    if (q == p) throw ParseError("bad token '" + tok + "': missing index");
    l.index = std::stoi(tok.substr(p, q - p));
    l.exp = 1;
    if (q < tok.size()) {
      if (tok.substr(q) != "^-1") throw ParseError("bad token '" + tok + "': only ^-1 suffix allowed");
      l.exp = -1;
    }
    validate_letter(l, g, n);
    b.letters.push_back(l);
  }
  return b;
}

std::string print_braid(const BraidWord& b) {
  std::ostringstream os;
  bool first = true;
  for (auto& l : b.letters) {
    if (!first) os << " ";
    os << (l.kind == Gen::Sigma ? "s" : "t") << l.index;
    if (l.exp == -1) os << "^-1";
    first = false;
  }
  return os.str();
}

std::string braid_to_json_str(const BraidWord& b) {
  nlohmann::json j;
  j["genus"] = b.genus;
  j["strands"] = b.strands;
  j["letters"] = nlohmann::json::array();
  for (auto& l : b.letters)
    j["letters"].push_back({{"kind", l.kind == Gen::Sigma ? "s" : "t"},
                            {"index", l.index},
                            {"exp", l.exp}});
  return j.dump();
}

BraidWord braid_from_json_str(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad braid json: ") + e.what());
  }
  BraidWord b;
  try {
    b.genus = j.at("genus").get<int>();
    b.strands = j.at("strands").get<int>();
    for (auto& jl : j.at("letters")) {
      BraidLetter l;
      std::string k = jl.at("kind").get<std::string>();
      if (k == "s") l.kind = Gen::Sigma;
      else if (k == "t") l.kind = Gen::Tau;
      else throw ParseError("bad kind '" + k + "'");
      l.index = jl.at("index").get<int>();
      l.exp = jl.at("exp").get<int>();
      validate_letter(l, b.genus, b.strands);
      b.letters.push_back(l);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad braid json: ") + e.what());
  }
  return b;
}

BraidWord free_reduce(const BraidWord& b) {
  BraidWord r;
  r.genus = b.genus;
  r.strands = b.strands;
  for (auto& l : b.letters) {
    if (!r.letters.empty()) {
      auto& p = r.letters.back();
      if (p.kind == l.kind && p.index == l.index && p.exp == -l.exp) {
        r.letters.pop_back();
        continue;
      }
    }
    r.letters.push_back(l);
  }
  return r;
}

BraidWord inverse_word(const BraidWord& b) {
  BraidWord r;
  r.genus = b.genus;
  r.strands = b.strands;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    r.letters.push_back({it->kind, it->index, -it->exp});
  return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.genus != b.genus || a.strands != b.strands)
    throw std::runtime_error("concat: group mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

ClassicalBraidWord embed_classical(const BraidWord& b) {
  ClassicalBraidWord w;
  int g = b.genus;
  w.strands = g + b.strands;
  for (auto& l : b.letters) {
    if (l.kind == Gen::Sigma) {
      w.letters.push_back({g + l.index, l.exp});
    } else {
      // the first link strand walks over the cores above index j, wraps core j
      // twice with the sign of the twist, and walks back; the literal inverse
      // of the positive word has the same walk with the wrap sign flipped
      int j = l.index;
      for (int i = g; i > j; --i) w.letters.push_back({i, 1});
      w.letters.push_back({j, l.exp});
      w.letters.push_back({j, l.exp});
      for (int i = j + 1; i <= g; ++i) w.letters.push_back({i, -1});
    }
  }
  return w;
}

ClassicalBraidWord classical_inverse(const ClassicalBraidWord& w) {
  ClassicalBraidWord r;
  r.strands = w.strands;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->index, -it->exp});
  return r;
}

ClassicalBraidWord classical_concat(const ClassicalBraidWord& a, const ClassicalBraidWord& b) {
  if (a.strands != b.strands) throw std::runtime_error("classical_concat: strand mismatch");
  ClassicalBraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord markov_conjugate(const BraidWord& b, const BraidWord& s) {
  if (b.genus != s.genus || b.strands != s.strands)
    throw std::runtime_error("markov_conjugate: group mismatch");
  for (auto& l : s.letters)
    if (l.kind == Gen::Tau)
      throw std::runtime_error("markov_conjugate: conjugating word must avoid twist generators");
  return concat(concat(s, b), inverse_word(s));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (b.strands == 0) throw std::runtime_error("stabilize: no strand to stabilize on");
  if (sign != 1 && sign != -1) throw std::runtime_error("stabilize: sign must be +1 or -1");
  BraidWord r = b;
  r.strands = b.strands + 1;
  r.letters.push_back({Gen::Sigma, b.strands, sign});
  return r;
}

Coloring stabilized_coloring(const Coloring& c) {
  if (c.linkColors.empty()) throw std::runtime_error("stabilized_coloring: no strands");
  Coloring r = c;
  r.linkColors.push_back(c.linkColors.back());
  return r;
}

Perm link_permutation(const BraidWord& b) {
  Perm p = perm_identity(b.strands);
  // letters act top to bottom; track where each position's strand goes
  for (auto& l : b.letters)
    if (l.kind == Gen::Sigma) {
      p = perm_compose(perm_transposition(b.strands, l.index - 1), p);
    }
  return p;
}

bool balanced(const BraidWord& b, const Coloring& c) {
  if ((int)c.linkColors.size() != b.strands) return false;
  Perm p = link_permutation(b);
  for (int i = 0; i < b.strands; ++i)
    if (c.linkColors[p[i]] != c.linkColors[i]) return false;
  return true;
}

std::pair<int, int> writhe_stats(const BraidWord& b, const Coloring& c) {
  if (!balanced(b, c)) throw std::runtime_error("writhe_stats: coloring is not balanced");
  ClassicalBraidWord w = embed_classical(b);
  std::vector<int> col(w.strands);
  for (int i = 0; i < b.genus; ++i) col[i] = c.coreColor;
  for (int i = 0; i < b.strands; ++i) col[b.genus + i] = c.linkColors[i];
  std::map<int, long long> net;
  for (auto& l : w.letters) {
    int i = l.index - 1;
    if (col[i] == col[i + 1]) net[col[i]] += l.exp;
    std::swap(col[i], col[i + 1]);
  }
  long long wsum = 0, Wsum = 0;
  for (auto& [k, v] : net) {
    wsum += (long long)k * v;
    Wsum += (long long)k * k * v;
  }
  return {(int)wsum, (int)Wsum};
}

// ---------- Garside normal form ----------

namespace {

bool left_descent(const Perm& w, int i) {
  Perm wi = perm_inverse(w);
  return wi[i] > wi[i + 1];
}

bool right_descent(const Perm& w, int i) { return w[i] > w[i + 1]; }

// make the pair (a, b) left-weighted; returns true if anything moved
bool fix_pair(Perm& a, Perm& b, int n) {
  bool moved = false;
  for (;;) {
    int found = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (left_descent(b, i) && !right_descent(a, i)) { found = i; break; }
    if (found < 0) return moved;
    Perm s = perm_transposition(n, found);
    a = perm_compose(a, s);
    b = perm_compose(s, b);
    moved = true;
  }
}

}  // namespace

GarsideNF garside_nf(const ClassicalBraidWord& w) {
  int n = w.strands;
  GarsideNF nf;
  nf.strands = n;
  Perm w0 = longest_element(Composition{{n}});
  auto tau = [&](const Perm& p) { return perm_compose(w0, perm_compose(p, w0)); };

  auto normalize = [&]() {
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i)
        if (fix_pair(nf.factors[i], nf.factors[i + 1], n)) moved = true;
      nf.factors.erase(std::remove(nf.factors.begin(), nf.factors.end(), perm_identity(n)),
                       nf.factors.end());
    }
    while (!nf.factors.empty() && nf.factors.front() == w0) {
      nf.factors.erase(nf.factors.begin());
      nf.delta += 1;
    }
  };

  for (auto& l : w.letters) {
    Perm s = perm_transposition(n, l.index - 1);
    if (l.exp == 1) {
      nf.factors.push_back(s);
    } else {
      // sigma^-1 = Delta^-1 (Delta sigma^-1), the latter a permutation braid
      nf.delta -= 1;
      for (auto& f : nf.factors) f = tau(f);
      nf.factors.push_back(perm_compose(w0, s));
    }
    normalize();
  }
  normalize();
  return nf;
}

bool classical_equal(const ClassicalBraidWord& a, const ClassicalBraidWord& b) {
  if (a.strands != b.strands) return false;
  return garside_nf(a) == garside_nf(b);
}

}
