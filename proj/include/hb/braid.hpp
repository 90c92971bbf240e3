#pragma once
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include "hb/rings.hpp"

namespace hb {

// braid words in the handlebody braid group B_{g,n}: twist generators t1..tg
// for the cores, braid generators s1..s(n-1) for the link strands

enum class Gen { Sigma, Tau };

struct BraidLetter {
  Gen kind;
  int index;  // 1-based
  int exp;    // +1 or -1
  bool operator==(const BraidLetter& o) const = default;
};

struct BraidWord {
  int genus = 0;
  int strands = 0;
  std::vector<BraidLetter> letters;
  bool operator==(const BraidWord& o) const = default;
};

struct Coloring {
  int coreColor = 1;
  std::vector<int> linkColors;
  bool operator==(const Coloring& o) const = default;
};

struct ClassicalLetter {
  int index;  // 1-based
  int exp;
  bool operator==(const ClassicalLetter& o) const = default;
};

struct ClassicalBraidWord {
  int strands = 0;
  std::vector<ClassicalLetter> letters;
  bool operator==(const ClassicalBraidWord& o) const = default;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BraidWord parse_braid(const std::string& text, int g, int n);
std::string print_braid(const BraidWord& b);
std::string braid_to_json_str(const BraidWord& b);
BraidWord braid_from_json_str(const std::string& s);

BraidWord free_reduce(const BraidWord& b);
BraidWord inverse_word(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);

ClassicalBraidWord embed_classical(const BraidWord& b);
ClassicalBraidWord classical_inverse(const ClassicalBraidWord& w);
ClassicalBraidWord classical_concat(const ClassicalBraidWord& a, const ClassicalBraidWord& b);

BraidWord markov_conjugate(const BraidWord& b, const BraidWord& s);
BraidWord stabilize(const BraidWord& b, int sign);
Coloring stabilized_coloring(const Coloring& c);

// permutation induced on the n link strands (cores return to place)
Perm link_permutation(const BraidWord& b);
bool balanced(const BraidWord& b, const Coloring& c);

// (w, W): color-weighted and color-square-weighted signed crossing counts
std::pair<int, int> writhe_stats(const BraidWord& b, const Coloring& c);

// Garside left-greedy normal form of a classical braid word; the word
// problem oracle used to validate the handlebody relations
struct GarsideNF {
  int strands = 0;
  int delta = 0;
  std::vector<Perm> factors;
  bool operator==(const GarsideNF& o) const = default;
};

GarsideNF garside_nf(const ClassicalBraidWord& w);
bool classical_equal(const ClassicalBraidWord& a, const ClassicalBraidWord& b);

}
