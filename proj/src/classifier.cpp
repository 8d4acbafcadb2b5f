// classifier.cpp

#include "fo2alt/classifier.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace fo2alt {

const char* universe_name(Universe u) {
  switch (u) {
    case Universe::Infty: return "infty";
    case Universe::Omega: return "omega";
    case Universe::Star: return "star";
  }
  return "?";
}

Classification classify(const RecognizedLanguage& l, Universe universe) {
  Classification c;
  c.universe = universe;

  // Check the universe against the content through an alphabetic recognizer,
  // where (s,1) pairs are exactly the finite words.
  {
    RecognizedLanguage a = make_alphabetic(l);
    bool has_finite = false, has_infinite = false;
    for (const LinkedPair& p : a.accept_pairs())
      (p.e == a.monoid.neutral ? has_finite : has_infinite) = true;
    if (universe == Universe::Omega && has_finite)
      throw input_error("universe omega requires an empty finite part");
    if (universe == Universe::Star && has_infinite)
      throw input_error("universe star requires an empty infinite part");
  }

  RecognizedLanguage syn = syntactic_quotient(l);
  c.syntactic_size = syn.monoid.size;

  const MinLevelResult ml = min_level(syn.monoid);
  c.fo2_definable = is_in_DA(syn.monoid);
  if (!c.fo2_definable) {
    c.diagnostic = "syntactic monoid is not in DA";
    return c;
  }
  c.monoid_min_level = ml.level;
  if (!ml.level) {
    c.diagnostic = ml.diagnostic;
    return c;
  }

  if (universe == Universe::Star) {
    c.level = *ml.level;
    return c;
  }

  RecognizedLanguage alpha = make_alphabetic(syn);
  const bool omega = universe == Universe::Omega;
  const OpenResult cantor =
      is_open(alpha, omega ? TopologyKind::CantorOmega : TopologyKind::CantorInfty);
  const OpenResult alphab =
      is_open(alpha, omega ? TopologyKind::AlphabeticOmega : TopologyKind::AlphabeticInfty);
  c.cantor_open = cantor.open;
  c.alphabetic_open = alphab.open;
  c.cantor_witness = cantor.witness;
  c.alphabetic_witness = alphab.witness;

  for (int m = *ml.level;; ++m) {
    if (m == 1 && !cantor.open) continue;
    if (m == 2 && !alphab.open) continue;
    c.level = m;
    return c;
  }
}

namespace {

// Deterministic subword matcher: greedy prefix matching decides containment.
struct SubwordMatcher {
  const std::string& pattern;
  int advance(int k, char c) const {
    return (k < static_cast<int>(pattern.size()) && pattern[k] == c) ? k + 1 : k;
  }
  bool complete(int k) const { return k == static_cast<int>(pattern.size()); }
};

// Length-lexicographically least finite word of the language that has none of
// the kept words as a subword, or nothing when the kept set's upward closure
// covers the finite part.
std::optional<std::string> least_uncovered(const RecognizedLanguage& l,
                                           const std::vector<std::string>& kept) {
  const OrderedMonoid& m = l.monoid;
  const std::string alphabet = l.alphabet();
  std::vector<SubwordMatcher> matchers;
  matchers.reserve(kept.size());
  for (const std::string& u : kept) matchers.push_back({u});

  // Product of the monoid-as-DFA with the matchers.
  size_t space = m.size;
  for (const std::string& u : kept) {
    space *= u.size() + 1;
    if (space > 4'000'000)
      throw resource_error("minimal-subword search state space too large");
  }

  struct Node {
    int elem;
    std::vector<int> match;
    bool operator==(const Node&) const = default;
  };
  struct NodeHash {
    size_t operator()(const Node& n) const {
      size_t h = std::hash<int>()(n.elem);
      for (int k : n.match) h = h * 1000003 + static_cast<size_t>(k);
      return h;
    }
  };

  Node start{m.neutral, std::vector<int>(kept.size(), 0)};
  auto uncovered = [&](const Node& n) {
    for (size_t i = 0; i < matchers.size(); ++i)
      if (matchers[i].complete(n.match[i])) return false;
    return true;
  };
  auto is_final = [&](const Node& n) {
    return l.accepts(n.elem, m.neutral) && uncovered(n);
  };

  std::unordered_map<Node, std::pair<Node, char>, NodeHash> parent;
  std::queue<Node> bfs;
  parent.emplace(start, std::make_pair(start, '\0'));
  bfs.push(start);
  while (!bfs.empty()) {
    Node n = bfs.front();
    bfs.pop();
    if (is_final(n)) {
      std::string word;
      Node cur = n;
      while (true) {
        auto [prev, c] = parent.at(cur);
        if (c == '\0') break;
        word.push_back(c);
        cur = prev;
      }
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (char ch : alphabet) {
      Node next{m.prod(n.elem, m.letters.at(ch)), n.match};
      for (size_t i = 0; i < matchers.size(); ++i)
        next.match[i] = matchers[i].advance(n.match[i], ch);
      if (!uncovered(next)) continue;  // already covered, prune
      if (parent.emplace(next, std::make_pair(n, ch)).second) bfs.push(next);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> minimal_subwords(const RecognizedLanguage& l) {
  std::vector<std::string> kept;
  while (true) {
    std::optional<std::string> w = least_uncovered(l, kept);
    if (!w) return kept;
    kept.push_back(*w);
    if (kept.size() > 64)
      throw resource_error("minimal subword set exceeds 64 words");
  }
}

FormulaPtr subword_formula(const std::string& u) {
  if (u.empty()) return Formula::truth();
  // E x (a1(x) & E y (x<y & a2(y) & E x (y<x & a3(x) & ...))), variables
  // alternating from the outside in.
  FormulaPtr inner;
  for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i) {
    const Var cur = i % 2 == 0 ? Var::X : Var::Y;
    const Var prev = i % 2 == 0 ? Var::Y : Var::X;
    FormulaPtr body = Formula::letter_at(cur, u[i]);
    if (inner) body = Formula::conj(body, inner);
    if (i > 0) body = Formula::conj(Formula::var_lt(prev, cur), body);
    inner = Formula::exists(cur, body);
  }
  return inner;
}

SynthesisResult synthesize_sigma21_formula(const RecognizedLanguage& l) {
  const Classification c = classify(l, Universe::Infty);
  if (!c.level || *c.level != 1)
    throw input_error(std::string("synthesis needs a level-1 language; got ") +
                      (c.level ? "level " + std::to_string(*c.level)
                               : "no level (" + c.diagnostic + ")"));

  const RecognizedLanguage syn = syntactic_quotient(l);
  SynthesisResult res;
  res.minimal_words = minimal_subwords(syn);

  FormulaPtr f;
  for (const std::string& u : res.minimal_words) {
    FormulaPtr g = subword_formula(u);
    f = f ? Formula::disj(f, g) : g;
  }
  res.formula = f ? f : Formula::falsity();
  return res;
}

}  // namespace fo2alt
