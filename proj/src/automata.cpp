// automata.cpp

#include "fo2alt/automata.hpp"

#include <algorithm>
#include <queue>

namespace fo2alt {

void validate_automaton(const AutomatonBase& a) {
  if (a.alphabet.empty()) throw input_error("automaton alphabet is empty");
  for (size_t i = 0; i < a.alphabet.size(); ++i)
    if (a.alphabet.find(a.alphabet[i], i + 1) != std::string::npos)
      throw input_error("duplicate letter in alphabet");
  const int n = a.num_states();
  if (static_cast<int>(a.delta.size()) != n || static_cast<int>(a.initial.size()) != n)
    throw input_error("automaton state tables have inconsistent sizes");
  for (const auto& row : a.delta) {
    if (row.size() != a.alphabet.size())
      throw input_error("transition table has wrong alphabet dimension");
    for (const auto& succ : row)
      for (int q : succ)
        if (q < 0 || q >= n) throw input_error("transition references an undeclared state");
  }
}

std::string UpWord::to_string() const {
  if (finite()) return prefix.empty() ? "eps" : prefix;
  return prefix + "(" + period + ")^w";
}

UpWord parse_up_word(const std::string& text) {
  UpWord w;
  const size_t open = text.find('(');
  if (open == std::string::npos) {
    w.prefix = text == "eps" ? "" : text;
    return w;
  }
  const size_t close = text.find(')', open);
  if (close == std::string::npos || text.substr(close + 1) != "^w")
    throw input_error("ultimately periodic word must look like u(v)^w");
  w.prefix = text.substr(0, open);
  if (w.prefix == "eps") w.prefix.clear();
  w.period = text.substr(open + 1, close - open - 1);
  if (w.period.empty()) throw input_error("period of u(v)^w must be nonempty");
  return w;
}

bool nfa_accepts(const Nfa& a, const std::string& word) {
  std::vector<char> cur(a.num_states(), 0);
  for (int q = 0; q < a.num_states(); ++q) cur[q] = a.initial[q];
  for (char c : word) {
    const int l = a.letter_index(c);
    std::vector<char> next(a.num_states(), 0);
    for (int q = 0; q < a.num_states(); ++q)
      if (cur[q])
        for (int r : a.delta[q][l]) next[r] = 1;
    cur.swap(next);
  }
  for (int q = 0; q < a.num_states(); ++q)
    if (cur[q] && a.final[q]) return true;
  return false;
}

bool buchi_accepts_lasso(const BuchiAutomaton& a, const std::string& prefix,
                         const std::string& period) {
  if (period.empty()) throw input_error("lasso search requires a nonempty period");
  const int n = a.num_states();
  const int plen = static_cast<int>(period.size());

  // Product of automaton states with positions in the period. A run of the
  // lasso visits accepting states infinitely often iff some reachable
  // accepting product node lies on a cycle through itself.
  auto node = [&](int q, int i) { return q * plen + i; };
  std::vector<std::vector<int>> succ(static_cast<size_t>(n) * plen);
  for (int q = 0; q < n; ++q)
    for (int i = 0; i < plen; ++i) {
      const int l = a.letter_index(period[i]);
      for (int r : a.delta[q][l]) succ[node(q, i)].push_back(node(r, (i + 1) % plen));
    }

  std::vector<char> start(n, 0);
  for (int q = 0; q < n; ++q) start[q] = a.initial[q];
  for (char c : prefix) {
    const int l = a.letter_index(c);
    std::vector<char> next(n, 0);
    for (int q = 0; q < n; ++q)
      if (start[q])
        for (int r : a.delta[q][l]) next[r] = 1;
    start.swap(next);
  }

  std::vector<char> reach(static_cast<size_t>(n) * plen, 0);
  std::queue<int> bfs;
  for (int q = 0; q < n; ++q)
    if (start[q]) {
      reach[node(q, 0)] = 1;
      bfs.push(node(q, 0));
    }
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (int w : succ[v])
      if (!reach[w]) {
        reach[w] = 1;
        bfs.push(w);
      }
  }

  for (int q = 0; q < n; ++q) {
    if (!a.accepting[q]) continue;
    for (int i = 0; i < plen; ++i) {
      const int v = node(q, i);
      if (!reach[v]) continue;
      // Does v reach itself through at least one step?
      std::vector<char> seen(static_cast<size_t>(n) * plen, 0);
      std::queue<int> q2;
      for (int w : succ[v])
        if (!seen[w]) {
          seen[w] = 1;
          q2.push(w);
        }
      while (!q2.empty()) {
        const int x = q2.front();
        q2.pop();
        if (x == v) return true;
        for (int w : succ[x])
          if (!seen[w]) {
            seen[w] = 1;
            q2.push(w);
          }
      }
      if (seen[v]) return true;
    }
  }
  return false;
}

bool member_up_automaton(const std::optional<Nfa>& nfa,
                         const std::optional<BuchiAutomaton>& buchi, const UpWord& w) {
  if (w.finite()) return nfa && nfa_accepts(*nfa, w.prefix);
  return buchi && buchi_accepts_lasso(*buchi, w.prefix, w.period);
}

}  // namespace fo2alt
