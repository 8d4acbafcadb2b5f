// topology.cpp

#include "fo2alt/topology.hpp"

#include <map>
#include <queue>

namespace fo2alt {

const char* topology_kind_name(TopologyKind k) {
  switch (k) {
    case TopologyKind::CantorInfty: return "cantor/infty";
    case TopologyKind::AlphabeticInfty: return "alphabetic/infty";
    case TopologyKind::CantorOmega: return "cantor/omega";
    case TopologyKind::AlphabeticOmega: return "alphabetic/omega";
  }
  return "?";
}

namespace {

// Per-element alphabet of the words mapping to it; fails when the recognizer
// is not alphabetic (or not generated by its letters).
std::vector<uint32_t> element_alphabets(const OrderedMonoid& m) {
  if (m.letters.empty()) throw input_error("openness test needs a recognizer with letters");
  std::vector<uint32_t> mask(m.size, 0);
  std::vector<char> seen(m.size, 0);
  std::vector<int> letter_bit_of;
  std::map<char, uint32_t> bit;
  uint32_t next = 1;
  for (auto& [c, img] : m.letters) {
    bit[c] = next;
    next <<= 1;
  }
  seen[m.neutral] = 1;
  mask[m.neutral] = 0;
  std::queue<int> todo;
  todo.push(m.neutral);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (auto& [c, img] : m.letters) {
      const int y = m.prod(x, img);
      const uint32_t ymask = mask[x] | bit[c];
      if (!seen[y]) {
        seen[y] = 1;
        mask[y] = ymask;
        todo.push(y);
      } else if (mask[y] != ymask) {
        throw input_error("recognizer is not alphabetic: element " + std::to_string(y) +
                          " is the image of words with different alphabets");
      }
    }
  }
  for (int x = 0; x < m.size; ++x)
    if (!seen[x]) throw input_error("recognizer is not generated by its letter images");
  return mask;
}

// Submonoid generated by the images of the letters inside the mask.
std::vector<char> submonoid_of_letters(const OrderedMonoid& m, uint32_t cmask,
                                       const std::map<char, uint32_t>& bit) {
  std::vector<char> in(m.size, 0);
  in[m.neutral] = 1;
  std::queue<int> todo;
  todo.push(m.neutral);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (auto& [c, img] : m.letters) {
      if (!(bit.at(c) & cmask)) continue;
      const int y = m.prod(x, img);
      if (!in[y]) {
        in[y] = 1;
        todo.push(y);
      }
    }
  }
  return in;
}

}  // namespace

OpenResult is_open(const RecognizedLanguage& l, TopologyKind kind) {
  const OrderedMonoid& m = l.monoid;
  const std::vector<uint32_t> alph = element_alphabets(m);
  std::map<char, uint32_t> bit;
  uint32_t next = 1;
  for (auto& [c, img] : m.letters) {
    bit[c] = next;
    next <<= 1;
  }

  const bool alphabetic_kind =
      kind == TopologyKind::AlphabeticInfty || kind == TopologyKind::AlphabeticOmega;
  const bool omega_kind =
      kind == TopologyKind::CantorOmega || kind == TopologyKind::AlphabeticOmega;

  const std::vector<LinkedPair> pairs = linked_pairs(m);
  std::map<uint32_t, std::vector<char>> sub_cache;

  OpenResult res;
  for (const LinkedPair& p : pairs) {
    if (!l.accepts(p.s, p.e)) continue;
    if (omega_kind && p.e == m.neutral) continue;

    const std::vector<char>* allowed = nullptr;
    if (alphabetic_kind) {
      const uint32_t cmask = alph[p.e];
      auto it = sub_cache.find(cmask);
      if (it == sub_cache.end())
        it = sub_cache.emplace(cmask, submonoid_of_letters(m, cmask, bit)).first;
      allowed = &it->second;
    }

    // Elements reachable inside the basic neighborhood of (s,e): s*M for the
    // Cantor criterion, s*M_C for the alphabetic one (s*e = s for linked pairs).
    std::vector<char> reach(m.size, 0);
    for (int x = 0; x < m.size; ++x) {
      if (allowed && !(*allowed)[x]) continue;
      reach[m.prod(p.s, x)] = 1;
    }

    for (const LinkedPair& q : pairs) {
      if (omega_kind && q.e == m.neutral) continue;
      if (!reach[q.s]) continue;
      if (allowed && !(*allowed)[q.e]) continue;
      if (!l.accepts(q.s, q.e)) {
        res.open = false;
        res.witness = {p, q};
        return res;
      }
    }
  }
  return res;
}

}  // namespace fo2alt
