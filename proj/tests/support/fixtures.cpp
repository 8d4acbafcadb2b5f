// fixtures.cpp

#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace fo2alt::fixtures {

OrderedMonoid two_element_zero(bool zero_below_one) {
  // Elements: 0 = identity "1", 1 = absorbing "0".
  OrderedMonoid m;
  m.size = 2;
  m.neutral = 0;
  m.mul = {0, 1, 1, 1};
  m.leq = BitMatrix(2, 2);
  m.leq.set(0, 0);
  m.leq.set(1, 1);
  if (zero_below_one) m.leq.set(1, 0);  // 0 <= 1 in the usual notation
  return m;
}

OrderedMonoid cyclic_group(int k) {
  OrderedMonoid m;
  m.size = k;
  m.neutral = 0;
  m.mul.resize(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m.mul[static_cast<size_t>(a) * k + b] = (a + b) % k;
  m.leq = BitMatrix(k, k);
  for (int a = 0; a < k; ++a) m.leq.set(a, a);
  return m;
}

namespace {

AutomatonBase make_base(const std::string& alphabet, int states,
                        const std::vector<int>& initial,
                        const std::vector<std::tuple<int, char, int>>& transitions) {
  AutomatonBase a;
  a.alphabet = alphabet;
  for (int q = 0; q < states; ++q) a.state_names.push_back("q" + std::to_string(q));
  a.delta.assign(states, std::vector<std::vector<int>>(alphabet.size()));
  a.initial.assign(states, false);
  for (int q : initial) a.initial[q] = true;
  for (auto& [p, c, q] : transitions) a.delta[p][a.letter_index(c)].push_back(q);
  for (auto& row : a.delta)
    for (auto& succ : row) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
  return a;
}

}  // namespace

Nfa make_nfa(const std::string& alphabet, int states, const std::vector<int>& initial,
             const std::vector<int>& final,
             const std::vector<std::tuple<int, char, int>>& transitions) {
  Nfa a;
  static_cast<AutomatonBase&>(a) = make_base(alphabet, states, initial, transitions);
  a.final.assign(states, false);
  for (int q : final) a.final[q] = true;
  return a;
}

BuchiAutomaton make_buchi(const std::string& alphabet, int states,
                          const std::vector<int>& initial, const std::vector<int>& accepting,
                          const std::vector<std::tuple<int, char, int>>& transitions) {
  BuchiAutomaton a;
  static_cast<AutomatonBase&>(a) = make_base(alphabet, states, initial, transitions);
  a.accepting.assign(states, false);
  for (int q : accepting) a.accepting[q] = true;
  return a;
}

namespace {

using Transformation = std::vector<int>;

Transformation compose(const Transformation& f, const Transformation& g) {
  Transformation h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

// Submonoid generated by the given transformations, as a multiplication
// table; empty result when the closure exceeds max_size.
std::optional<OrderedMonoid> transformation_submonoid(const std::vector<Transformation>& gens,
                                                      int points, int max_size) {
  Transformation id(points);
  for (int i = 0; i < points; ++i) id[i] = i;
  std::vector<Transformation> elems{id};
  std::map<Transformation, int> index{{id, 0}};
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (const Transformation& g : gens) {
      Transformation y = compose(elems[x], g);
      if (index.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(y);
        if (static_cast<int>(elems.size()) > max_size) return std::nullopt;
        todo.push(static_cast<int>(elems.size()) - 1);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  OrderedMonoid m;
  m.size = n;
  m.neutral = 0;
  m.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.mul[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  m.leq = BitMatrix(n, n);
  for (int a = 0; a < n; ++a) m.leq.set(a, a);
  return m;
}

// Smallest stable order containing the seed pairs, or nothing when the
// closure breaks antisymmetry.
std::optional<BitMatrix> stable_order_closure(const OrderedMonoid& m,
                                              const std::vector<std::pair<int, int>>& seeds) {
  const int n = m.size;
  BitMatrix r(n, n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  for (auto& [s, t] : seeds) r.set(s, t);
  while (true) {
    BitMatrix prev = r;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || !r.at(a, b)) continue;
        for (int x = 0; x < n; ++x) {
          r.set(m.prod(x, a), m.prod(x, b));
          r.set(m.prod(a, x), m.prod(b, x));
        }
      }
    r.transitive_closure();
    if (r == prev) break;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (r.at(a, b) && r.at(b, a)) return std::nullopt;
  return r;
}

std::vector<Transformation> all_transformations(int points) {
  std::vector<Transformation> out;
  Transformation t(points, 0);
  while (true) {
    out.push_back(t);
    int i = points - 1;
    for (; i >= 0; --i) {
      if (++t[i] < points) break;
      t[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> ordered_monoid_corpus(int min_count, int max_size, uint64_t seed) {
  std::vector<CorpusEntry> corpus;
  std::set<std::pair<std::vector<int>, std::vector<uint64_t>>> seen;

  auto add = [&](const OrderedMonoid& m, const std::string& name) {
    if (!seen.emplace(m.mul, m.leq.raw()).second) return;
    corpus.push_back({name, m});
  };

  auto add_with_orders = [&](OrderedMonoid m, const std::string& name) {
    add(m, name + "/trivial");
    for (int s = 0; s < m.size; ++s)
      for (int t = 0; t < m.size; ++t) {
        if (s == t) continue;
        if (auto ord = stable_order_closure(m, {{s, t}})) {
          OrderedMonoid om = m;
          om.leq = *ord;
          add(om, name + "/ord" + std::to_string(s) + "-" + std::to_string(t));
        }
      }
  };

  // Classic fixtures first, so the corpus always contains them.
  add_with_orders(two_element_zero(false), "zero2");
  add_with_orders(cyclic_group(2), "c2");
  add_with_orders(cyclic_group(3), "c3");
  {
    OrderedMonoid p1 = powerset_alphabet_monoid("a");
    p1.letters.clear();
    add_with_orders(p1, "pow1");
    OrderedMonoid p2 = powerset_alphabet_monoid("ab");
    p2.letters.clear();
    add_with_orders(p2, "pow2");
  }

  // All single-generator submonoids on up to 3 points.
  for (int points = 2; points <= 3; ++points) {
    const std::vector<Transformation> all = all_transformations(points);
    for (size_t gi = 0; gi < all.size(); ++gi)
      if (auto m = transformation_submonoid({all[gi]}, points, max_size))
        add_with_orders(*m, "t" + std::to_string(points) + "g" + std::to_string(gi));
  }

  // Random two-generator submonoids on 3 points until the corpus is large
  // enough.
  std::mt19937_64 rng(seed);
  const std::vector<Transformation> all3 = all_transformations(3);
  std::uniform_int_distribution<size_t> pick(0, all3.size() - 1);
  for (int iter = 0; iter < 4000 && static_cast<int>(corpus.size()) < 4 * min_count; ++iter) {
    const size_t i = pick(rng), j = pick(rng);
    if (auto m = transformation_submonoid({all3[i], all3[j]}, 3, max_size))
      add_with_orders(*m, "t3r" + std::to_string(i) + "-" + std::to_string(j));
  }
  return corpus;
}

std::vector<CuratedLanguage> curated_languages() {
  std::vector<CuratedLanguage> out;
  const std::string ab = "ab";

  auto push = [&](std::string name, std::optional<Nfa> nfa,
                  std::optional<BuchiAutomaton> buchi, Universe u) {
    CuratedLanguage cl;
    cl.name = std::move(name);
    cl.nfa = std::move(nfa);
    cl.buchi = std::move(buchi);
    cl.lang = combine_infty(cl.nfa, cl.buchi);
    cl.universe = u;
    out.push_back(std::move(cl));
  };

  // Words (finite or infinite) containing the letter a.
  push("contains-a",
       make_nfa(ab, 2, {0}, {1},
                {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 1}}),
       make_buchi(ab, 2, {0}, {1},
                  {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 1}}),
       Universe::Infty);

  // Words containing ab as a (scattered) subword.
  push("contains-ab",
       make_nfa(ab, 3, {0}, {2},
                {{0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1}, {1, 'b', 2}, {2, 'a', 2}, {2, 'b', 2}}),
       make_buchi(ab, 3, {0}, {2},
                  {{0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1}, {1, 'b', 2}, {2, 'a', 2}, {2, 'b', 2}}),
       Universe::Infty);

  // Infinite words with finitely many a.
  push("finitely-many-a", std::nullopt,
       make_buchi(ab, 2, {0}, {1},
                  {{0, 'a', 0}, {0, 'b', 0}, {0, 'b', 1}, {1, 'b', 1}}),
       Universe::Omega);

  // Infinite words with infinitely many a.
  push("infinitely-many-a", std::nullopt,
       make_buchi(ab, 2, {0}, {1},
                  {{0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1}, {1, 'b', 0}}),
       Universe::Omega);

  // Finite words with an even number of a.
  push("even-a", make_nfa(ab, 2, {0}, {0},
                          {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 0}, {1, 'b', 1}}),
       std::nullopt, Universe::Star);

  // The empty language.
  push("empty",
       make_nfa(ab, 1, {0}, {}, {{0, 'a', 0}, {0, 'b', 0}}),
       make_buchi(ab, 1, {0}, {}, {{0, 'a', 0}, {0, 'b', 0}}),
       Universe::Infty);

  // All of A^infty.
  push("all",
       make_nfa(ab, 1, {0}, {0}, {{0, 'a', 0}, {0, 'b', 0}}),
       make_buchi(ab, 1, {0}, {0}, {{0, 'a', 0}, {0, 'b', 0}}),
       Universe::Infty);

  // A^* b^omega, a different presentation of finitely-many-a.
  push("astar-bomega", std::nullopt,
       make_buchi(ab, 3, {0}, {1},
                  {{0, 'a', 0}, {0, 'b', 0}, {0, 'b', 1}, {1, 'b', 2}, {2, 'b', 1}}),
       Universe::Omega);

  return out;
}

std::vector<std::pair<CuratedLanguage, CuratedLanguage>> same_language_pairs() {
  std::vector<CuratedLanguage> base = curated_languages();
  auto find = [&](const std::string& name) -> const CuratedLanguage& {
    for (const auto& cl : base)
      if (cl.name == name) return cl;
    throw std::logic_error("unknown curated language " + name);
  };
  const std::string ab = "ab";

  auto mk = [&](std::string name, std::optional<Nfa> nfa, std::optional<BuchiAutomaton> buchi,
                Universe u) {
    CuratedLanguage cl;
    cl.name = std::move(name);
    cl.nfa = std::move(nfa);
    cl.buchi = std::move(buchi);
    cl.lang = combine_infty(cl.nfa, cl.buchi);
    cl.universe = u;
    return cl;
  };

  std::vector<std::pair<CuratedLanguage, CuratedLanguage>> pairs;
  pairs.emplace_back(find("finitely-many-a"), find("astar-bomega"));

  // contains-a with a wasteful third state.
  pairs.emplace_back(
      find("contains-a"),
      mk("contains-a-v2",
         make_nfa(ab, 3, {0}, {1, 2},
                  {{0, 'b', 0}, {0, 'a', 1}, {1, 'a', 2}, {1, 'b', 2}, {2, 'a', 2}, {2, 'b', 2}}),
         make_buchi(ab, 3, {0}, {2},
                    {{0, 'b', 0}, {0, 'a', 1}, {1, 'a', 2}, {1, 'b', 2}, {2, 'a', 2}, {2, 'b', 2}}),
         Universe::Infty));

  // all words via a two-state round trip.
  pairs.emplace_back(
      find("all"),
      mk("all-v2",
         make_nfa(ab, 2, {0}, {0, 1},
                  {{0, 'a', 1}, {0, 'b', 1}, {1, 'a', 0}, {1, 'b', 0}}),
         make_buchi(ab, 2, {0}, {0, 1},
                    {{0, 'a', 1}, {0, 'b', 1}, {1, 'a', 0}, {1, 'b', 0}}),
         Universe::Infty));

  // empty language via two unproductive states.
  pairs.emplace_back(
      find("empty"),
      mk("empty-v2",
         make_nfa(ab, 2, {0}, {}, {{0, 'a', 1}, {0, 'b', 1}, {1, 'a', 0}, {1, 'b', 0}}),
         make_buchi(ab, 2, {0}, {}, {{0, 'a', 1}, {0, 'b', 1}, {1, 'a', 0}, {1, 'b', 0}}),
         Universe::Infty));

  // contains-ab with a nondeterministic guess of the a position.
  pairs.emplace_back(
      find("contains-ab"),
      mk("contains-ab-v2",
         make_nfa(ab, 3, {0}, {2},
                  {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1}, {1, 'b', 2},
                   {2, 'a', 2}, {2, 'b', 2}}),
         make_buchi(ab, 3, {0}, {2},
                    {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'a', 1}, {1, 'b', 2},
                     {2, 'a', 2}, {2, 'b', 2}}),
         Universe::Infty));

  return pairs;
}

UpWord random_up_word(std::mt19937_64& rng, const std::string& alphabet, int max_len,
                      bool allow_finite, bool allow_infinite) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  UpWord w;
  const int ulen = len(rng);
  for (int i = 0; i < ulen; ++i) w.prefix.push_back(alphabet[pick(rng)]);
  bool infinite = allow_infinite && (!allow_finite || len(rng) % 2 == 0);
  if (infinite) {
    const int vlen = std::max(1, len(rng));
    for (int i = 0; i < vlen; ++i) w.period.push_back(alphabet[pick(rng)]);
  }
  return w;
}

}  // namespace fo2alt::fixtures
