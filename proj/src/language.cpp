// language.cpp

#include "fo2alt/language.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <unordered_map>

namespace fo2alt {

std::string RecognizedLanguage::alphabet() const {
  std::string a;
  for (auto& [c, img] : monoid.letters) a.push_back(c);
  return a;
}

std::vector<LinkedPair> RecognizedLanguage::accept_pairs() const {
  std::vector<LinkedPair> out;
  for (int s = 0; s < monoid.size; ++s)
    for (int e = 0; e < monoid.size; ++e)
      if (accept.at(s, e)) out.push_back({s, e});
  return out;
}

namespace {

// --- matrix semirings for transition monoids -------------------------------

// Entries: 0 = no path, 1 = path, 2 = path visiting an accepting state at a
// position > 0. The neutral element is then the plain identity matrix.
using Mat = std::vector<uint8_t>;

Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat c(static_cast<size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const uint8_t apq = a[static_cast<size_t>(p) * n + q];
      if (!apq) continue;
      for (int r = 0; r < n; ++r) {
        const uint8_t bqr = b[static_cast<size_t>(q) * n + r];
        if (!bqr) continue;
        uint8_t& cpr = c[static_cast<size_t>(p) * n + r];
        cpr = std::max(cpr, std::max(apq, bqr));
      }
    }
  return c;
}

struct MatMonoid {
  int dim = 0;
  std::vector<Mat> elems;            // index -> matrix, BFS discovery order
  std::map<Mat, int> index;
  OrderedMonoid monoid;              // trivially ordered
};

MatMonoid close_under_product(int dim, const std::vector<Mat>& letter_mats,
                              const std::string& alphabet, int cap) {
  MatMonoid mm;
  mm.dim = dim;
  Mat ident(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) ident[static_cast<size_t>(i) * dim + i] = 1;
  mm.elems.push_back(ident);
  mm.index[ident] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (const Mat& g : letter_mats) {
      Mat y = mat_mul(mm.elems[x], g, dim);
      if (mm.index.emplace(y, static_cast<int>(mm.elems.size())).second) {
        mm.elems.push_back(std::move(y));
        if (static_cast<int>(mm.elems.size()) > cap)
          throw resource_error("transition monoid exceeds the element cap of " +
                               std::to_string(cap));
        todo.push(static_cast<int>(mm.elems.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(mm.elems.size());
  OrderedMonoid& m = mm.monoid;
  m.size = n;
  m.neutral = 0;
  m.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = mm.index.find(mat_mul(mm.elems[a], mm.elems[b], dim));
      if (it == mm.index.end()) throw invariant_error("transition monoid is not closed");
      m.mul[static_cast<size_t>(a) * n + b] = it->second;
    }
  m.leq = BitMatrix(n, n);
  for (int a = 0; a < n; ++a) m.leq.set(a, a);
  for (size_t i = 0; i < alphabet.size(); ++i)
    m.letters[alphabet[i]] = mm.index.at(letter_mats[i]);
  return mm;
}

bool buchi_lasso_pair(const BuchiAutomaton& b, const Mat& s, const Mat& e) {
  const int n = b.num_states();
  for (int q0 = 0; q0 < n; ++q0) {
    if (!b.initial[q0]) continue;
    for (int q = 0; q < n; ++q)
      if (s[static_cast<size_t>(q0) * n + q] >= 1 && e[static_cast<size_t>(q) * n + q] == 2)
        return true;
  }
  return false;
}

void check_acceptance_closures(const RecognizedLanguage& l) {
  const OrderedMonoid& m = l.monoid;
  const std::vector<LinkedPair> pairs = linked_pairs(m);
  for (const LinkedPair& p : pairs) {
    if (!l.accepts(p.s, p.e)) continue;
    for (const LinkedPair& q : pairs) {
      if (l.accepts(q.s, q.e)) continue;
      if (is_conjugate(m, p, q))
        throw invariant_error("acceptance is not closed under conjugacy");
      if (q.e == p.e && m.less_eq(p.s, q.s))
        throw invariant_error("acceptance is not upward closed");
    }
  }
}

}  // namespace

RecognizedLanguage buchi_transition_monoid(const BuchiAutomaton& b, const MonoidCaps& caps) {
  validate_automaton(b);
  const int n = b.num_states();
  std::vector<Mat> letter_mats;
  for (size_t li = 0; li < b.alphabet.size(); ++li) {
    Mat g(static_cast<size_t>(n) * n, 0);
    for (int p = 0; p < n; ++p)
      for (int q : b.delta[p][li])
        g[static_cast<size_t>(p) * n + q] = b.accepting[q] ? 2 : 1;
    letter_mats.push_back(std::move(g));
  }
  MatMonoid mm = close_under_product(n, letter_mats, b.alphabet, caps.max_elements);

  RecognizedLanguage l;
  l.monoid = std::move(mm.monoid);
  l.accept = BitMatrix(l.monoid.size, l.monoid.size);
  for (const LinkedPair& p : linked_pairs(l.monoid))
    if (buchi_lasso_pair(b, mm.elems[p.s], mm.elems[p.e])) l.accept.set(p.s, p.e);
  auto prov = std::make_shared<LanguageAutomata>();
  prov->buchi = b;
  l.provenance = std::move(prov);
  return l;
}

NfaMonoid nfa_transition_monoid(const Nfa& nf, const MonoidCaps& caps) {
  validate_automaton(nf);
  const int n = nf.num_states();
  std::vector<Mat> letter_mats;
  for (size_t li = 0; li < nf.alphabet.size(); ++li) {
    Mat g(static_cast<size_t>(n) * n, 0);
    for (int p = 0; p < n; ++p)
      for (int q : nf.delta[p][li]) g[static_cast<size_t>(p) * n + q] = 1;
    letter_mats.push_back(std::move(g));
  }
  MatMonoid mm = close_under_product(n, letter_mats, nf.alphabet, caps.max_elements);

  NfaMonoid out;
  out.final_element.assign(mm.elems.size(), false);
  for (size_t i = 0; i < mm.elems.size(); ++i)
    for (int p = 0; p < n && !out.final_element[i]; ++p)
      for (int q = 0; q < n; ++q)
        if (nf.initial[p] && nf.final[q] && mm.elems[i][static_cast<size_t>(p) * n + q]) {
          out.final_element[i] = true;
          break;
        }
  out.monoid = std::move(mm.monoid);
  return out;
}

namespace {

// Accessible closure of (M1 x M2 x 2^A) under right multiplication by letter
// images; either component may be a trivial placeholder.
struct AlphabeticProduct {
  OrderedMonoid monoid;
  std::vector<int> comp1, comp2;  // per element
  std::vector<uint32_t> mask;     // alphabet bitmask per element
};

AlphabeticProduct accessible_alphabetic_product(const OrderedMonoid& m1,
                                                const OrderedMonoid& m2,
                                                const std::string& alphabet, int cap) {
  if (alphabet.empty()) throw input_error("alphabetic product needs a nonempty alphabet");
  if (alphabet.size() > 20) throw resource_error("alphabet too large for alphabetic product");
  AlphabeticProduct out;
  auto key = [&](int a, int b, uint32_t k) {
    return (static_cast<uint64_t>(a) * m2.size + b) << alphabet.size() | k;
  };
  std::unordered_map<uint64_t, int> index;
  std::queue<int> todo;

  auto intern = [&](int a, int b, uint32_t k) {
    auto [it, fresh] = index.emplace(key(a, b, k), static_cast<int>(out.comp1.size()));
    if (fresh) {
      out.comp1.push_back(a);
      out.comp2.push_back(b);
      out.mask.push_back(k);
      if (static_cast<int>(out.comp1.size()) > cap)
        throw resource_error("alphabetic product exceeds the element cap of " +
                             std::to_string(cap));
      todo.push(it->second);
    }
    return it->second;
  };

  intern(m1.neutral, m2.neutral, 0);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (size_t li = 0; li < alphabet.size(); ++li) {
      const char c = alphabet[li];
      intern(m1.prod(out.comp1[x], m1.letters.at(c)), m2.prod(out.comp2[x], m2.letters.at(c)),
             out.mask[x] | (uint32_t{1} << li));
    }
  }

  const int n = static_cast<int>(out.comp1.size());
  OrderedMonoid& m = out.monoid;
  m.size = n;
  m.neutral = 0;
  m.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(key(m1.prod(out.comp1[a], out.comp1[b]),
                               m2.prod(out.comp2[a], out.comp2[b]), out.mask[a] | out.mask[b]));
      if (it == index.end()) throw invariant_error("alphabetic product is not closed");
      m.mul[static_cast<size_t>(a) * n + b] = it->second;
    }
  m.leq = BitMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m1.less_eq(out.comp1[a], out.comp1[b]) && m2.less_eq(out.comp2[a], out.comp2[b]) &&
          (out.mask[a] & ~out.mask[b]) == 0)
        m.leq.set(a, b);
  for (size_t li = 0; li < alphabet.size(); ++li) {
    const char c = alphabet[li];
    m.letters[c] = index.at(
        key(m1.letters.at(c), m2.letters.at(c), uint32_t{1} << li));
  }
  return out;
}

OrderedMonoid trivial_with_letters(const std::string& alphabet) {
  OrderedMonoid m = OrderedMonoid::trivial();
  for (char c : alphabet) m.letters[c] = 0;
  return m;
}

}  // namespace

RecognizedLanguage combine_infty(const std::optional<Nfa>& nfa,
                                 const std::optional<BuchiAutomaton>& buchi,
                                 const MonoidCaps& caps) {
  if (!nfa && !buchi) throw input_error("a language needs a finite or an infinite part");
  std::string alphabet = nfa ? nfa->alphabet : buchi->alphabet;
  if (nfa && buchi && nfa->alphabet != buchi->alphabet)
    throw input_error("finite and infinite parts use different alphabets");

  std::optional<NfaMonoid> mn;
  if (nfa) mn = nfa_transition_monoid(*nfa, caps);
  std::optional<RecognizedLanguage> mb;
  if (buchi) mb = buchi_transition_monoid(*buchi, caps);

  const OrderedMonoid m1 = mn ? mn->monoid : trivial_with_letters(alphabet);
  const OrderedMonoid m2 = mb ? mb->monoid : trivial_with_letters(alphabet);
  AlphabeticProduct prod = accessible_alphabetic_product(m1, m2, alphabet, caps.max_elements);

  RecognizedLanguage l;
  l.monoid = std::move(prod.monoid);
  l.accept = BitMatrix(l.monoid.size, l.monoid.size);
  for (const LinkedPair& p : linked_pairs(l.monoid)) {
    bool acc = false;
    if (prod.mask[p.e] == 0) {
      // e is the image of the empty word only: (s,e) captures finite words.
      acc = mn && mn->final_element[prod.comp1[p.s]];
    } else {
      acc = mb && mb->accepts(prod.comp2[p.s], prod.comp2[p.e]);
    }
    if (acc) l.accept.set(p.s, p.e);
  }

  auto prov = std::make_shared<LanguageAutomata>();
  prov->nfa = nfa;
  prov->buchi = buchi;
  l.provenance = std::move(prov);

  check_acceptance_closures(l);
  return l;
}

RecognizedLanguage make_alphabetic(const RecognizedLanguage& in) {
  if (in.monoid.letters.empty())
    throw input_error("make_alphabetic needs a recognizer with letters");
  const std::string alphabet = in.alphabet();
  OrderedMonoid one = trivial_with_letters(alphabet);
  AlphabeticProduct prod =
      accessible_alphabetic_product(in.monoid, one, alphabet, 1 << 22);

  RecognizedLanguage l;
  l.monoid = std::move(prod.monoid);
  l.accept = BitMatrix(l.monoid.size, l.monoid.size);
  for (const LinkedPair& p : linked_pairs(l.monoid))
    if (in.accepts(prod.comp1[p.s], prod.comp1[p.e])) l.accept.set(p.s, p.e);
  l.provenance = in.provenance;
  return l;
}

bool member_up_monoid(const RecognizedLanguage& l, const UpWord& w) {
  const OrderedMonoid& m = l.monoid;
  if (w.finite()) return l.accepts(m.eval_word(w.prefix), m.neutral);
  const int e = idempotent_power(m, m.eval_word(w.period));
  const int s = m.prod(m.eval_word(w.prefix), e);
  return l.accepts(s, e);
}

namespace {

std::vector<int> letter_reachable(const OrderedMonoid& m) {
  std::vector<int> seen(m.size, 0);
  std::queue<int> todo;
  seen[m.neutral] = 1;
  todo.push(m.neutral);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (auto& [c, img] : m.letters) {
      const int y = m.prod(x, img);
      if (!seen[y]) {
        seen[y] = 1;
        todo.push(y);
      }
    }
  }
  return seen;
}

}  // namespace

RecognizedLanguage syntactic_quotient(const RecognizedLanguage& l) {
  const OrderedMonoid& m = l.monoid;
  const int n = m.size;
  if (m.letters.empty())
    throw input_error("syntactic quotient needs a recognizer with letters");
  {
    std::vector<int> seen = letter_reachable(m);
    for (int i = 0; i < n; ++i)
      if (!seen[i])
        throw input_error("recognizer is not generated by its letter images");
  }

  std::vector<int> idem(n);
  for (int z = 0; z < n; ++z) idem[z] = idempotent_power(m, z);

  // Z(p) = contexts z whose omega-continuation accepts p, i.e. the pair
  // (p e, e) with e the idempotent power of z. z = neutral covers finite
  // words since the empty word satisfies eps^w = eps.
  BitMatrix zrow(n, n);
  for (int p = 0; p < n; ++p)
    for (int z = 0; z < n; ++z) {
      const int e = idem[z];
      if (l.accepts(m.prod(p, e), e)) zrow.set(p, z);
    }
  BitMatrix zsub(n, n);  // zsub.at(p,q) iff Z(p) subset of Z(q)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (zrow.row_subset(p, q)) zsub.set(p, q);

  // Y(w) = prefixes x with x w^omega accepted.
  BitMatrix yrow(n, n);
  for (int w = 0; w < n; ++w) {
    const int e = idem[w];
    for (int x = 0; x < n; ++x)
      if (l.accepts(m.prod(x, e), e)) yrow.set(w, x);
  }

  // s below t iff for all contexts x,y,z:  accept(x s y z^w) => accept(x t y z^w)
  // and for all x,y:  accept(x (s y)^w) => accept(x (t y)^w).
  BitMatrix below(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        const int xs = m.prod(x, s);
        const int xt = m.prod(x, t);
        for (int y = 0; y < n; ++y)
          if (!zsub.at(m.prod(xs, y), m.prod(xt, y))) {
            ok = false;
            break;
          }
      }
      for (int y = 0; y < n && ok; ++y)
        if (!yrow.row_subset(m.prod(s, y), m.prod(t, y))) ok = false;
      if (ok) below.set(s, t);
    }

  // The syntactic preorder is stable because contexts absorb multipliers;
  // verify anyway, this must never fire.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!below.at(s, t)) continue;
      for (int a = 0; a < n; ++a)
        if (!below.at(m.prod(a, s), m.prod(a, t)) || !below.at(m.prod(s, a), m.prod(t, a)))
          throw invariant_error("syntactic preorder is not stable");
    }

  std::vector<int> cls(n, -1);
  std::vector<int> rep;
  for (int s = 0; s < n; ++s) {
    if (cls[s] >= 0) continue;
    cls[s] = static_cast<int>(rep.size());
    for (int t = s + 1; t < n; ++t)
      if (cls[t] < 0 && below.at(s, t) && below.at(t, s)) cls[t] = cls[s];
    rep.push_back(s);
  }
  const int q = static_cast<int>(rep.size());

  RecognizedLanguage out;
  OrderedMonoid& mq = out.monoid;
  mq.size = q;
  mq.neutral = cls[m.neutral];
  mq.mul.resize(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      mq.mul[static_cast<size_t>(a) * q + b] = cls[m.prod(rep[a], rep[b])];
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (cls[m.prod(u, v)] != mq.prod(cls[u], cls[v]))
        throw invariant_error("syntactic product depends on representatives");
  mq.leq = BitMatrix(q, q);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (below.at(u, v)) mq.leq.set(cls[u], cls[v]);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a != b && mq.leq.at(a, b) && mq.leq.at(b, a))
        throw invariant_error("syntactic class order is not antisymmetric");
  for (auto& [c, img] : m.letters) mq.letters[c] = cls[img];

  out.accept = BitMatrix(q, q);
  for (int s = 0; s < n; ++s)
    for (int e = 0; e < n; ++e)
      if (l.accepts(s, e)) out.accept.set(cls[s], cls[e]);

  // The quotient must recognize the same language: since every word maps to an
  // element pair, agreement over all (prefix element, period element) pairs is
  // an exhaustive check.
  for (int p = 0; p < n; ++p) {
    if (l.accepts(p, m.neutral) != out.accepts(cls[p], mq.neutral))
      throw invariant_error("syntactic quotient changes the finite-word language");
    for (int v = 0; v < n; ++v) {
      const int e = idem[v];
      const int eq = idempotent_power(mq, cls[v]);
      if (l.accepts(m.prod(p, e), e) != out.accepts(mq.prod(cls[p], eq), eq))
        throw invariant_error("syntactic quotient changes the language");
    }
  }

  out.provenance = l.provenance;
  return out;
}

ValidationReport validate_recognition(const RecognizedLanguage& l, int samples, uint64_t seed) {
  ValidationReport rep;
  const OrderedMonoid& m = l.monoid;

  for (int s = 0; s < m.size; ++s)
    for (int e = 0; e < m.size; ++e)
      if (l.accepts(s, e) && !is_linked(m, {s, e}))
        rep.issues.push_back({"accept-linked", {s, e}, "accepted pair is not linked"});

  const std::vector<LinkedPair> pairs = linked_pairs(m);
  for (const LinkedPair& p : pairs) {
    if (!l.accepts(p.s, p.e)) continue;
    for (const LinkedPair& q : pairs) {
      if (l.accepts(q.s, q.e)) continue;
      if (is_conjugate(m, p, q))
        rep.issues.push_back({"accept-conjugacy", {p.s, p.e, q.s, q.e},
                              "conjugate of an accepted pair is rejected"});
      else if (q.e == p.e && m.less_eq(p.s, q.s))
        rep.issues.push_back({"accept-upward", {p.s, p.e, q.s, q.e},
                              "pair above an accepted pair is rejected"});
      else if (lesssim(m, p, q))
        rep.issues.push_back({"accept-lesssim", {p.s, p.e, q.s, q.e},
                              "pair lesssim-above an accepted pair is rejected"});
    }
  }

  if (l.provenance && (l.provenance->nfa || l.provenance->buchi)) {
    const std::string alphabet = l.alphabet();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, 8);
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < samples; ++i) {
      UpWord w;
      const int ulen = len(rng), vlen = len(rng);
      for (int j = 0; j < ulen; ++j) w.prefix.push_back(alphabet[pick(rng)]);
      for (int j = 0; j < vlen; ++j) w.period.push_back(alphabet[pick(rng)]);
      const bool via_monoid = member_up_monoid(l, w);
      const bool via_automaton =
          member_up_automaton(l.provenance->nfa, l.provenance->buchi, w);
      if (via_monoid != via_automaton) {
        rep.issues.push_back({"saturation-sample", {}, "membership disagrees on " + w.to_string()});
        break;
      }
    }
  }
  return rep;
}

bool recognizers_isomorphic(const RecognizedLanguage& a, const RecognizedLanguage& b) {
  if (a.monoid.size != b.monoid.size) return false;
  if (a.alphabet() != b.alphabet()) return false;
  const OrderedMonoid& ma = a.monoid;
  const OrderedMonoid& mb = b.monoid;

  // Letter-generated recognizers admit at most one letter-respecting
  // homomorphism; build it by closure from the neutral element.
  std::vector<int> phi(ma.size, -1);
  phi[ma.neutral] = mb.neutral;
  std::queue<int> todo;
  todo.push(ma.neutral);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (auto& [c, img] : ma.letters) {
      const int xa = ma.prod(x, img);
      const int xb = mb.prod(phi[x], mb.letters.at(c));
      if (phi[xa] < 0) {
        phi[xa] = xb;
        todo.push(xa);
      } else if (phi[xa] != xb) {
        return false;
      }
    }
  }
  std::vector<int> hit(mb.size, 0);
  for (int x = 0; x < ma.size; ++x) {
    if (phi[x] < 0) return false;  // not letter-generated
    hit[phi[x]] = 1;
  }
  for (int y = 0; y < mb.size; ++y)
    if (!hit[y]) return false;

  for (int x = 0; x < ma.size; ++x)
    for (int y = 0; y < ma.size; ++y) {
      if (phi[ma.prod(x, y)] != mb.prod(phi[x], phi[y])) return false;
      if (ma.less_eq(x, y) != mb.less_eq(phi[x], phi[y])) return false;
      if (a.accepts(x, y) != b.accepts(phi[x], phi[y])) return false;
    }
  return true;
}

}  // namespace fo2alt
