// monoid.cpp

#include "fo2alt/monoid.hpp"

#include <algorithm>

namespace fo2alt {

int OrderedMonoid::eval_word(const std::string& w) const {
  int cur = neutral;
  for (char c : w) {
    auto it = letters.find(c);
    if (it == letters.end())
      throw input_error(std::string("letter '") + c + "' is not in the monoid's alphabet");
    cur = prod(cur, it->second);
  }
  return cur;
}

OrderedMonoid OrderedMonoid::trivial() {
  OrderedMonoid m;
  m.size = 1;
  m.neutral = 0;
  m.mul = {0};
  m.leq = BitMatrix(1, 1);
  m.leq.set(0, 0);
  return m;
}

ValidationReport validate(const OrderedMonoid& m) {
  ValidationReport rep;
  const int n = m.size;
  if (n <= 0) {
    rep.issues.push_back({"size", {}, "size must be positive"});
    return rep;
  }
  if (m.neutral < 0 || m.neutral >= n) {
    rep.issues.push_back({"neutral", {m.neutral}, "neutral index out of range"});
    return rep;
  }
  if (static_cast<int>(m.mul.size()) != n * n) {
    rep.issues.push_back({"table", {}, "multiplication table has wrong shape"});
    return rep;
  }
  for (int v : m.mul)
    if (v < 0 || v >= n) {
      rep.issues.push_back({"table", {v}, "table entry out of range"});
      return rep;
    }
  if (m.leq.rows() != n || m.leq.cols() != n) {
    rep.issues.push_back({"order-shape", {}, "order relation has wrong shape"});
    return rep;
  }
  for (auto& [c, img] : m.letters)
    if (img < 0 || img >= n)
      rep.issues.push_back({"letters", {img}, std::string("letter '") + c + "' maps out of range"});

  // Identity.
  for (int x = 0; x < n; ++x) {
    if (m.prod(m.neutral, x) != x)
      rep.issues.push_back({"neutral", {m.neutral, x}, "neutral is not a left identity"});
    if (m.prod(x, m.neutral) != x)
      rep.issues.push_back({"neutral", {x, m.neutral}, "neutral is not a right identity"});
  }

  // Associativity, exhaustive.
  for (int a = 0; a < n && rep.issues.size() < 64; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.prod(a, m.prod(b, c)) != m.prod(m.prod(a, b), c)) {
          rep.issues.push_back({"associativity", {a, b, c}, "(a*b)*c != a*(b*c)"});
          goto assoc_done;
        }
assoc_done:

  // Partial order axioms.
  for (int s = 0; s < n; ++s)
    if (!m.leq.at(s, s))
      rep.issues.push_back({"order-reflexive", {s}, "s <= s missing"});
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s != t && m.leq.at(s, t) && m.leq.at(t, s))
        rep.issues.push_back({"order-antisymmetric", {s, t}, "s <= t and t <= s for distinct s,t"});
      if (!m.leq.at(s, t)) continue;
      for (int u = 0; u < n; ++u)
        if (m.leq.at(t, u) && !m.leq.at(s, u)) {
          rep.issues.push_back({"order-transitive", {s, t, u}, "s <= t <= u but not s <= u"});
          goto order_done;
        }
    }
order_done:

  // Stability. One-sided stability on both sides suffices: s <= t gives
  // x*s <= x*t and s*y <= t*y, and chaining the two yields x*s*y <= x*t*y.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!m.leq.at(s, t)) continue;
      for (int x = 0; x < n; ++x) {
        if (!m.leq.at(m.prod(x, s), m.prod(x, t))) {
          rep.issues.push_back({"stability", {s, t, x}, "s <= t but not x*s <= x*t"});
          goto stab_done;
        }
        if (!m.leq.at(m.prod(s, x), m.prod(t, x))) {
          rep.issues.push_back({"stability", {s, t, x}, "s <= t but not s*x <= t*x"});
          goto stab_done;
        }
      }
    }
stab_done:

  return rep;
}

int idempotent_power(const OrderedMonoid& m, int s) {
  // Walk s, s^2, s^3, ... until the cyclic part repeats, then pick the unique
  // idempotent on the cycle. Squaring alone can oscillate when the period is
  // not a power of two, e.g. a generator of a cyclic group of order 3.
  std::vector<int> first_seen(m.size, -1);
  std::vector<int> orbit;
  int cur = s;
  while (first_seen[cur] < 0) {
    first_seen[cur] = static_cast<int>(orbit.size());
    orbit.push_back(cur);
    cur = m.prod(cur, s);
  }
  const int start = first_seen[cur];  // cycle = orbit[start..]
  for (size_t i = start; i < orbit.size(); ++i)
    if (m.prod(orbit[i], orbit[i]) == orbit[i]) return orbit[i];
  throw invariant_error("cyclic subsemigroup without idempotent");
}

namespace {

std::vector<int> classes_from_preorder(const BitMatrix& leq) {
  const int n = leq.rows();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (cls[s] >= 0) continue;
    cls[s] = next;
    for (int t = s + 1; t < n; ++t)
      if (cls[t] < 0 && leq.at(s, t) && leq.at(t, s)) cls[t] = next;
    ++next;
  }
  return cls;
}

}  // namespace

GreenData green(const OrderedMonoid& m) {
  const int n = m.size;
  GreenData g;
  g.rleq = BitMatrix(n, n);
  g.lleq = BitMatrix(n, n);
  g.jleq = BitMatrix(n, n);

  // s <=_R t iff s lies in the right ideal tM, and symmetrically.
  for (int t = 0; t < n; ++t) {
    std::vector<char> in_right(n, 0), in_left(n, 0);
    for (int y = 0; y < n; ++y) {
      in_right[m.prod(t, y)] = 1;
      in_left[m.prod(y, t)] = 1;
    }
    for (int s = 0; s < n; ++s) {
      if (in_right[s]) g.rleq.set(s, t);
      if (in_left[s]) g.lleq.set(s, t);
    }
    std::vector<char> in_two(n, 0);
    for (int x = 0; x < n; ++x) {
      const int xt = m.prod(x, t);
      for (int y = 0; y < n; ++y) in_two[m.prod(xt, y)] = 1;
    }
    for (int s = 0; s < n; ++s)
      if (in_two[s]) g.jleq.set(s, t);
  }

  g.r_class_of = classes_from_preorder(g.rleq);
  g.l_class_of = classes_from_preorder(g.lleq);
  g.j_class_of = classes_from_preorder(g.jleq);
  return g;
}

bool is_linked(const OrderedMonoid& m, LinkedPair p) {
  return m.prod(p.s, p.e) == p.s && m.prod(p.e, p.e) == p.e;
}

std::vector<LinkedPair> linked_pairs(const OrderedMonoid& m) {
  std::vector<LinkedPair> out;
  for (int e = 0; e < m.size; ++e) {
    if (m.prod(e, e) != e) continue;
    for (int s = 0; s < m.size; ++s)
      if (m.prod(s, e) == s) out.push_back({s, e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_conjugate(const OrderedMonoid& m, LinkedPair p, LinkedPair q) {
  for (int x = 0; x < m.size; ++x) {
    if (m.prod(p.s, x) != q.s) continue;
    for (int y = 0; y < m.size; ++y)
      if (m.prod(x, y) == p.e && m.prod(y, x) == q.e) return true;
  }
  return false;
}

bool lesssim(const OrderedMonoid& m, LinkedPair p, LinkedPair q) {
  for (int r = 0; r < m.size; ++r) {
    if (!m.less_eq(r, q.s)) continue;
    const LinkedPair mid{r, q.e};
    if (is_linked(m, mid) && is_conjugate(m, p, mid)) return true;
  }
  return false;
}

OrderedMonoid direct_product(const OrderedMonoid& a, const OrderedMonoid& b) {
  OrderedMonoid p;
  p.size = a.size * b.size;
  auto idx = [&](int i, int j) { return i * b.size + j; };
  p.neutral = idx(a.neutral, b.neutral);
  p.mul.resize(static_cast<size_t>(p.size) * p.size);
  for (int i1 = 0; i1 < a.size; ++i1)
    for (int j1 = 0; j1 < b.size; ++j1)
      for (int i2 = 0; i2 < a.size; ++i2)
        for (int j2 = 0; j2 < b.size; ++j2)
          p.mul[static_cast<size_t>(idx(i1, j1)) * p.size + idx(i2, j2)] =
              idx(a.prod(i1, i2), b.prod(j1, j2));
  p.leq = BitMatrix(p.size, p.size);
  for (int i1 = 0; i1 < a.size; ++i1)
    for (int j1 = 0; j1 < b.size; ++j1)
      for (int i2 = 0; i2 < a.size; ++i2)
        for (int j2 = 0; j2 < b.size; ++j2)
          if (a.less_eq(i1, i2) && b.less_eq(j1, j2))
            p.leq.set(idx(i1, j1), idx(i2, j2));
  for (auto& [c, ia] : a.letters) {
    auto it = b.letters.find(c);
    if (it != b.letters.end()) p.letters[c] = idx(ia, it->second);
  }
  return p;
}

OrderedMonoid powerset_alphabet_monoid(const std::string& alphabet) {
  if (alphabet.empty()) throw input_error("powerset monoid needs a nonempty alphabet");
  if (alphabet.size() > 16) throw resource_error("alphabet too large for powerset monoid");
  const int n = 1 << alphabet.size();
  OrderedMonoid m;
  m.size = n;
  m.neutral = 0;
  m.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.mul[static_cast<size_t>(a) * n + b] = a | b;
  m.leq = BitMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & ~b) == 0) m.leq.set(a, b);
  for (size_t i = 0; i < alphabet.size(); ++i) m.letters[alphabet[i]] = 1 << i;
  return m;
}

}  // namespace fo2alt
