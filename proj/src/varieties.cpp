// varieties.cpp

#include "fo2alt/varieties.hpp"

#include <algorithm>
#include <set>

namespace fo2alt {

namespace {

const Identity& aperiodic_identity() {
  static const Identity id = parse_identity("x^w * x = x^w");
  return id;
}
const Identity& da_identity() {
  static const Identity id = parse_identity("(x*y*z)^w * y * (x*y*z)^w = (x*y*z)^w");
  return id;
}
const Identity& jplus_identity() {
  static const Identity id = parse_identity("1 <= z");
  return id;
}

}  // namespace

bool is_in_A(const OrderedMonoid& m) { return satisfies_identity(m, aperiodic_identity()).holds; }
bool is_in_DA(const OrderedMonoid& m) { return satisfies_identity(m, da_identity()).holds; }
bool is_in_Jplus(const OrderedMonoid& m) { return satisfies_identity(m, jplus_identity()).holds; }

std::pair<TermPtr, TermPtr> build_um_vm(int m) {
  if (m < 1) throw input_error("hierarchy level must be >= 1");
  TermPtr u = OmegaTerm::one();
  TermPtr v = OmegaTerm::variable("z");
  for (int i = 2; i <= m; ++i) {
    const std::string suffix = std::to_string(i);
    TermPtr prefix = OmegaTerm::omega_power(
        OmegaTerm::product(v, OmegaTerm::variable("x" + suffix)));
    TermPtr suffix_pow = OmegaTerm::omega_power(
        OmegaTerm::product(OmegaTerm::variable("y" + suffix), v));
    TermPtr next_u = OmegaTerm::product(OmegaTerm::product(prefix, u), suffix_pow);
    TermPtr next_v = OmegaTerm::product(OmegaTerm::product(prefix, v), suffix_pow);
    u = next_u;
    v = next_v;
  }
  return {u, v};
}

int KdRelation::num_classes() const {
  return class_of.empty() ? 0 : *std::max_element(class_of.begin(), class_of.end()) + 1;
}

KdRelation kd_preorder(const OrderedMonoid& m) {
  const int n = m.size;
  const GreenData g = green(m);
  KdRelation kd;
  kd.below = BitMatrix(n, n);

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int s = 0; s < n && ok; ++s) {
        const int su = m.prod(s, u);
        const int sv = m.prod(s, v);
        for (int t = 0; t < n; ++t) {
          const int sut = m.prod(su, t);
          const int svt = m.prod(sv, t);
          if (g.r_eq(s, svt) && !g.r_eq(s, sut)) { ok = false; break; }
          if (g.l_eq(svt, t) && !g.l_eq(sut, t)) { ok = false; break; }
          if (g.r_eq(s, sv) && g.l_eq(m.prod(v, t), t) && !m.less_eq(sut, svt)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) kd.below.set(u, v);
    }

  kd.class_of.assign(n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (kd.class_of[u] >= 0) continue;
    kd.class_of[u] = next;
    for (int v = u + 1; v < n; ++v)
      if (kd.class_of[v] < 0 && kd.equiv(u, v)) kd.class_of[v] = next;
    ++next;
  }
  return kd;
}

KdQuotient kd_quotient(const OrderedMonoid& m) {
  const KdRelation kd = kd_preorder(m);
  const int n = m.size;
  const int q = kd.num_classes();

  std::vector<int> rep(q, -1);
  for (int u = 0; u < n; ++u)
    if (rep[kd.class_of[u]] < 0) rep[kd.class_of[u]] = u;

  KdQuotient out;
  out.projection = kd.class_of;
  out.monoid.size = q;
  out.monoid.neutral = kd.class_of[m.neutral];
  out.monoid.mul.resize(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      out.monoid.mul[static_cast<size_t>(a) * q + b] = kd.class_of[m.prod(rep[a], rep[b])];

  // The product must not depend on the chosen representatives.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (kd.class_of[m.prod(u, v)] !=
          out.monoid.prod(kd.class_of[u], kd.class_of[v]))
        throw invariant_error("KD quotient product depends on representatives");

  out.monoid.leq = BitMatrix(q, q);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (kd.below.at(u, v)) out.monoid.leq.set(kd.class_of[u], kd.class_of[v]);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a != b && out.monoid.leq.at(a, b) && out.monoid.leq.at(b, a))
        throw invariant_error("KD class order is not antisymmetric");

  for (auto& [c, img] : m.letters) out.monoid.letters[c] = kd.class_of[img];
  return out;
}

bool is_in_Mm_via_quotient(const OrderedMonoid& m, int level) {
  if (level < 1) throw input_error("hierarchy level must be >= 1");
  OrderedMonoid cur = m;
  for (int i = 1; i < level; ++i) cur = kd_quotient(cur).monoid;
  return is_in_Jplus(cur);
}

bool is_in_Mm_via_identity(const OrderedMonoid& m, int level, const IdentityBudget& budget) {
  if (level < 1) throw input_error("hierarchy level must be >= 1");
  if (!is_in_DA(m)) return false;
  auto [u, v] = build_um_vm(level);
  Identity id{u, v, Identity::Kind::LessEq};
  return satisfies_identity(m, id, budget).holds;
}

namespace {

// Canonical (partition of the original carrier, class order) fingerprint of a
// chain state, used for cycle detection.
struct ChainState {
  std::vector<int> partition;
  std::vector<uint64_t> order;
  bool operator<(const ChainState& o) const {
    if (partition != o.partition) return partition < o.partition;
    return order < o.order;
  }
};

ChainState fingerprint(const std::vector<int>& projection, const OrderedMonoid& quotient) {
  ChainState st;
  // Renumber classes by first occurrence along the original carrier.
  std::vector<int> renumber(quotient.size, -1);
  int next = 0;
  st.partition.reserve(projection.size());
  for (int cls : projection) {
    if (renumber[cls] < 0) renumber[cls] = next++;
    st.partition.push_back(renumber[cls]);
  }
  st.order.assign((static_cast<size_t>(quotient.size) * quotient.size + 63) / 64, 0);
  for (int a = 0; a < quotient.size; ++a)
    for (int b = 0; b < quotient.size; ++b)
      if (quotient.leq.at(a, b)) {
        const size_t bit = static_cast<size_t>(renumber[a]) * quotient.size + renumber[b];
        st.order[bit / 64] |= uint64_t{1} << (bit % 64);
      }
  return st;
}

}  // namespace

MinLevelResult min_level(const OrderedMonoid& m) {
  MinLevelResult res;
  if (!is_in_DA(m)) {
    res.diagnostic = "not in DA";
    return res;
  }

  OrderedMonoid cur = m;
  std::vector<int> projection(m.size);
  for (int i = 0; i < m.size; ++i) projection[i] = i;
  std::set<ChainState> seen;
  seen.insert(fingerprint(projection, cur));

  for (int level = 1;; ++level) {
    if (is_in_Jplus(cur)) {
      res.level = level;
      res.chain_length = level - 1;
      return res;
    }
    KdQuotient next = kd_quotient(cur);
    for (int& p : projection) p = next.projection[p];
    cur = std::move(next.monoid);
    res.chain_length = level;
    if (!seen.insert(fingerprint(projection, cur)).second) {
      res.diagnostic = "chain cycle";
      return res;
    }
  }
}

}  // namespace fo2alt
