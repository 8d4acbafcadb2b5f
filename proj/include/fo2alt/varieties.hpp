// varieties.hpp
// * The varieties A, DA and J+, the KD preorder and its quotient, the
//   U_m/V_m identity family and membership in the hierarchy classes M_m.

#ifndef FO2ALT_VARIETIES_HPP
#define FO2ALT_VARIETIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fo2alt/monoid.hpp"
#include "fo2alt/terms.hpp"

namespace fo2alt {

bool is_in_A(const OrderedMonoid& m);       // x^w x = x^w
bool is_in_DA(const OrderedMonoid& m);      // (xyz)^w y (xyz)^w = (xyz)^w
bool is_in_Jplus(const OrderedMonoid& m);   // 1 <= z

/// The identity family over x2..xm, y2..ym, z:
///   U_1 = 1, V_1 = z,
///   U_m = (V_{m-1} x_m)^w U_{m-1} (y_m V_{m-1})^w,
///   V_m = (V_{m-1} x_m)^w V_{m-1} (y_m V_{m-1})^w.
/// The returned trees share the power subterms and the previous level.
std::pair<TermPtr, TermPtr> build_um_vm(int m);

/// The KD preorder on the carrier of a monoid: u is below v when for all s,t
///   (i)  s R s*v*t implies s R s*u*t,
///   (ii) s*v*t L t implies s*u*t L t,
///   (iii) s R s*v and v*t L t imply s*u*t <= s*v*t.
struct KdRelation {
  BitMatrix below;           // below.at(u,v) iff u is KD-below v
  std::vector<int> class_of; // induced equivalence classes, dense ids

  bool equiv(int u, int v) const { return below.at(u, v) && below.at(v, u); }
  int num_classes() const;
};

KdRelation kd_preorder(const OrderedMonoid& m);

struct KdQuotient {
  OrderedMonoid monoid;         // carrier = KD classes, order induced by the preorder
  std::vector<int> projection;  // original element -> class index
};

/// Quotient by the KD equivalence with the class order [u] <= [v] iff u is
/// KD-below v. Representative independence of the product and antisymmetry of
/// the class order are asserted; the projection need not be monotone.
KdQuotient kd_quotient(const OrderedMonoid& m);

/// M_1 = J+; M_m = preimage of M_{m-1} under the KD quotient.
bool is_in_Mm_via_quotient(const OrderedMonoid& m, int level);

/// M_m = [[U_m <= V_m]] intersected with DA.
bool is_in_Mm_via_identity(const OrderedMonoid& m, int level,
                           const IdentityBudget& budget = {});

struct MinLevelResult {
  std::optional<int> level;
  std::string diagnostic;       // "not in DA" or "chain cycle" when level is absent
  int chain_length = 0;         // quotients applied before the verdict
};

/// Smallest m with M in M_m, by iterating the KD quotient until J+ holds.
/// Detects revisited (partition, class order) states and reports a cycle
/// instead of looping.
MinLevelResult min_level(const OrderedMonoid& m);

}  // namespace fo2alt

#endif  // FO2ALT_VARIETIES_HPP
