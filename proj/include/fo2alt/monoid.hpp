// monoid.hpp
// * Finite ordered monoids, Green's relations, linked pairs, conjugacy and
//   the lesssim preorder on linked pairs.

#ifndef FO2ALT_MONOID_HPP
#define FO2ALT_MONOID_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fo2alt/bitmatrix.hpp"
#include "fo2alt/errors.hpp"

namespace fo2alt {

/// Finite monoid with a stable partial order. Elements are dense indices
/// 0..size-1; the multiplication table is row-major. `letters` maps alphabet
/// symbols to their images under the defining homomorphism and may be empty
/// for abstract monoids.
struct OrderedMonoid {
  int size = 0;
  int neutral = 0;
  std::vector<int> mul;  // size*size, row-major
  BitMatrix leq;         // leq.at(s,t) iff s <= t
  std::map<char, int> letters;

  int prod(int a, int b) const { return mul[static_cast<size_t>(a) * size + b]; }
  bool less_eq(int s, int t) const { return leq.at(s, t); }

  /// Image of a word under the letter homomorphism.
  int eval_word(const std::string& w) const;

  /// Trivially ordered monoid on one element.
  static OrderedMonoid trivial();
};

/// A pair (s,e) with s*e = s and e*e = e; the algebraic shadow of a
/// prefix/period decomposition of a word in A^infty.
struct LinkedPair {
  int s = 0;
  int e = 0;
  bool operator==(const LinkedPair&) const = default;
  auto operator<=>(const LinkedPair&) const = default;
};

/// Green's preorders by inclusion of principal ideals, plus the derived
/// equivalence classes.
struct GreenData {
  BitMatrix rleq, lleq, jleq;  // at(s,t) iff s <=_R t etc.

  bool r_eq(int s, int t) const { return rleq.at(s, t) && rleq.at(t, s); }
  bool l_eq(int s, int t) const { return lleq.at(s, t) && lleq.at(t, s); }
  bool j_eq(int s, int t) const { return jleq.at(s, t) && jleq.at(t, s); }

  std::vector<int> r_class_of;  // class ids, dense
  std::vector<int> l_class_of;
  std::vector<int> j_class_of;
};

struct ValidationIssue {
  std::string kind;           // "associativity", "neutral", "order-*", "stability", ...
  std::vector<int> witness;   // offending element indices
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const { return issues.empty(); }
};

/// Checks every OrderedMonoid invariant exhaustively and reports all
/// violations with witnesses instead of throwing.
ValidationReport validate(const OrderedMonoid& m);

/// The unique idempotent among the powers s, s^2, s^3, ...; equals s^{omega}
/// for any global idempotent exponent of the monoid.
int idempotent_power(const OrderedMonoid& m, int s);

GreenData green(const OrderedMonoid& m);

std::vector<LinkedPair> linked_pairs(const OrderedMonoid& m);

bool is_linked(const OrderedMonoid& m, LinkedPair p);

/// (s,e) ~ (t,f): exist x,y with s*x = t, x*y = e, y*x = f. Brute force over
/// all witness pairs.
bool is_conjugate(const OrderedMonoid& m, LinkedPair p, LinkedPair q);

/// (s,e) lesssim (t,f): exists r with (r,f) linked, (s,e) ~ (r,f) and r <= t.
bool lesssim(const OrderedMonoid& m, LinkedPair p, LinkedPair q);

/// Componentwise product with componentwise order; letters present in both
/// factors are mapped componentwise.
OrderedMonoid direct_product(const OrderedMonoid& a, const OrderedMonoid& b);

/// Powerset of the alphabet under union, ordered by inclusion; the letter a
/// maps to the singleton {a}. Element index = bitmask over alphabet positions.
OrderedMonoid powerset_alphabet_monoid(const std::string& alphabet);

}  // namespace fo2alt

#endif  // FO2ALT_MONOID_HPP
