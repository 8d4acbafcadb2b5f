// language.hpp
// * Recognition of languages over A^infty by ordered monoids with linked-pair
//   acceptance: transition monoids, the alphabetic construction, ultimately
//   periodic membership and the syntactic quotient.

#ifndef FO2ALT_LANGUAGE_HPP
#define FO2ALT_LANGUAGE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fo2alt/automata.hpp"
#include "fo2alt/monoid.hpp"

namespace fo2alt {

/// Operational provenance of a recognized language, kept for sampled
/// cross-checks against the automaton membership oracle.
struct LanguageAutomata {
  std::optional<Nfa> nfa;
  std::optional<BuchiAutomaton> buchi;
};

/// A language L in A^infty in algebraic form: an ordered monoid whose letters
/// map is total together with the set of accepting linked pairs. Acceptance
/// must be closed under conjugacy and upward closed in the order.
struct RecognizedLanguage {
  OrderedMonoid monoid;
  BitMatrix accept;  // accept.at(s,e) for linked pairs (s,e)
  std::shared_ptr<const LanguageAutomata> provenance;

  std::string alphabet() const;
  bool accepts(int s, int e) const { return accept.at(s, e); }
  std::vector<LinkedPair> accept_pairs() const;
};

struct MonoidCaps {
  int max_elements = 5000;
};

/// Transition monoid of a Buchi automaton: matrices over
/// {no path, path, path through an accepting state}, trivially ordered,
/// with acceptance of the linked pairs that witness an accepting lasso.
/// Recognizes L(B) as a subset of A^omega.
RecognizedLanguage buchi_transition_monoid(const BuchiAutomaton& b,
                                           const MonoidCaps& caps = {});

struct NfaMonoid {
  OrderedMonoid monoid;             // boolean transition matrices, trivially ordered
  std::vector<bool> final_element;  // connects an initial to a final state
};

NfaMonoid nfa_transition_monoid(const Nfa& n, const MonoidCaps& caps = {});

/// Recognizer for the disjoint union of a finite-word part (NFA) and an
/// infinite-word part (Buchi automaton) over a shared alphabet: alphabetic
/// accessible product of the two transition monoids. In the result the
/// neutral element is the image of the empty word only, so pairs (s,1)
/// capture exactly the finite words.
RecognizedLanguage combine_infty(const std::optional<Nfa>& nfa,
                                 const std::optional<BuchiAutomaton>& buchi,
                                 const MonoidCaps& caps = {});

/// Accessible part of M x 2^A with the componentwise order and acceptance
/// lifted along the projection; recognizes the same language.
RecognizedLanguage make_alphabetic(const RecognizedLanguage& l);

/// Membership of an ultimately periodic word through the recognizer: finite
/// words test (mu(u), 1); for u v^w the pair (mu(u) e, e) with e the
/// idempotent power of mu(v).
bool member_up_monoid(const RecognizedLanguage& l, const UpWord& w);

/// Syntactic ordered monoid: quotient by the two-sided context preorder with
/// finite and omega contexts, computed over recognizer elements. The result
/// recognizes the same language and never enlarges the recognizer.
RecognizedLanguage syntactic_quotient(const RecognizedLanguage& l);

/// Structural validation of the RecognizedLanguage invariants, plus a sampled
/// agreement check against the automaton oracle when provenance is attached.
ValidationReport validate_recognition(const RecognizedLanguage& l, int samples = 1000,
                                      uint64_t seed = 1);

/// Isomorphism of letter-generated recognizers (the unique letter-respecting
/// bijection exists and preserves product, order and acceptance).
bool recognizers_isomorphic(const RecognizedLanguage& a, const RecognizedLanguage& b);

}  // namespace fo2alt

#endif  // FO2ALT_LANGUAGE_HPP
