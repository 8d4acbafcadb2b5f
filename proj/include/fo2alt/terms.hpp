// terms.hpp
// * Omega-terms (formal products and omega-powers over variables),
//   identities, interpretation into a finite ordered monoid, and exhaustive
//   identity checking.

#ifndef FO2ALT_TERMS_HPP
#define FO2ALT_TERMS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fo2alt/monoid.hpp"

namespace fo2alt {

struct OmegaTerm;
using TermPtr = std::shared_ptr<const OmegaTerm>;

/// Term tree; subterms are shared, so repeated occurrences (as in the U_m/V_m
/// family) evaluate once per interpretation.
struct OmegaTerm {
  enum class Kind { One, Variable, Product, OmegaPower };
  Kind kind;
  std::string var;     // Variable
  TermPtr left, right; // Product: left*right; OmegaPower: left

  static TermPtr one();
  static TermPtr variable(std::string name);
  static TermPtr product(TermPtr a, TermPtr b);
  static TermPtr omega_power(TermPtr a);
};

/// Variables occurring in the term, sorted and deduplicated.
std::vector<std::string> term_variables(const TermPtr& t);

std::string term_to_string(const TermPtr& t);

/// Parses the CLI term syntax: `1`, variables [a-z][a-z0-9]*, explicit `*`
/// for products, `^w` for the omega-power, parentheses.
TermPtr parse_term(const std::string& text);

struct Identity {
  enum class Kind { LessEq, Equal };
  TermPtr lhs, rhs;
  Kind kind = Kind::LessEq;

  std::vector<std::string> variables() const;
};

/// Parses `<term> <= <term>` or `<term> = <term>`.
Identity parse_identity(const std::string& text);
std::string identity_to_string(const Identity& id);

using Interpretation = std::map<std::string, int>;

/// Evaluates a term under an interpretation of its variables: I(1) is the
/// neutral element, products multiply, and the omega-power takes the unique
/// idempotent power. Shared subterms are memoized per call.
int eval_term(const TermPtr& t, const Interpretation& itp, const OrderedMonoid& m);

struct IdentityCheck {
  bool holds = true;
  std::optional<Interpretation> counterexample;  // lexicographically least
};

struct IdentityBudget {
  // Refuse blow-ups: more than max_variables variables on a monoid larger
  // than large_monoid, or more than max_interpretations interpretations.
  int max_variables = 6;
  int large_monoid = 8;
  long long max_interpretations = 10'000'000;
};

/// Exhaustive check over all |M|^{#vars} interpretations, in lexicographic
/// order of variable assignments.
IdentityCheck satisfies_identity(const OrderedMonoid& m, const Identity& id,
                                 const IdentityBudget& budget = {});

}  // namespace fo2alt

#endif  // FO2ALT_TERMS_HPP
