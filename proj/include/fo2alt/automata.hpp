// automata.hpp
// * Operational input forms for languages over A^infty: NFAs for the finite
//   part, Buchi automata for the infinite part, ultimately periodic words and
//   the direct membership oracle on automata.

#ifndef FO2ALT_AUTOMATA_HPP
#define FO2ALT_AUTOMATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "fo2alt/errors.hpp"

namespace fo2alt {

/// Nondeterministic automaton skeleton: states are dense indices, letters are
/// positions in `alphabet`, delta[state][letter] is a sorted successor list.
struct AutomatonBase {
  std::string alphabet;
  std::vector<std::string> state_names;
  std::vector<std::vector<std::vector<int>>> delta;
  std::vector<bool> initial;

  int num_states() const { return static_cast<int>(state_names.size()); }
  int letter_index(char c) const {
    auto p = alphabet.find(c);
    if (p == std::string::npos)
      throw input_error(std::string("letter '") + c + "' is not in the automaton alphabet");
    return static_cast<int>(p);
  }
};

struct Nfa : AutomatonBase {
  std::vector<bool> final;
};

struct BuchiAutomaton : AutomatonBase {
  std::vector<bool> accepting;
};

/// Structural validation: nonempty alphabet, consistent shapes.
void validate_automaton(const AutomatonBase& a);

/// Ultimately periodic word prefix * period^w; an empty period denotes the
/// finite word `prefix`.
struct UpWord {
  std::string prefix;
  std::string period;

  bool finite() const { return period.empty(); }
  std::string to_string() const;
};

/// Parses `u(v)^w` or a bare finite word `u`; `eps` denotes the empty prefix.
UpWord parse_up_word(const std::string& text);

/// Direct membership: finite words run through the NFA, infinite words
/// through an accepting-lasso search on the Buchi automaton. A missing
/// component rejects the corresponding kind of word.
bool member_up_automaton(const std::optional<Nfa>& nfa,
                         const std::optional<BuchiAutomaton>& buchi, const UpWord& w);

bool nfa_accepts(const Nfa& a, const std::string& word);
bool buchi_accepts_lasso(const BuchiAutomaton& a, const std::string& prefix,
                         const std::string& period);

}  // namespace fo2alt

#endif  // FO2ALT_AUTOMATA_HPP
