// json_io.hpp
// * JSON (de)serialization for the monoid, automaton and language file
//   formats consumed by the CLI.

#ifndef FO2ALT_JSON_IO_HPP
#define FO2ALT_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "fo2alt/automata.hpp"
#include "fo2alt/language.hpp"
#include "fo2alt/monoid.hpp"

namespace fo2alt {

using ojson = nlohmann::ordered_json;

/// Parses a file, reporting parse errors with byte positions.
nlohmann::json load_json_file(const std::string& path);

/// {"size": n, "neutral": i, "mul": [[...]], "order": [[s,t],...],
///  "letters": {"a": i, ...}}; reflexive order pairs may be omitted, the
/// transitive closure is applied and antisymmetry re-verified.
OrderedMonoid monoid_from_json(const nlohmann::json& j);
ojson monoid_to_json(const OrderedMonoid& m);

/// {"states": [...], "alphabet": [...], "initial": [...],
///  "transitions": [[q,"a",q'],...], "final"/"accepting": [...]}
Nfa nfa_from_json(const nlohmann::json& j);
BuchiAutomaton buchi_from_json(const nlohmann::json& j);
ojson nfa_to_json(const Nfa& a);
ojson buchi_to_json(const BuchiAutomaton& a);

struct LanguageInput {
  std::optional<Nfa> nfa;
  std::optional<BuchiAutomaton> buchi;
};

/// {"finite": <nfa or null>, "infinite": <buchi or null>}
LanguageInput language_from_json(const nlohmann::json& j);

}  // namespace fo2alt

#endif  // FO2ALT_JSON_IO_HPP
