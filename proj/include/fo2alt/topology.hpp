// topology.hpp
// * Openness of a recognized language in the Cantor and alphabetic topologies
//   on A^infty and their omega-restrictions.

#ifndef FO2ALT_TOPOLOGY_HPP
#define FO2ALT_TOPOLOGY_HPP

#include <optional>
#include <utility>

#include "fo2alt/language.hpp"

namespace fo2alt {

enum class TopologyKind { CantorInfty, AlphabeticInfty, CantorOmega, AlphabeticOmega };

const char* topology_kind_name(TopologyKind k);

struct OpenResult {
  bool open = true;
  // First offending pair in scan order: an accepted pair whose basic
  // neighborhood leaves the language at the second pair.
  std::optional<std::pair<LinkedPair, LinkedPair>> witness;
};

/// Openness test on an alphabetic recognizer. Acceptance of (s,e) forces the
/// basic neighborhood [s]A^infty (Cantor) resp. [s]C^infty with C the letters
/// of e (alphabetic) inside the language; the criterion checks that every
/// linked pair reachable inside that neighborhood is accepted. The omega
/// variants quantify only over pairs of infinite words (e != 1, f != 1).
/// Requires a recognizer on which words with equal image have equal alphabet
/// (make_alphabetic output); otherwise an input_error is thrown.
OpenResult is_open(const RecognizedLanguage& l, TopologyKind kind);

}  // namespace fo2alt

#endif  // FO2ALT_TOPOLOGY_HPP
