// classifier.hpp
// * Top-level decision procedures: minimal alternation level of a recognized
//   language over A^infty, A^omega or A^*, and formula synthesis for level 1.

#ifndef FO2ALT_CLASSIFIER_HPP
#define FO2ALT_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fo2alt/language.hpp"
#include "fo2alt/logic.hpp"
#include "fo2alt/topology.hpp"
#include "fo2alt/varieties.hpp"

namespace fo2alt {

enum class Universe { Infty, Omega, Star };

const char* universe_name(Universe u);

struct Classification {
  Universe universe = Universe::Infty;
  bool fo2_definable = false;
  std::optional<int> level;
  std::string diagnostic;  // populated when level is absent

  // Evidence.
  int syntactic_size = 0;
  std::optional<int> monoid_min_level;
  std::optional<bool> cantor_open;      // absent for the star universe
  std::optional<bool> alphabetic_open;  // absent for the star universe
  std::optional<std::pair<LinkedPair, LinkedPair>> cantor_witness;
  std::optional<std::pair<LinkedPair, LinkedPair>> alphabetic_witness;
};

/// Classifies through the syntactic quotient: level 1 additionally needs
/// Cantor openness, level 2 alphabetic openness, levels >= 3 are purely
/// algebraic; the star universe carries no topological side conditions.
Classification classify(const RecognizedLanguage& l, Universe universe);

/// Subword-minimal finite words of the finite part of the language,
/// enumerated in length-lexicographic order. Finite by Higman's lemma.
std::vector<std::string> minimal_subwords(const RecognizedLanguage& l);

struct SynthesisResult {
  FormulaPtr formula;
  std::vector<std::string> minimal_words;
};

/// For a level-1 language: the disjunction over the minimal subwords u of the
/// alternating two-variable formula stating that u occurs as a subword.
SynthesisResult synthesize_sigma21_formula(const RecognizedLanguage& l);

/// The alternating exists-formula for "u is a subword"; the empty word gives
/// the true formula.
FormulaPtr subword_formula(const std::string& u);

}  // namespace fo2alt

#endif  // FO2ALT_CLASSIFIER_HPP
