// fixtures.hpp
// * Shared test fixtures: classic monoids, the transformation-submonoid
//   corpus of ordered monoids, and the curated language set with automata.

#ifndef FO2ALT_TESTS_FIXTURES_HPP
#define FO2ALT_TESTS_FIXTURES_HPP

#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "fo2alt/classifier.hpp"
#include "fo2alt/language.hpp"
#include "fo2alt/monoid.hpp"

namespace fo2alt::fixtures {

/// The multiplicative monoid {1,0} (element 0 is the identity, element 1 is
/// the zero); with_order places 0 below 1 as in the running example.
OrderedMonoid two_element_zero(bool zero_below_one);

/// Cyclic group of order k, trivially ordered, generated by element 1.
OrderedMonoid cyclic_group(int k);

Nfa make_nfa(const std::string& alphabet, int states, const std::vector<int>& initial,
             const std::vector<int>& final,
             const std::vector<std::tuple<int, char, int>>& transitions);

BuchiAutomaton make_buchi(const std::string& alphabet, int states,
                          const std::vector<int>& initial, const std::vector<int>& accepting,
                          const std::vector<std::tuple<int, char, int>>& transitions);

struct CorpusEntry {
  std::string name;
  OrderedMonoid monoid;
};

/// Valid ordered monoids with at most max_size elements: submonoids of the
/// full transformation monoids on <= 3 points, each equipped with the trivial
/// order and with the stable partial orders obtained by closing random seed
/// pairs under stability and discarding non-antisymmetric results.
/// Deterministic for a fixed seed; at least min_count entries.
std::vector<CorpusEntry> ordered_monoid_corpus(int min_count = 200, int max_size = 6,
                                               uint64_t seed = 20240901);

struct CuratedLanguage {
  std::string name;
  std::optional<Nfa> nfa;
  std::optional<BuchiAutomaton> buchi;
  RecognizedLanguage lang;
  Universe universe = Universe::Infty;
};

/// The curated language set over {a,b}: contains-a, contains-subword-ab,
/// finitely-many-a, infinitely-many-a, even-number-of-a (finite words),
/// the empty language, all words, and A* b^omega.
std::vector<CuratedLanguage> curated_languages();

/// Pairs of structurally different automata for the same language, for
/// recognizer-invariance checks.
std::vector<std::pair<CuratedLanguage, CuratedLanguage>> same_language_pairs();

/// Uniform random ultimately periodic word over the alphabet.
UpWord random_up_word(std::mt19937_64& rng, const std::string& alphabet, int max_len = 8,
                      bool allow_finite = true, bool allow_infinite = true);

}  // namespace fo2alt::fixtures

#endif  // FO2ALT_TESTS_FIXTURES_HPP
