// test_topology.cpp

#include "doctest.h"
#include "fixtures.hpp"
#include "fo2alt/topology.hpp"

using namespace fo2alt;

namespace {

const fixtures::CuratedLanguage& curated(const std::string& name) {
  static const std::vector<fixtures::CuratedLanguage> all = fixtures::curated_languages();
  for (const auto& cl : all)
    if (cl.name == name) return cl;
  throw std::logic_error("unknown curated language " + name);
}

}  // namespace

TEST_CASE("contains-a is open in the Cantor topology on all words") {
  // Hand check: a word is in the language iff some finite prefix contains a,
  // and every extension of such a prefix stays in the language.
  CHECK(is_open(curated("contains-a").lang, TopologyKind::CantorInfty).open);
  CHECK(is_open(curated("contains-a").lang, TopologyKind::AlphabeticInfty).open);
}

TEST_CASE("finitely-many-a is alphabetically but not Cantor open on infinite words") {
  // Hand check: a b^omega has no Cantor neighborhood u A^omega inside the
  // language since u A^omega always contains words with infinitely many a;
  // the alphabetic basic set u {b}^omega works.
  const RecognizedLanguage& l = curated("finitely-many-a").lang;
  const OpenResult cantor = is_open(l, TopologyKind::CantorOmega);
  CHECK_FALSE(cantor.open);
  CHECK(cantor.witness.has_value());
  CHECK(is_open(l, TopologyKind::AlphabeticOmega).open);
}

TEST_CASE("infinitely-many-a is not alphabetically open") {
  // Hand check: around (ab)^omega every alphabetic basic set u B^omega with
  // a,b in B also contains u b^omega, which leaves the language.
  const RecognizedLanguage& l = curated("infinitely-many-a").lang;
  CHECK_FALSE(is_open(l, TopologyKind::AlphabeticOmega).open);
  CHECK_FALSE(is_open(l, TopologyKind::CantorOmega).open);
}

TEST_CASE("the empty language and the full language are open in all four topologies") {
  for (const char* name : {"empty", "all"})
    for (TopologyKind k : {TopologyKind::CantorInfty, TopologyKind::AlphabeticInfty,
                           TopologyKind::CantorOmega, TopologyKind::AlphabeticOmega})
      CHECK(is_open(curated(name).lang, k).open);
}

TEST_CASE("Cantor openness implies alphabetic openness on every curated language") {
  for (const auto& cl : fixtures::curated_languages()) {
    if (is_open(cl.lang, TopologyKind::CantorInfty).open)
      CHECK(is_open(cl.lang, TopologyKind::AlphabeticInfty).open);
    if (is_open(cl.lang, TopologyKind::CantorOmega).open)
      CHECK(is_open(cl.lang, TopologyKind::AlphabeticOmega).open);
  }
}

TEST_CASE("openness requires an alphabetic recognizer") {
  // The syntactic monoid of contains-a maps the nonempty word b to the
  // neutral element, so it is not alphabetic.
  const RecognizedLanguage syn = syntactic_quotient(curated("contains-a").lang);
  CHECK_THROWS_AS(is_open(syn, TopologyKind::CantorInfty), input_error);
  CHECK(is_open(make_alphabetic(syn), TopologyKind::CantorInfty).open);
}
