// test_language.cpp

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "fo2alt/language.hpp"

using namespace fo2alt;
using fixtures::make_buchi;
using fixtures::make_nfa;

namespace {

UpWord up(const std::string& prefix, const std::string& period = "") {
  return UpWord{prefix, period};
}

const fixtures::CuratedLanguage& curated(const std::string& name) {
  static const std::vector<fixtures::CuratedLanguage> all = fixtures::curated_languages();
  for (const auto& cl : all)
    if (cl.name == name) return cl;
  throw std::logic_error("unknown curated language " + name);
}

}  // namespace

TEST_CASE("buchi transition monoid of finitely-many-a stays small and is exact") {
  const auto& cl = curated("finitely-many-a");
  CHECK(cl.lang.monoid.size <= 9 * 4);  // matrices times alphabet masks
  const RecognizedLanguage plain = buchi_transition_monoid(*cl.buchi);
  CHECK(plain.monoid.size <= 9);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const UpWord w = fixtures::random_up_word(rng, "ab", 8, false, true);
    CHECK(member_up_monoid(plain, w) == buchi_accepts_lasso(*cl.buchi, w.prefix, w.period));
  }
}

TEST_CASE("buchi transition monoid of the empty language accepts nothing") {
  const BuchiAutomaton b = make_buchi("ab", 1, {0}, {}, {{0, 'a', 0}, {0, 'b', 0}});
  const RecognizedLanguage l = buchi_transition_monoid(b);
  CHECK(l.accept_pairs().empty());
}

TEST_CASE("buchi transition monoid over a singleton alphabet accepts a^omega") {
  const BuchiAutomaton b = make_buchi("a", 1, {0}, {0}, {{0, 'a', 0}});
  const RecognizedLanguage l = buchi_transition_monoid(b);
  CHECK(member_up_monoid(l, up("", "a")));
  CHECK_FALSE(l.accept_pairs().empty());
}

TEST_CASE("nfa transition monoid examples") {
  // Words containing the letter a: the two matrices are "no a seen yet" and
  // "a seen", so the monoid has two elements.
  const Nfa contains_a =
      make_nfa("ab", 2, {0}, {1}, {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 1}});
  const NfaMonoid nm = nfa_transition_monoid(contains_a);
  CHECK(nm.monoid.size == 2);
  CHECK(nm.final_element[nm.monoid.eval_word("a")]);
  CHECK_FALSE(nm.final_element[nm.monoid.eval_word("b")]);

  const Nfa empty = make_nfa("ab", 1, {0}, {}, {{0, 'a', 0}, {0, 'b', 0}});
  const NfaMonoid ne = nfa_transition_monoid(empty);
  for (bool f : ne.final_element) CHECK_FALSE(f);

  // The language {eps}: only the neutral element connects initial to final.
  const Nfa just_eps = make_nfa("a", 1, {0}, {0}, {});
  const NfaMonoid je = nfa_transition_monoid(just_eps);
  CHECK(je.final_element[je.monoid.neutral]);
  for (int e = 0; e < je.monoid.size; ++e)
    if (e != je.monoid.neutral) CHECK_FALSE(je.final_element[e]);
}

TEST_CASE("combined recognizers answer the worked membership examples") {
  // Finite words containing a; no infinite part.
  const RecognizedLanguage fin_contains_a = combine_infty(
      make_nfa("ab", 2, {0}, {1}, {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 1}}),
      std::nullopt);
  CHECK(member_up_monoid(fin_contains_a, up("a")));
  CHECK_FALSE(member_up_monoid(fin_contains_a, up("b")));
  CHECK_FALSE(member_up_monoid(fin_contains_a, up("a", "b")));

  const auto& fin_a = curated("finitely-many-a");
  CHECK(member_up_monoid(fin_a.lang, up("a", "b")));
  CHECK_FALSE(member_up_monoid(fin_a.lang, up("", "ab")));
  CHECK_FALSE(member_up_monoid(fin_a.lang, up("", "a")));

  const auto& all = curated("all");
  for (const LinkedPair& p : linked_pairs(all.lang.monoid))
    CHECK(all.lang.accepts(p.s, p.e));
}

TEST_CASE("membership through automata answers the worked examples") {
  const auto& fin_a = curated("finitely-many-a");
  const Nfa contains_a =
      make_nfa("ab", 2, {0}, {1}, {{0, 'a', 1}, {0, 'b', 0}, {1, 'a', 1}, {1, 'b', 1}});
  CHECK(member_up_automaton(contains_a, std::nullopt, up("ab")));
  CHECK(member_up_automaton(std::nullopt, fin_a.buchi, up("a", "b")));
  CHECK_FALSE(member_up_automaton(std::nullopt, fin_a.buchi, up("", "ab")));
}

TEST_CASE("membership of the empty word is the acceptance of the neutral pair") {
  const auto& all = curated("all");
  CHECK(member_up_monoid(all.lang, up("")) ==
        all.lang.accepts(all.lang.monoid.neutral, all.lang.monoid.neutral));
  CHECK(member_up_monoid(all.lang, up("")));
  const auto& empty = curated("empty");
  CHECK_FALSE(member_up_monoid(empty.lang, up("")));
}

TEST_CASE("monoid and automaton membership agree on sampled words for every curated language") {
  std::mt19937_64 rng(20240902);
  for (const auto& cl : fixtures::curated_languages()) {
    for (int i = 0; i < 1000; ++i) {
      const UpWord w = fixtures::random_up_word(rng, "ab", 8);
      CHECK(member_up_monoid(cl.lang, w) == member_up_automaton(cl.nfa, cl.buchi, w));
    }
  }
}

TEST_CASE("syntactic monoid of finitely-many-a has the three expected classes") {
  // Hand derivation: contexts can only distinguish the empty word, nonempty
  // words without a, and words with an a. Inserting b or removing a factor
  // keeps "finitely many a", hence [eps] <= [b] and [a] <= [eps] <= [b] in
  // the syntactic order, with [a] <= [eps] since dropping an a-factor can
  // only help membership.
  const RecognizedLanguage syn = syntactic_quotient(curated("finitely-many-a").lang);
  const OrderedMonoid& m = syn.monoid;
  CHECK(m.size == 3);
  const int e = m.neutral;
  const int b = m.eval_word("b");
  const int a = m.eval_word("a");
  CHECK(e != b);
  CHECK(b != a);
  CHECK(m.less_eq(e, b));
  CHECK(m.less_eq(a, e));
  CHECK(m.less_eq(a, b));
  CHECK_FALSE(m.less_eq(b, e));
  CHECK_FALSE(m.less_eq(e, a));
}

TEST_CASE("syntactic monoid of the full language is trivial") {
  CHECK(syntactic_quotient(curated("all").lang).monoid.size == 1);
}

TEST_CASE("syntactic monoid of contains-a is the two-element J+ monoid") {
  const RecognizedLanguage syn = syntactic_quotient(curated("contains-a").lang);
  const OrderedMonoid& m = syn.monoid;
  CHECK(m.size == 2);
  CHECK(m.less_eq(m.neutral, m.eval_word("a")));
  CHECK(m.eval_word("b") == m.neutral);
}

TEST_CASE("syntactic quotient never enlarges and is idempotent up to isomorphism") {
  for (const auto& cl : fixtures::curated_languages()) {
    const RecognizedLanguage syn = syntactic_quotient(cl.lang);
    CHECK(syn.monoid.size <= cl.lang.monoid.size);
    const RecognizedLanguage syn2 = syntactic_quotient(syn);
    CHECK(recognizers_isomorphic(syn, syn2));
  }
}

TEST_CASE("the syntactic quotient recognizes the same language on samples") {
  std::mt19937_64 rng(5);
  for (const auto& cl : fixtures::curated_languages()) {
    const RecognizedLanguage syn = syntactic_quotient(cl.lang);
    for (int i = 0; i < 300; ++i) {
      const UpWord w = fixtures::random_up_word(rng, "ab", 8);
      CHECK(member_up_monoid(syn, w) == member_up_monoid(cl.lang, w));
    }
  }
}

TEST_CASE("acceptance is closed under lesssim for every curated language") {
  for (const auto& cl : fixtures::curated_languages()) {
    const OrderedMonoid& m = cl.lang.monoid;
    const std::vector<LinkedPair> pairs = linked_pairs(m);
    for (const LinkedPair& p : pairs) {
      if (!cl.lang.accepts(p.s, p.e)) continue;
      for (const LinkedPair& q : pairs)
        if (lesssim(m, p, q)) CHECK(cl.lang.accepts(q.s, q.e));
    }
  }
}

TEST_CASE("validation is clean on constructed recognizers") {
  for (const auto& cl : fixtures::curated_languages()) {
    const ValidationReport rep = validate_recognition(cl.lang, 500, 11);
    CHECK(rep.valid());
  }
}

TEST_CASE("validation flags a missing conjugate pair") {
  RecognizedLanguage l = curated("infinitely-many-a").lang;
  // Find two distinct conjugated accepted pairs and drop one.
  const std::vector<LinkedPair> pairs = linked_pairs(l.monoid);
  bool planted = false;
  for (const LinkedPair& p : pairs) {
    if (planted || !l.accepts(p.s, p.e)) continue;
    for (const LinkedPair& q : pairs) {
      if (p == q || !l.accepts(q.s, q.e)) continue;
      if (is_conjugate(l.monoid, p, q)) {
        l.accept.set(q.s, q.e, false);
        planted = true;
        break;
      }
    }
  }
  REQUIRE(planted);
  const ValidationReport rep = validate_recognition(l, 0, 1);
  bool flagged = false;
  for (const auto& issue : rep.issues)
    if (issue.kind == "accept-conjugacy") flagged = true;
  CHECK(flagged);
}

TEST_CASE("validation accepts a hand-built recognizer with every linked pair accepted") {
  RecognizedLanguage l;
  l.monoid = powerset_alphabet_monoid("ab");
  l.accept = BitMatrix(l.monoid.size, l.monoid.size);
  for (const LinkedPair& p : linked_pairs(l.monoid)) l.accept.set(p.s, p.e);
  CHECK(validate_recognition(l).valid());
}

TEST_CASE("make_alphabetic separates alphabets and keeps the language") {
  const RecognizedLanguage contains_a = curated("contains-a").lang;
  const RecognizedLanguage alpha = make_alphabetic(contains_a);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const UpWord w = fixtures::random_up_word(rng, "ab", 8);
    CHECK(member_up_monoid(alpha, w) == member_up_monoid(contains_a, w));
  }
  // Only the empty word maps to the neutral element.
  CHECK(alpha.monoid.eval_word("b") != alpha.monoid.neutral);
  CHECK(alpha.monoid.eval_word("bb") != alpha.monoid.neutral);

  // Idempotence up to isomorphism.
  const RecognizedLanguage alpha2 = make_alphabetic(alpha);
  CHECK(recognizers_isomorphic(alpha, alpha2));
}

TEST_CASE("a trivial recognizer of everything stays total after make_alphabetic") {
  RecognizedLanguage l;
  l.monoid = OrderedMonoid::trivial();
  l.monoid.letters['a'] = 0;
  l.monoid.letters['b'] = 0;
  l.accept = BitMatrix(1, 1);
  l.accept.set(0, 0);
  const RecognizedLanguage alpha = make_alphabetic(l);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const UpWord w = fixtures::random_up_word(rng, "ab", 6);
    CHECK(member_up_monoid(alpha, w));
  }
}
