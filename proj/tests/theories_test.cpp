#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "csw/errors.hpp"
#include "csw/rng.hpp"
#include "csw/theories.hpp"
#include "csw/validate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/tmpdir.hpp"

using namespace csw;
using namespace cswtest;

namespace {

std::vector<std::string> candidate_strings(const GenerationSet& gens) {
  std::vector<std::string> out;
  for (const Augmentation& a : gens.candidates) out.push_back(detokenize(a.mixed_src));
  return out;
}

bool contains(const std::vector<std::string>& haystack, const std::string& needle) {
  return std::find(haystack.begin(), haystack.end(), needle) != haystack.end();
}

}  // namespace

TEST_CASE("order-preserving generation on the golden sentence") {
  BiSentence s = golden();
  GenerationSet gens = generate_ec(s);
  std::vector<std::string> strings = candidate_strings(gens);

  CHECK(contains(strings, kGoldenEcSwitch));          // switch at the verb
  CHECK(contains(strings, kGoldenMlSwitch));          // full noun phrase works too
  CHECK_FALSE(contains(strings, kGoldenPredRow));     // lone adjective crosses

  for (const Augmentation& a : gens.candidates) {
    CHECK(is_complete(a, s));
    CHECK(validate_augmentation(a, s).empty());
    for (const ReplacedSpan& r : a.replaced_spans) {
      REQUIRE(r.tgt.has_value());
      CHECK(r.src != Span{4, 5});  // ايطالي alone never switches
    }
  }
}

TEST_CASE("a tree restricts order-preserving segments to constituents") {
  BiSentence with_tree = golden();
  BiSentence no_tree = golden(false);

  // عايز <-> "want to" is order-preserving but not a constituent
  std::string want_to = kGoldenRandSegRow;
  CHECK_FALSE(contains(candidate_strings(generate_ec(with_tree)), want_to));
  CHECK(contains(candidate_strings(generate_ec(no_tree)), want_to));
}

TEST_CASE("single-token pair generates nothing mixed") {
  BiSentence tiny = make_sentence("T", "باي", "bye", "0-0");
  CHECK(generate_ec(tiny).candidates.empty());
}

TEST_CASE("enumeration is deterministic and capped") {
  BiSentence s = golden(false);
  GenerationSet a = generate_ec(s);
  GenerationSet b = generate_ec(s);
  CHECK(candidate_strings(a) == candidate_strings(b));

  GenerationSet capped = generate_ec(s, 3);
  CHECK(capped.candidates.size() == 3);
  std::vector<std::string> full = candidate_strings(a);
  std::vector<std::string> head = candidate_strings(capped);
  CHECK(std::equal(head.begin(), head.end(), full.begin()));
}

TEST_CASE("order-preserving candidates match exhaustive subset enumeration") {
  Rng rng(71);
  int exercised = 0;
  for (int round = 0; round < 300; ++round) {
    BiSentence s = random_sentence(rng, 6);
    std::vector<std::string> expected = oracle_ec_strings(s, 6);
    GenerationSet gens = generate_ec(s, 1 << 20, 6);
    std::vector<std::string> got = candidate_strings(gens);
    std::sort(got.begin(), got.end());
    REQUIRE(got == expected);
    if (!expected.empty()) ++exercised;

    // every candidate re-validates: consistency and order preservation hold
    // for each replaced segment
    for (const Augmentation& a : gens.candidates) {
      CHECK(is_complete(a, s));
      for (const ReplacedSpan& r : a.replaced_spans) {
        SegmentPair seg{r.src, *r.tgt};
        CHECK(is_consistent(s.alignment, seg));
        CHECK(order_preserving(s, seg));
      }
    }
  }
  CHECK(exercised > 50);  // the corpus actually produced candidates
}

TEST_CASE("matrix-language generation on the golden sentence") {
  BiSentence s = golden();
  GenerationSet gens = generate_mlf(s);
  std::vector<std::string> strings = candidate_strings(gens);

  CHECK(contains(strings, kGoldenMlSwitch));  // the noun phrase unit
  for (const Augmentation& a : gens.candidates) {
    CHECK(is_complete(a, s));
    CHECK(validate_augmentation(a, s).empty());
  }
}

TEST_CASE("matrix-language generation requires a tree") {
  CHECK_THROWS_AS(generate_mlf(golden(false)), UsageError);
}

TEST_CASE("stand-alone closed-class units are never inserted") {
  // "in" is a consistent single-preposition segment: the unit must be
  // rejected even though alignment-wise it is extractable.
  BiSentence s = make_sentence(
      "T5", "انا سبت محفظتي في محلك .", "i left my wallet in your shop .",
      "0-0 1-1 2-2 2-3 3-4 4-5 4-6 5-7",
      "(S (NP (PRP i)) (VP (VBD left) (NP (PRP$ my) (NN wallet)) (PP (IN in) "
      "(NP (PRP$ your) (NN shop)))) (. .))");
  GenerationSet gens = generate_mlf(s);
  std::vector<std::string> strings = candidate_strings(gens);
  CHECK_FALSE(contains(strings, "انا سبت محفظتي in محلك ."));
  for (const Augmentation& a : gens.candidates)
    for (const ReplacedSpan& r : a.replaced_spans) CHECK(*r.tgt != Span{4, 5});
  // the full prepositional phrase is fine: it contains open-class material
  CHECK(contains(strings, "انا سبت محفظتي in your shop ."));
}

TEST_CASE("auxiliary verbs count as closed-class") {
  const ClosedClassSet& closed = ClosedClassSet::default_set();
  CHECK(closed.is_closed("VBP", "have"));
  CHECK(closed.is_closed("VBZ", "does"));
  CHECK(closed.is_closed("VBD", "was"));
  CHECK_FALSE(closed.is_closed("VB", "try"));
  CHECK_FALSE(closed.is_closed("NN", "have d"));  // surface check only under VB*
  CHECK(closed.is_closed("IN", "in"));
  CHECK(closed.is_closed("TO", "to"));
  CHECK_FALSE(closed.is_closed("CD", "3"));  // quantifier tag stays open
}

TEST_CASE("closed-class set can be replaced from a file") {
  TempDir dir;
  write_file(dir.file("tags.txt"), "NN\nJJ\n");
  ClosedClassSet custom = ClosedClassSet::load(dir.file("tags.txt"));
  CHECK(custom.is_closed("NN", "food"));
  CHECK_FALSE(custom.is_closed("DT", "the"));

  BiSentence s = golden();
  // with NN+JJ closed, the "Italian food" unit disappears
  GenerationSet gens = generate_mlf(s, custom);
  CHECK_FALSE(contains(candidate_strings(gens), kGoldenMlSwitch));
}

TEST_CASE("sentence whose only aligned constituents are closed-class yields nothing") {
  BiSentence s = make_sentence("C", "هم في البيت", "they are in the house",
                               "0-0 1-2 1-3 2-4",
                               "(S (NP (PRP they)) (VP (VBP are) (PP (IN in) "
                               "(NP (DT the) (NN house)))))");
  ClosedClassSet everything({"PRP", "VBP", "IN", "DT", "NN"});
  CHECK(generate_mlf(s, everything).candidates.empty());
}

TEST_CASE("random sampling draws without replacement deterministically") {
  BiSentence s = golden();
  GenerationSet gens = generate_ec(s);
  REQUIRE(gens.candidates.size() > 2);

  std::vector<Augmentation> one = sample_random(gens, 1, 7);
  REQUIRE(one.size() == 1);
  CHECK(one[0].technique == Technique::EcRandom);

  std::vector<Augmentation> again = sample_random(gens, 1, 7);
  CHECK(detokenize(one[0].mixed_src) == detokenize(again[0].mixed_src));

  std::vector<Augmentation> all =
      sample_random(gens, static_cast<int>(gens.candidates.size()) + 5, 7);
  CHECK(all.size() == gens.candidates.size());
  std::set<std::string> seen;
  for (const Augmentation& a : all) seen.insert(detokenize(a.mixed_src) + format_replaced_spans(a.replaced_spans));
  CHECK(seen.size() == all.size());  // no candidate drawn twice

  GenerationSet singleton;
  singleton.sentence_id = "S";
  singleton.theory = Theory::EquivalenceConstraint;
  singleton.candidates.push_back(gens.candidates[0]);
  std::vector<Augmentation> picked = sample_random(singleton, 1, 99);
  REQUIRE(picked.size() == 1);
  CHECK(detokenize(picked[0].mixed_src) == detokenize(gens.candidates[0].mixed_src));
}

TEST_CASE("switch-point-fraction sampling ranks by distance to the reference") {
  GenerationSet gens;
  gens.sentence_id = "S";
  gens.theory = Theory::EquivalenceConstraint;
  auto with_spf = [](double spf_value) {
    Augmentation a;
    a.spf = spf_value;
    a.mixed_src = tokenize_line("انا want");
    return a;
  };
  gens.candidates = {with_spf(0.50), with_spf(0.25), with_spf(0.10)};

  std::vector<Augmentation> top = sample_spf(gens, 1, SpfReference{0.22});
  REQUIRE(top.size() == 1);
  CHECK(top[0].spf == 0.25);
  CHECK(top[0].technique == Technique::EcSpf);

  // equal distances keep enumeration order
  gens.candidates = {with_spf(0.32), with_spf(0.12), with_spf(0.22)};
  top = sample_spf(gens, 2, SpfReference{0.22});
  REQUIRE(top.size() == 2);
  CHECK(top[0].spf == 0.22);
  CHECK(top[1].spf == 0.32);  // index 0 beats index 1 at distance 0.1

  // k >= size returns a permutation
  std::vector<Augmentation> all = sample_spf(gens, 10, SpfReference{0.22});
  REQUIRE(all.size() == 3);
  std::multiset<double> values{all[0].spf, all[1].spf, all[2].spf};
  CHECK(values == std::multiset<double>{0.12, 0.22, 0.32});
}

TEST_CASE("generation dump format") {
  BiSentence s = golden();
  GenerationSet gens = generate_ec(s, 2);
  std::ostringstream out;
  write_generations_tsv(gens, out);
  std::string text = out.str();
  CHECK(text.find("L1\tec\t0\t") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}
