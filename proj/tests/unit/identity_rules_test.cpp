#include <gtest/gtest.h>

#include "support/builders.hpp"
#include "vocab_lint/identity_rules.hpp"

using namespace vocab_lint;
using testing_support::count_rule;
using testing_support::rule_ids;
using testing_support::term;

namespace {
Vocabulary obo_vocab(std::vector<Term> terms) {
  return Vocabulary(std::move(terms), PrefixMap::obo_defaults());
}
}  // namespace

TEST(CheckIri, Examples) {
  auto prefixes = PrefixMap::obo_defaults();
  EXPECT_TRUE(check_iri(term("Tachypnea").iri("http://purl.obolibrary.org/obo/HP_0002789"), prefixes).empty());
  EXPECT_TRUE(check_iri(term("plasma").iri("NCIT:C13356"), prefixes).empty());
  EXPECT_EQ(rule_ids(check_iri(term("x"), prefixes)), std::vector<std::string>{"R06-MISSING-IRI"});
  EXPECT_EQ(rule_ids(check_iri(term("x").iri("NOPE:1"), prefixes)),
            std::vector<std::string>{"R06-BAD-IRI"});
  EXPECT_EQ(rule_ids(check_iri(term("x").iri("urn-without-colon"), prefixes)),
            std::vector<std::string>{"R06-BAD-IRI"});
  auto f = check_iri(term("x").iri("http://www.ebi.ac.uk/efo/HP_0002789"), prefixes);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].rule_id, "R06-NONPURL");
  EXPECT_EQ(f[0].suggestion, "http://purl.obolibrary.org/obo/HP_0002789");
  // Foreign vocabularies with their own identifiers are left alone.
  EXPECT_TRUE(check_iri(term("x").iri("http://www.ebi.ac.uk/efo/EFO_0000001"), prefixes).empty());
}

TEST(PrefixMapFile, LoadsAndRejectsDuplicates) {
  auto map = load_prefix_map("# c\nVLX\thttps://example.org/VLX_\texternal\nHP\thttp://purl.obolibrary.org/obo/HP_\tobo\n");
  EXPECT_TRUE(map.find("HP")->obo);
  EXPECT_FALSE(map.find("VLX")->obo);
  EXPECT_THROW(load_prefix_map("A\thttps://a/\tobo\nA\thttps://a/\tobo\n"), VocabError);
  EXPECT_THROW(load_prefix_map("A\thttps://a/\n"), VocabError);
}

TEST(IriUniqueness, Examples) {
  auto f = check_iri_uniqueness(obo_vocab({term("a").iri("HP:0002789"), term("b").iri("HP:0002789")}));
  EXPECT_EQ(count_rule(f, "R06-DUP-IRI"), 1u);
  EXPECT_TRUE(check_iri_uniqueness(obo_vocab({term("a").iri("HP:1"), term("b").iri("HP:2")})).empty());
  f = check_iri_uniqueness(obo_vocab(
      {term("a").iri("HP:0002789"), term("b").iri("http://purl.obolibrary.org/obo/HP_0002789")}));
  EXPECT_EQ(count_rule(f, "R06-DUP-IRI"), 1u);
}

TEST(IriUniqueness, ExpansionCommutesWithGrouping) {
  auto prefixes = PrefixMap::obo_defaults();
  std::vector<Term> curies = {term("a").iri("HP:1"), term("b").iri("GO:1"), term("c").iri("HP:1")};
  std::vector<Term> expanded;
  for (auto t : curies) {
    t.iri = Iri(prefixes.expand(*t.iri));
    expanded.push_back(t);
  }
  auto a = check_iri_uniqueness(obo_vocab(curies));
  auto b = check_iri_uniqueness(obo_vocab(expanded));
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a[0].subject_label, b[0].subject_label);
}

TEST(LabelCollisions, Examples) {
  auto f = check_label_collisions(
      obo_vocab({term("plasma").iri("NCIT:C13356"), term("plasma").iri("ENVO:01000798")}));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].rule_id, "C-SEMANTIC-NOISE");
  EXPECT_TRUE(check_label_collisions(obo_vocab({term("a").iri("X:1"), term("b").iri("X:2")})).empty());
  EXPECT_TRUE(check_label_collisions(
                  obo_vocab({term("Tachypnea").iri("HP:0002789"),
                             term("obsolete Rapid Breathing").iri("HP:1").obsolete()}))
                  .empty());
  EXPECT_TRUE(check_label_collisions(
                  obo_vocab({term("plasma").iri("NCIT:C13356"), term("Plasma").iri("NCIT:C13356")}))
                  .empty());
}

TEST(SynonymCollisions, Examples) {
  auto f = check_synonym_collisions(obo_vocab(
      {term("Tachypnea").iri("HP:0002789").synonym("rapid breathing"),
       term("Rapid Breathing").iri("HP:9")}));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].subject_label, "Tachypnea");
  EXPECT_EQ(f[0].subject_iris.size(), 2u);
  EXPECT_TRUE(check_synonym_collisions(obo_vocab({term("a").iri("X:1"), term("b").iri("X:2")})).empty());
  EXPECT_TRUE(check_synonym_collisions(obo_vocab({term("cough").iri("X:1").synonym("Cough")})).empty());
}

TEST(SynonymCollisions, SharedSynonymReportedOncePerPair) {
  auto f = check_synonym_collisions(obo_vocab({term("a").iri("X:1").synonym("shared"),
                                               term("b").iri("X:2").synonym("shared")}));
  EXPECT_EQ(f.size(), 1u);
}

TEST(Deprecation, Examples) {
  auto clean = obo_vocab({term("Tachypnea").iri("HP:0002789"),
                          term("obsolete Rapid Breathing").iri("HP:1").obsolete().replaced_by("HP:0002789")});
  EXPECT_TRUE(check_deprecation(clean).empty());
  auto f = check_deprecation(obo_vocab({term("Tachypnea").iri("HP:0002789"),
                                        term("Rapid Breathing").iri("HP:1").obsolete().replaced_by("HP:0002789")}));
  EXPECT_EQ(rule_ids(f), std::vector<std::string>{"R08-LABEL"});
  f = check_deprecation(obo_vocab({term("obsolete x").iri("HP:1").obsolete().replaced_by("HP:404")}));
  EXPECT_EQ(rule_ids(f), std::vector<std::string>{"R08-DANGLING"});
}

TEST(Deprecation, OtherProtocolBreaks) {
  auto f = check_deprecation(obo_vocab({
      term("obsolete a").iri("X:1").obsolete(),
      term("b").iri("X:2").replaced_by("X:3"),
      term("c").iri("X:3"),
      term("d").iri("X:4").parent("X:1"),
      term("obsolete e").iri("X:5").obsolete().replaced_by("X:6"),
      term("obsolete f").iri("X:6").obsolete().replaced_by("X:5"),
  }));
  EXPECT_EQ(rule_ids(f), (std::vector<std::string>{"R08-CYCLE", "R08-CYCLE", "R08-LIVE-REPLACED",
                                                   "R08-NO-REPLACEMENT", "R08-OBSOLETE-PARENT"}));
}

TEST(Deprecation, ChainPointsAtTerminus) {
  auto v = obo_vocab({term("obsolete a").iri("X:1").obsolete().replaced_by("X:2"),
                      term("obsolete b").iri("X:2").obsolete().replaced_by("X:3"),
                      term("c").iri("X:3")});
  auto f = check_deprecation(v);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].rule_id, "R08-CHAIN");
  EXPECT_EQ(f[0].suggestion, resolve_replacement(v, Iri("X:1")).value());
}

TEST(IdentitySuite, PureAndRepeatable) {
  auto v = obo_vocab({term("plasma").iri("NCIT:C13356").synonym("blood plasma"),
                      term("plasma").iri("ENVO:01000798"), term("blood plasma").iri("X:1"),
                      term("obsolete q").iri("X:2").obsolete()});
  auto before = v.terms();
  auto run = [&] {
    std::vector<Finding> all;
    for (auto* fn : {&check_iri_uniqueness, &check_label_collisions, &check_synonym_collisions,
                     &check_deprecation}) {
      auto f = fn(v);
      all.insert(all.end(), f.begin(), f.end());
    }
    return all;
  };
  EXPECT_EQ(run(), run());
  EXPECT_EQ(v.terms(), before);
}
