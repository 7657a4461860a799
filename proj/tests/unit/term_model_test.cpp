#include <gtest/gtest.h>

#include "support/builders.hpp"

using namespace vocab_lint;
using testing_support::term;

TEST(Iri, CurieSplitsAtFirstColon) {
  Iri iri("NCIT:C13356");
  EXPECT_FALSE(iri.is_absolute());
  EXPECT_EQ(iri.curie_prefix(), "NCIT");
  EXPECT_EQ(iri.curie_local(), "C13356");
  EXPECT_EQ(Iri("a:b:c").curie_local(), "b:c");
  EXPECT_TRUE(Iri("http://purl.obolibrary.org/obo/HP_0002789").is_absolute());
  EXPECT_THROW(Iri(""), std::invalid_argument);
  EXPECT_THROW(Iri("a b"), std::invalid_argument);
  EXPECT_FALSE(Iri::parse(" "));
}

TEST(PrefixMap, ExpandsRegisteredCuries) {
  auto map = PrefixMap::obo_defaults();
  EXPECT_EQ(map.expand(Iri("HP:0002789")), "http://purl.obolibrary.org/obo/HP_0002789");
  EXPECT_EQ(map.expand(Iri("hp:0002789")), "hp:0002789");  // case-sensitive prefixes
  EXPECT_TRUE(map.can_expand(Iri("NCIT:C13356")));
  EXPECT_FALSE(map.can_expand(Iri("XYZ:1")));
}

TEST(PrefixMap, RejectsConflictingBases) {
  PrefixMap map;
  map.add("X", {"https://x.org/", false});
  EXPECT_NO_THROW(map.add("X", {"https://x.org/", false}));
  EXPECT_THROW(map.add("X", {"https://y.org/", false}), VocabError);
  EXPECT_THROW(map.add("", {"https://y.org/", false}), VocabError);
  EXPECT_THROW(map.add("Y", {"relative/", false}), VocabError);
}

TEST(Vocabulary, IndexesByExpandedIriAndLabel) {
  Vocabulary v({term("Tachypnea").iri("HP:0002789"), term("tachypnea").iri("VLX:1"),
                term("no iri").at("f.tsv", 4)},
               PrefixMap::obo_defaults());
  ASSERT_NE(v.find(Iri("http://purl.obolibrary.org/obo/HP_0002789")), nullptr);
  EXPECT_EQ(v.with_label("tachypnea").size(), 2u);
  EXPECT_TRUE(v.with_label("absent").empty());
  EXPECT_EQ(term_key(v.terms()[2]), "f.tsv:4");
}

TEST(Vocabulary, RebuildingReproducesIndexes) {
  Vocabulary v({term("a").iri("VLX:1"), term("b").iri("VLX:2"), term("A").iri("VLX:1")});
  Vocabulary rebuilt(v.terms(), v.prefix_map());
  EXPECT_EQ(rebuilt.by_iri(), v.by_iri());
  EXPECT_EQ(rebuilt.by_label(), v.by_label());
  EXPECT_EQ(v.duplicate_iris(), std::vector<std::string>{"VLX:1"});
}

TEST(ResolveReplacement, FollowsChains) {
  Vocabulary v({term("Tachypnea").iri("HP:0002789"),
                term("obsolete Rapid Breathing").iri("VLX:9").obsolete().replaced_by("HP:0002789"),
                term("a").iri("VLX:1").obsolete().replaced_by("VLX:2"),
                term("b").iri("VLX:2").obsolete().replaced_by("VLX:3"), term("c").iri("VLX:3")});
  EXPECT_EQ(resolve_replacement(v, Iri("VLX:9")).value(), "HP:0002789");
  EXPECT_EQ(resolve_replacement(v, Iri("HP:0002789")).value(), "HP:0002789");
  EXPECT_EQ(resolve_replacement(v, Iri("VLX:1")).value(), "VLX:3");
}

TEST(ResolveReplacement, ReportsCyclesAndUnknownTerms) {
  Vocabulary v({term("a").iri("VLX:1").replaced_by("VLX:2"), term("b").iri("VLX:2").replaced_by("VLX:1"),
                term("c").iri("VLX:3").replaced_by("VLX:404")});
  try {
    resolve_replacement(v, Iri("VLX:1"));
    FAIL();
  } catch (const VocabError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::replacement_cycle);
  }
  try {
    resolve_replacement(v, Iri("VLX:3"));
    FAIL();
  } catch (const VocabError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_iri);
  }
}

TEST(Severity, ParsesAndOrders) {
  EXPECT_EQ(parse_severity("warning"), Severity::warning);
  EXPECT_FALSE(parse_severity("fatal"));
  EXPECT_LT(Severity::info, Severity::error);
}
