#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "vocab_lint/health_assessor.hpp"
#include "vocab_lint/term_model.hpp"

using namespace vocab_lint;
using namespace std::chrono;

namespace {

OntologyMetadata maximal() {
  OntologyMetadata m;
  m.name = "well kept";
  m.as_of = 2024y / 6 / 1;
  m.last_release = 2024y / 3 / 1;
  m.accepts_term_requests = true;
  m.median_issue_response_days = 10;
  m.definition_coverage = 0.95;
  m.terms_reused_elsewhere = 500;
  m.total_terms = 1000;
  m.has_permanent_iris = true;
  return m;
}

}  // namespace

TEST(AssessHealth, MaximalRecord) {
  auto r = assess_health(maximal());
  EXPECT_NEAR(r.composite, 0.2 * (1.0 + 1.0 + 0.95 + 1.0 + 1.0), 1e-12);
  EXPECT_EQ(r.verdict, Verdict::healthy);
  EXPECT_EQ(r.subscores.at("activity"), 1.0);
}

TEST(AssessHealth, ZeroRecord) {
  OntologyMetadata m;
  m.name = "zero";
  m.as_of = 2024y / 6 / 1;
  auto r = assess_health(m);
  EXPECT_EQ(r.composite, 0.0);
  EXPECT_EQ(r.verdict, Verdict::stale);
  bool caveat = false;
  for (const auto& n : r.notes) caveat = caveat || n.find("does not mean") != std::string::npos;
  EXPECT_TRUE(caveat);
}

TEST(AssessHealth, SubscoreLadders) {
  auto m = maximal();
  m.last_release = 2023y / 6 / 1;  // exactly 12 months
  EXPECT_EQ(assess_health(m).subscores.at("activity"), 1.0);
  m.last_release = 2023y / 5 / 31;
  EXPECT_EQ(assess_health(m).subscores.at("activity"), 0.5);
  m.last_release = 2022y / 5 / 31;
  EXPECT_EQ(assess_health(m).subscores.at("activity"), 0.0);
  m.median_issue_response_days = 30;
  EXPECT_EQ(assess_health(m).subscores.at("responsiveness"), 1.0);
  m.median_issue_response_days = 180;
  EXPECT_EQ(assess_health(m).subscores.at("responsiveness"), 0.5);
  m.median_issue_response_days.reset();
  EXPECT_EQ(assess_health(m).subscores.at("responsiveness"), 0.5);
  m.median_issue_response_days = 181;
  EXPECT_EQ(assess_health(m).subscores.at("responsiveness"), 0.0);
  m.accepts_term_requests = false;
  m.median_issue_response_days = 1;
  EXPECT_EQ(assess_health(m).subscores.at("responsiveness"), 0.0);
  m.terms_reused_elsewhere = 5;
  m.total_terms = 100;
  EXPECT_DOUBLE_EQ(assess_health(m).subscores.at("reuse"), 0.5);
}

TEST(AssessHealth, WithinMonthsClampsToMonthEnd) {
  EXPECT_TRUE(within_months(2023y / 8 / 31, 2024y / 2 / 29, 6));
  EXPECT_FALSE(within_months(2023y / 8 / 31, 2024y / 3 / 1, 6));
}

TEST(AssessHealth, BoundariesAreClosedBelow) {
  HealthConfig cfg;
  auto m = maximal();
  m.median_issue_response_days = 100;  // 0.5
  m.definition_coverage = 0.25;
  auto r = assess_health(m, cfg);
  EXPECT_NEAR(r.composite, 0.75, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::healthy);

  OntologyMetadata c;
  c.name = "c";
  c.as_of = 2024y / 6 / 1;
  c.last_release = 2023y / 1 / 1;  // 0.5
  c.definition_coverage = 0.5;
  c.has_permanent_iris = true;
  r = assess_health(c, cfg);
  EXPECT_NEAR(r.composite, 0.4, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::caution);
}

TEST(AssessHealth, WeightsValidated) {
  HealthConfig cfg;
  cfg.weights["activity"] = 0.3;
  EXPECT_THROW(assess_health(maximal(), cfg), VocabError);
  cfg.weights["activity"] = 0.2;
  cfg.weights["extra"] = 0.0;
  EXPECT_THROW(cfg.validate(), VocabError);
  HealthConfig negative;
  negative.weights = {{"activity", -0.2}, {"responsiveness", 0.4}, {"documentation", 0.2},
                      {"reuse", 0.2}, {"identifiers", 0.4}};
  EXPECT_THROW(negative.validate(), VocabError);
}

TEST(AssessHealth, MonotoneInEachSubscore) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    auto m = maximal();
    m.definition_coverage = u(rng);
    m.terms_reused_elsewhere = rng() % 50;
    m.total_terms = 100;
    m.has_permanent_iris = rng() % 2;
    auto base = assess_health(m);
    auto better = m;
    better.definition_coverage = std::min(1.0, m.definition_coverage + u(rng) * 0.1);
    EXPECT_GE(assess_health(better).composite, base.composite);
    better = m;
    better.terms_reused_elsewhere += 1;
    EXPECT_GE(assess_health(better).composite, base.composite);
    EXPECT_EQ(base.subscores.at("documentation"), m.definition_coverage);
  }
}

TEST(LoadMetadata, FixtureRecords) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/health_snapshot.txt");
  std::stringstream s;
  s << in.rdbuf();
  auto load = load_metadata(s.str());
  ASSERT_EQ(load.records.size(), 2u);
  EXPECT_TRUE(load.errors.empty());
  ASSERT_EQ(load.notes.size(), 1u);  // homepage
  const auto& m = load.records[0];
  EXPECT_EQ(m.name, "well kept ontology");
  EXPECT_EQ(*m.last_release, 2024y / 3 / 1);
  EXPECT_EQ(m.releases_last_24_months, 8);
  EXPECT_EQ(*m.median_issue_response_days, 10.0);
  EXPECT_TRUE(m.accepts_term_requests);
  EXPECT_EQ(m.definition_coverage, 0.95);
  EXPECT_EQ(m.total_terms, 1000);
  EXPECT_EQ(m.as_of, 2024y / 6 / 1);
  EXPECT_FALSE(load.records[1].last_release);
}

TEST(LoadMetadata, EmptyAndBrokenRecords) {
  EXPECT_TRUE(load_metadata("").records.empty());
  auto load = load_metadata(
      "as_of: 2024-01-01\n\nname: ok\nas_of: 2024-01-01\n\nname: bad\nas_of: 2024-13-01\n");
  EXPECT_EQ(load.records.size(), 1u);
  ASSERT_EQ(load.errors.size(), 2u);
  EXPECT_EQ(load.errors[0].line, 1);
  EXPECT_EQ(load.errors[1].line, 6);
}
