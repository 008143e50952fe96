#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace lralg;

TEST(Catalog, EveryInstancePasses) {
  CatalogReport rep = catalog_verify();
  EXPECT_TRUE(rep.ok());
  for (const auto& r : rep.results) EXPECT_TRUE(r.pass()) << r.name << "(" << format_params(r.params) << "): " << r.message;
}

TEST(Catalog, IncompleteEntriesAreExactlyTheListedOnes) {
  std::set<std::string> incomplete;
  for (const auto& r : catalog_verify().results)
    if (!r.complete) incomplete.insert(r.name);
  EXPECT_EQ(incomplete, (std::set<std::string>{"r2/A1", "r2/A3", "n3/A4", "n4/A6"}));
  for (const auto& r : catalog_verify("n3R/").results) EXPECT_TRUE(r.complete);
}

TEST(Catalog, FamilySizes) {
  std::map<std::string, std::size_t> per_lie;
  for (const auto& e : catalog_entries()) ++per_lie[e.lie_name];
  EXPECT_EQ(per_lie["r2"], 3u);
  EXPECT_EQ(per_lie["n3"], 4u);
  EXPECT_EQ(per_lie["n4"], 6u);
  EXPECT_EQ(per_lie["n3R"], 15u);
  EXPECT_EQ(catalog_entry("n4/A4").samples().size(), 8u);
}

TEST(Catalog, SamplesRespectDomainsAndIncludeEndpoints) {
  for (const auto& e : catalog_entries())
    for (const auto& s : e.samples()) EXPECT_NO_THROW(check_params(e, s)) << e.name;
  ParamDomain d = ParamDomain::at_most(Rational(3, 4));
  auto s = d.sample();
  EXPECT_NE(std::find(s.begin(), s.end(), Rational(3, 4)), s.end());
  EXPECT_EQ(std::find(s.begin(), s.end(), Rational(3)), s.end());
}

TEST(Catalog, LookupErrors) {
  EXPECT_THROW(catalog_entry("n3/A9"), UnknownName);
  EXPECT_THROW(catalog_lie("sl2"), UnknownName);
  EXPECT_THROW(catalog_get("n3/A1", {}), ParamOutOfDomain);
  EXPECT_THROW(catalog_get("n4/A4", {Rational(2), Rational(0), Rational(0)}), ParamOutOfDomain);
}

TEST(Catalog, G13SecondDerivedAlgebraVanishes) {
  EXPECT_TRUE(derived_series(counterexample_g13()).terms.back().is_zero());
  EXPECT_EQ(derived_series(counterexample_g13()).terms.size(), 3u);
}

// For the one-parameter families on n3, distinct samples give non-isomorphic
// algebras; the isomorphism search must separate each pair.
class FamilyDistinguishability : public ::testing::TestWithParam<std::string> {};

TEST_P(FamilyDistinguishability, DistinctSamplesAreSeparated) {
  const CatalogEntry& e = catalog_entry(GetParam());
  auto samples = e.samples();
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      IsoResult r = iso_search(catalog_get(e.name, samples[i]), catalog_get(e.name, samples[j]));
      EXPECT_EQ(r.status, IsoStatus::DistinguishedBy)
          << e.name << " " << format_params(samples[i]) << " vs " << format_params(samples[j]) << ": " << r.detail;
    }
}

INSTANTIATE_TEST_SUITE_P(Heisenberg, FamilyDistinguishability, ::testing::Values("n3/A1", "n3/A2"),
                         [](const auto& info) { return info.param == "n3/A1" ? std::string("A1") : std::string("A2"); });
