#include <gtest/gtest.h>

#include "resolvent/verify.hpp"

using namespace resolvent;

namespace {

EnumerationCache& shared_cache() {
  static EnumerationCache cache(2);
  return cache;
}

std::string code_of(const FamilyId& id) { return canonical_graph6(build_family(id)); }

}  // namespace

TEST(Verify, UnicyclicMax) {
  const auto r = verify_unicyclic_max(4, 7, shared_cache());
  ASSERT_EQ(r.size(), 4U);
  for (const auto& x : r) EXPECT_TRUE(x.passed()) << x.params << ": " << x.detail;
  EXPECT_EQ(r[1].witness, code_of(FamilyId::x(5)));
  EXPECT_NE(r[3].detail.find("bipartite ER-argmax is XnTilde"), std::string::npos) << r[3].detail;
}

TEST(Verify, UnicyclicMin) {
  for (const auto& x : verify_unicyclic_min(5, 9, shared_cache())) EXPECT_TRUE(x.passed()) << x.detail;
  const auto r = verify_unicyclic_min(5, 5, shared_cache());
  EXPECT_EQ(r[0].witness, code_of(FamilyId::cycle(5)));
  for (const auto& x : verify_unicyclic_min_weak(5, 8, shared_cache())) EXPECT_TRUE(x.passed()) << x.detail;
}

TEST(Verify, BicyclicMax) {
  const auto r = verify_bicyclic_max(5, 6, shared_cache());
  for (const auto& x : r) EXPECT_TRUE(x.passed()) << x.detail;
  EXPECT_EQ(r[0].witness, code_of(FamilyId::y(5)));
}

TEST(Verify, TricyclicMax) {
  const auto r = verify_tricyclic_max(4, 7, shared_cache());
  for (const auto& x : r) EXPECT_TRUE(x.passed()) << x.params << ": " << x.detail;
  EXPECT_EQ(r[0].witness, code_of(FamilyId::z(1, 4)));
  EXPECT_EQ(r[2].witness, code_of(FamilyId::z(1, 6)));
  for (int i = 2; i <= 6; ++i) EXPECT_GT(er_difference(FamilyId::z(1, 7), FamilyId::z(i, 7)), 0);
}

TEST(Verify, RangeChecked) {
  EXPECT_THROW(verify_unicyclic_max(3, 5, shared_cache()), invalid_parameter);
  EXPECT_THROW(verify_bicyclic_max(5, 11, shared_cache()), invalid_parameter);
  EXPECT_THROW(verify_moment_lemmas("lem-2.1", 5, 6, 5, shared_cache()), invalid_parameter);
  EXPECT_THROW(run_claim("thm-9.9", 5, 6, {}, shared_cache()), invalid_parameter);
}

TEST(Verify, MomentLemmas) {
  for (const char* id : {"lem-2.1", "lem-2.4", "lem-3.1", "lem-4.1"})
    for (const auto& x : verify_moment_lemmas(id, 5, 6, 30, shared_cache()))
      EXPECT_TRUE(x.passed()) << id << " " << x.params << ": " << x.detail << " " << x.witness;
  const auto r = verify_moment_lemmas("lem-4.1", 6, 6, 30, shared_cache());
  EXPECT_NE(r[0].detail.find("bicyclic"), std::string::npos);
}

TEST(Verify, MomentLemmaFailureCarriesWitness) {
  // Swapping the direction turns Lemma 2.4's upward dominance into a false claim.
  const int n = 6;
  std::vector<const ScoredGraph*> members;
  for (const auto& s : shared_cache().get(n, 1))
    if (s.code == code_of(FamilyId::x(n))) members.push_back(&s);
  const auto r = detail::check_dominance("probe", n, "", members, {detail::target(FamilyId::cycle(n), 30)}, false, 30);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.witness, code_of(FamilyId::x(n)));
}

TEST(Verify, TiesReportBothWitnesses) {
  const Graph a = cycle_graph(5), b = build_family(FamilyId::x(5));
  const std::vector<ScoredGraph> fake{{a, graph6_encode(a), BigRational(2)}, {b, graph6_encode(b), BigRational(2)}};
  const auto best = extremes(fake, std::greater<>());
  ASSERT_EQ(best.size(), 2U);
  const auto r = detail::check_unique_extreme("probe", "n=5", "", best, FamilyId::x(5), "ER-argmax");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.witness, graph6_encode(a) + "," + graph6_encode(b));
}

TEST(Verify, RootClaims) {
  const auto r = verify_root_claims();
  EXPECT_EQ(r.size(), 17U);
  for (const auto& x : r) EXPECT_TRUE(x.passed()) << x.params << ": " << x.detail;
}

TEST(Verify, GapAsymptotic) {
  const auto r = verify_gap_asymptotic(5, 60, 100);
  ASSERT_EQ(r.size(), 2U);
  for (const auto& x : r) EXPECT_TRUE(x.passed()) << x.detail;
}

TEST(Verify, IdentitiesReportPublishedZ5Z6Mismatch) {
  for (const auto& x : verify_charpoly_identities(5, 12)) {
    const bool z56 = x.params.starts_with("Z5") || x.params.starts_with("Z6");
    EXPECT_EQ(x.passed(), !z56) << x.params << ": " << x.detail;
    if (!x.passed()) EXPECT_FALSE(x.witness.empty());
  }
  for (const auto& x : verify_difference_formulas(5, 12)) {
    const bool z56 = x.params.starts_with("Z1-Z5") || x.params.starts_with("Z1-Z6");
    EXPECT_EQ(x.passed(), !z56) << x.params << ": " << x.detail;
    if (z56) EXPECT_NE(x.detail.find("consistent, positive"), std::string::npos) << x.detail;
  }
}

TEST(Verify, EnumerationReport) {
  const EnumerationReport r = enumeration_report(5, 1, shared_cache());
  EXPECT_EQ(r.count, 5U);
  EXPECT_EQ(r.argmax_er, code_of(FamilyId::x(5)));
  EXPECT_EQ(r.argmin_er, code_of(FamilyId::cycle(5)));
  ASSERT_TRUE(r.argmax_er_bipartite.has_value());
  EXPECT_EQ(*r.argmax_er_bipartite, code_of(FamilyId::x_tilde(5)));
  EXPECT_FALSE(enumeration_report(5, 3, shared_cache()).argmax_er_bipartite.has_value());
}

TEST(Verify, RegistryComplete) {
  EXPECT_EQ(claim_registry().size(), 13U);
  for (const auto& c : claim_registry()) EXPECT_EQ(find_claim(c.id), &c);
  EXPECT_EQ(find_claim("nope"), nullptr);
}
