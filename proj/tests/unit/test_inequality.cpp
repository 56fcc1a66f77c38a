#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "udh/inequality.hpp"
#include "udh/ternary.hpp"

namespace {

using namespace udh;

TEST(Constants, DefiningIdentities) {
  const auto c = exponent_constants();
  EXPECT_NEAR(c.rho, 2.0 / (std::log2(3.0) - 1.0), 1e-15);
  EXPECT_DOUBLE_EQ(c.tau, c.rho + 3.0);
  EXPECT_NEAR(std::pow(2.0, c.tau - 1.0), std::pow(3.0, c.tau - 3.0), 1e-12 * std::pow(2.0, c.tau - 1.0));
  EXPECT_NEAR(std::pow(2.0 / 3.0, c.rho), 0.25, 1e-12);
}

TEST(Inequality, EqualityCases) {
  EXPECT_NEAR(fact7_value(1, 1, 0), 0.0, 1e-12);
  EXPECT_NEAR(fact7_value(1, 1, 1), 0.0, 1e-12);
  EXPECT_NEAR(fact7_value(0, 0, 0), 0.0, 1e-12);
  EXPECT_GT(fact7_value(1, 0, 0), 0.0);
}

TEST(Inequality, ScanNonNegativeAndStable) {
  double previous = INFINITY;
  for (std::size_t res : {51, 101, 201}) {
    const auto g = fact7_scan(res);
    EXPECT_GE(g.value, -1e-9) << res;
    EXPECT_NEAR(fact7_value(g.x, g.y, g.z), g.value, 1e-15);
    if (std::isfinite(previous)) EXPECT_GE(g.value, previous - 1e-6);
    previous = g.value;
  }
}

TEST(Inequality, ScanIndependentOfThreads) {
  const auto a = fact7_scan(61, 1);
  const auto b = fact7_scan(61, 4);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.z, b.z);
}

TEST(TernaryAudit, LevelsOneAndTwoExact) {
  const auto one = tn_density_audit(1, TnAuditMode::exact);
  EXPECT_EQ(one.subsets_examined, 8u);
  EXPECT_TRUE(one.violations.empty());
  const auto two = tn_density_audit(2, TnAuditMode::exact);
  EXPECT_EQ(two.subsets_examined, 512u);
  EXPECT_TRUE(two.violations.empty());
  // Margin of the reported argmin recomputed from scratch.
  const auto t2 = build_ternary(3, 2);
  const double margin = static_cast<double>(induced_edge_count(t2, two.argmin)) - tn_lower_bound(2, two.argmin.size());
  EXPECT_NEAR(margin, two.min_margin, 1e-9);
}

TEST(TernaryAudit, LevelThreeSampled) {
  const auto r = tn_density_audit(3, TnAuditMode::sampled, 100'000, 7);
  EXPECT_EQ(r.subsets_examined, 100'000u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_THROW(tn_density_audit(3, TnAuditMode::exact), Error);
  EXPECT_THROW(tn_density_audit(4, TnAuditMode::sampled, 10), Error);
}

TEST(Optimality, FormulaMatchesBruteForce) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t r = 0; r <= n; ++r) {
      const auto p = optimality_family(r, n);
      EXPECT_EQ(p.size, big_pow(2, r) * big_pow(3, n - r));
      EXPECT_EQ(p.edges, big_pow(2, r) * (big_pow(27, n - r) - big_pow(3, n - r)) / 24);
      ASSERT_TRUE(p.brute_force);
      EXPECT_EQ(BigInt(*p.brute_force), p.edges) << "r=" << r << " n=" << n;
      if (r < n) EXPECT_NEAR(p.ratio, 1.0 - std::pow(9.0, -static_cast<double>(n - r)), 1e-12);
    }
  const auto p = optimality_family(1, 3);
  EXPECT_EQ(p.size, BigInt(18));
  EXPECT_EQ(p.edges, BigInt(60));
  EXPECT_THROW(optimality_family(4, 3), Error);
}

TEST(Supersaturation, GoldenCounts) {
  // Tight path 012, 123 in T_1, T_2, T_3; frozen from a verified exact run.
  const auto path = parse_hypergraph("3 4 2\n0 1 2\n1 2 3\n");
  const auto rep = supersaturation_experiment(path, 3);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_EQ(rep.rows[0].hom, BigInt(6));
  EXPECT_EQ(rep.rows[1].hom, BigInt(504));
  EXPECT_EQ(rep.rows[2].hom, BigInt(40878));
  EXPECT_NEAR(rep.rows[1].ratio, 504.0 / 6561.0, 1e-15);
  EXPECT_NEAR(rep.rows[2].ratio, 40878.0 / 531441.0, 1e-15);
  EXPECT_EQ(BigInt(oracle::hom_count(path, build_ternary(3, 2))), BigInt(504));
}

TEST(Supersaturation, TrivialPatterns) {
  const auto edge = supersaturation_experiment(catalog::single_edge(), 3);
  for (const auto& row : edge.rows) EXPECT_EQ(row.hom, 6 * kary_edge_count(3, row.n));
  const auto empty = supersaturation_experiment(catalog::edgeless(3, 2), 2);
  for (const auto& row : empty.rows) EXPECT_EQ(row.ratio, 1.0);
  EXPECT_THROW(supersaturation_experiment(catalog::complete(3, 4), 2), Error);
}

}  // namespace
