#include <gtest/gtest.h>

#include "support.hpp"

using namespace splitq;
using splitq::testing::Gen;
using splitq::testing::q;

TEST(Grid, ParseAndCount) {
  auto g = GridSpec::parse("-2:2:1/2");
  EXPECT_EQ(g.axis_count(0), 9u);
  EXPECT_EQ(g.count(), 6561u);
  EXPECT_EQ(GridSpec::standard().count(), 6561u);
  std::size_t n = 0;
  g.for_each([&](const SplitQuaternion&) { ++n; });
  EXPECT_EQ(n, 6561u);
  EXPECT_EQ(GridSpec::parse("0:1:1").count(), 16u);
  EXPECT_EQ(GridSpec::parse("0:0:1").count(), 1u);
}

TEST(Grid, RejectsBadSpecs) {
  for (const char* bad : {"", "1:2", "1:2:0", "2:1:1", "a:b:c", "0:1:-1", "1:2:3:4", "-100:100:1/100"})
    EXPECT_THROW(GridSpec::parse(bad), error) << bad;
}

TEST(Oracle, BruteForceAgreesWithResidual) {
  QuadEquation e = corpus::find("3.2")->eq;
  auto grid = GridSpec::parse("-1:1:1/2");
  auto roots = brute_force_roots(e, grid);
  std::size_t hits = 0;
  grid.for_each([&](const SplitQuaternion& x) { hits += residual(e, x).exact_zero; });
  EXPECT_EQ(roots.size(), hits);
  for (auto& x : roots) EXPECT_TRUE(residual(e, x).exact_zero);
  EXPECT_TRUE(std::find(roots.begin(), roots.end(), q("-1")) != roots.end());
  EXPECT_TRUE(std::find(roots.begin(), roots.end(), q("1/2i+1/2j+k")) != roots.end());
}

TEST(Oracle, ResidualOfFloatPoints) {
  QuadEquation e{q("1+j"), q("0"), q("-1-j")};
  auto r = residual(e, SplitQuaternionF{0.5, 0, 0.5, 0});
  EXPECT_LT(r.max_abs, 1e-15);
  EXPECT_GT(residual(e, SplitQuaternionF{0.5, 0.1, 0.5, 0}).max_abs, 1e-3);
}

TEST(Oracle, DetectsIncompleteSets) {
  const auto& e = corpus::find("3.2")->eq;
  auto full = solve(e);
  auto rep = check_solution_set(e, full, GridSpec::standard(), 20);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.grid_hits, 0u);

  SolutionSet missing = full;
  missing.points.clear();  // drop -1
  auto bad = check_solution_set(e, missing, GridSpec::standard(), 20);
  EXPECT_FALSE(bad.ok());

  SolutionSet no_line = full;
  no_line.families.clear();
  EXPECT_FALSE(check_solution_set(e, no_line, GridSpec::standard(), 20).ok());
}

TEST(Oracle, DetectsUnsoundSets) {
  const auto& e = corpus::find("3.1")->eq;
  auto s = solve(e);
  s.add_point(q("1"));
  EXPECT_FALSE(check_solution_set(e, s, GridSpec::parse("0:1:1"), 20).ok());

  // A family that is too large: x0, x1 free with the right x2 but wrong x3.
  auto s2 = solve(corpus::find("4.3")->eq);
  ASSERT_EQ(s2.families.size(), 1u);
  s2.families[0].components[3] = s2.families[0].components[3] + Poly::var(0, 2);
  EXPECT_FALSE(check_solution_set(corpus::find("4.3")->eq, s2, GridSpec::parse("0:0:1"), 20).ok());

  SolutionSet f;
  f.add_point(SplitQuaternionF{-1.001, 0, 0, 0});
  EXPECT_FALSE(check_solution_set(corpus::find("3.2")->eq, f, GridSpec::parse("0:0:1"), 1).ok());
}

TEST(Compare, EqualAndUnequalSets) {
  const auto& e = corpus::find("3.6")->eq;
  auto s = solve(e);
  EXPECT_TRUE(compare_sets(s, s).ok());
  EXPECT_TRUE(compare_sets(s, corpus::find("3.6")->expected).ok());

  SolutionSet fewer = s;
  fewer.families.pop_back();
  EXPECT_FALSE(compare_sets(fewer, s).ok());

  SolutionSet extra = s;
  extra.add_point(q("7"));
  EXPECT_FALSE(compare_sets(extra, s).ok());

  SolutionSet a, b;
  a.add_point(SplitQuaternionF{1, 2, 3, 4});
  b.add_point(SplitQuaternionF{1, 2, 3, 4 + 1e-6});
  EXPECT_FALSE(compare_sets(a, b).ok());
  EXPECT_TRUE(compare_sets(a, b, 10, 1e-5).ok());
}

TEST(Compare, EmptyFamilyIsReported) {
  Family f;
  f.params = {"x0"};
  f.param_forms = {AffineForm::coordinate(0)};
  Poly x0 = Poly::var(0, 1);
  f.components = {x0, Poly(1), Poly(1), Poly(1)};
  f.radicand = Poly(1);
  f.constraints.push_back({Poly::constant(-1, 1), Relation::ge});  // never holds
  SolutionSet s;
  s.families.push_back(f);
  auto rep = compare_sets(s, s);
  EXPECT_FALSE(rep.ok());
}

TEST(Sampler, DeterministicSmallRationals) {
  ParamSampler a(3), b(3);
  for (int n = 0; n < 100; ++n) {
    Scalar u = a.next(), v = b.next();
    EXPECT_EQ(u, v);
    EXPECT_LE(abs(u), 3);
    EXPECT_LE(u.get_den(), 4);
  }
}

TEST(Sampler, FamilySamplesRespectConstraints) {
  auto s = solve(corpus::find("3.5")->eq);
  ParamSampler rng(4);
  for (auto& f : s.families) {
    auto r = sample_family(f, 30, rng);
    EXPECT_FALSE(r.empty()) << f.origin;
    for (auto& x : r.exact) EXPECT_TRUE(f.membership(x).has_value()) << f.origin << " " << to_string(x);
  }
}
