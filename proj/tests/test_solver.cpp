#include <gtest/gtest.h>

#include "support.hpp"

using namespace splitq;
using splitq::testing::Gen;
using splitq::testing::q;

class CorpusEntry : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusEntry, MatchesReferenceSolution) {
  const auto* e = corpus::find(GetParam());
  ASSERT_NE(e, nullptr);
  auto r = corpus::run(*e);
  std::string msgs;
  for (auto& m : r.messages) msgs += "\n  " + m;
  EXPECT_TRUE(r.passed) << e->id << " " << e->title << msgs;
}

TEST_P(CorpusEntry, PassesGridOracle) {
  const auto* e = corpus::find(GetParam());
  ASSERT_NE(e, nullptr);
  auto set = solve(e->eq);
  auto rep = check_solution_set(e->eq, set, GridSpec::standard(), 50);
  std::string msgs;
  for (auto& m : rep.failures) msgs += "\n  " + m;
  EXPECT_TRUE(rep.ok()) << msgs;
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusEntry,
                         ::testing::Values("1.1", "2.1", "3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "4.1", "4.2", "4.3",
                                           "5.1", "5.2", "5.3", "5.4"),
                         [](const auto& info) {
                           std::string s = "ex" + info.param;
                           std::replace(s.begin(), s.end(), '.', '_');
                           return s;
                         });

TEST(Solver, CaseDispatch) {
  EXPECT_EQ(solve_detailed(corpus::find("3.1")->eq).cases, (std::vector<std::string>{"sz.pab_nonzero", "si.pab_nonzero"}));
  EXPECT_EQ(solve_detailed(corpus::find("3.3")->eq).cases[0], "sz.delta_2b1");
  EXPECT_EQ(solve_detailed(corpus::find("3.5")->eq).cases[0], "sz.delta_zero");
  EXPECT_EQ(solve_detailed(corpus::find("4.2")->eq).cases[1], "si.pab_zero");
  EXPECT_EQ(solve_detailed(corpus::find("4.3")->eq).cases[1], "si.pab_zero.free_trace");
  EXPECT_EQ(solve_detailed(corpus::find("2.1")->eq).cases, (std::vector<std::string>{"eq1"}));
}

TEST(Solver, EquationOneRootsForAGivenY) {
  const auto& e = corpus::find("2.1")->eq;
  auto n = normalize(e);
  auto s = eq1_roots_for(n.eq.a, n.eq.c, q("1"));
  // x^2 = 1: the two real roots and the quadric of pure imaginary units with I = -1.
  EXPECT_TRUE(s.contains(q("1")));
  EXPECT_TRUE(s.contains(q("-1")));
  EXPECT_TRUE(s.contains(q("j")));
  EXPECT_TRUE(s.contains(q("3/5 j + 4/5 k")));
  EXPECT_FALSE(s.contains(q("i")));
  ASSERT_EQ(s.families.size(), 1u);
  EXPECT_EQ(s.families[0].dimension(), 2u);
  for (auto& p : s.points) EXPECT_EQ(p * p, q("1"));
  // Every root for y solves the full equation.
  ParamSampler rng(5);
  auto r = sample_family(s.families[0], 40, rng);
  for (auto& x : r.exact) EXPECT_TRUE(e(x).is_zero()) << to_string(x);
  for (auto& x : r.approx) EXPECT_LT(residual(e, x).max_abs, 1e-9);
}

TEST(Solver, EquationOneUnsolvable) {
  // a c != 2 c: no roots at all.
  auto s = solve({q("1+j"), q("0"), q("1")});
  EXPECT_TRUE(s.empty());
  EXPECT_TRUE(check_solution_set({q("1+j"), q("0"), q("1")}, s, GridSpec::standard(), 10).ok());
}

TEST(Solver, ErrorsForUnsupportedLeadingCoefficients) {
  try {
    solve({q("0"), q("i"), q("1")});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_zero_divisor);
  }
  try {
    solve({q("2+i"), q("i"), q("1")});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsupported);
  }
  try {
    solve_normalized({q("1+j"), q("1+i"), q("1")});  // b0 != 0
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_normalized);
  }
}

TEST(Solver, BranchSolversRejectWrongBranch) {
  const auto& e31 = corpus::find("3.1")->eq;  // P_ab != 0
  const auto& e42 = corpus::find("4.2")->eq;  // P_ab = 0
  auto d31 = branch_data(normalize(e31).eq);
  auto d42 = branch_data(normalize(e42).eq);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const error& e) {
      return e.code();
    }
    return errc::parse;
  };
  EXPECT_EQ(code([&] { sz_solve_delta_2b1(e31, d31); }), errc::wrong_branch);
  EXPECT_EQ(code([&] { sz_solve_pab_nonzero(e42, d42); }), errc::wrong_branch);
  EXPECT_EQ(code([&] { si_solve_pab_nonzero(e42, d42); }), errc::wrong_branch);
  EXPECT_EQ(code([&] { si_solve_pab_zero(e31, d31); }), errc::wrong_branch);
}

TEST(Solver, UnnormalizedInputIsShiftedBack) {
  Gen g(31);
  for (int n = 0; n < 60; ++n) {
    auto d = g.zero_divisor();
    auto x = g.quaternion();
    QuadEquation e = splitq::testing::with_root(d, g.quaternion(), x);
    auto s = solve(e);
    EXPECT_TRUE(s.contains(x)) << to_string(e.a) << " | " << to_string(e.b) << " | " << to_string(x);
    auto bad = splitq::testing::residual_failures(e, s, 20, n);
    EXPECT_TRUE(bad.empty()) << bad.front();
  }
}

TEST(Solver, RandomInstancesOfEveryBranchContainTheirRoot) {
  Gen g(41);
  auto check = [&](const std::pair<QuadEquation, SplitQuaternion>& inst, const char* what) {
    auto s = solve(inst.first);
    EXPECT_TRUE(s.contains(inst.second)) << what << ": " << to_string(inst.second);
    auto bad = splitq::testing::residual_failures(inst.first, s, 20, 3);
    EXPECT_TRUE(bad.empty()) << what << ": " << bad.front();
  };
  for (int n = 0; n < 40; ++n) {
    check(splitq::testing::sz_pab_nonzero_instance(g), "sz pab != 0");
    check(splitq::testing::sz_pab_zero_instance(g, false), "sz delta = 2 b1");
    check(splitq::testing::sz_pab_zero_instance(g, true), "sz delta = 0");
    check(splitq::testing::si_pab_zero_instance(g), "si pab = 0");
    check(splitq::testing::si_free_trace_instance(g), "si free trace");
  }
}

TEST(Solver, EmptyWhenNoRoots) {
  // P_ab = 0, I_b != 0 leaves SZ empty; I_b + 2 P_ac = 0 with I_c != 0 leaves SI empty.
  Gen g(53);
  int empties = 0;
  for (int n = 0; n < 200 && empties < 5; ++n) {
    auto a = g.normalized_a();
    Scalar b1 = g.nonzero(), h = g.scalar();
    if (b1 * b1 == h * h) continue;
    QuadEquation e{a, g.b_with(a, b1, Scalar(0), h), g.quaternion()};
    e.c[0] = -qform(e.b) / 2 + a[2] * e.c[2] + a[3] * e.c[3];
    if (is_zero(qform(e.c))) continue;
    auto s = solve(e);
    EXPECT_EQ(solve_detailed(e).cases, (std::vector<std::string>{"sz.empty_ib_nonzero", "si.pab_zero.free_trace"}));
    if (!s.empty()) continue;
    ++empties;
    auto rep = check_solution_set(e, s, GridSpec::uniform(Scalar(-1), Scalar(1), Scalar(1, 2)), 1);
    EXPECT_TRUE(rep.ok());
  }
  EXPECT_GT(empties, 0);
}
