#include <gtest/gtest.h>

#include "support.hpp"

using namespace splitq;
using splitq::testing::Gen;
using splitq::testing::q;

TEST(Properties, QformIsMultiplicative) {
  Gen g(101);
  for (int n = 0; n < 1000; ++n) {
    auto x = g.quaternion(), y = g.quaternion();
    ASSERT_EQ(qform(x * y), qform(x) * qform(y)) << to_string(x) << " , " << to_string(y);
  }
}

TEST(Properties, ConjugationReversesProducts) {
  Gen g(102);
  for (int n = 0; n < 1000; ++n) {
    auto x = g.quaternion(), y = g.quaternion();
    ASSERT_EQ(conj(x * y), conj(y) * conj(x));
    ASSERT_EQ(x * conj(x), SplitQuaternion(qform(x)));
  }
}

TEST(Properties, SquareFromTraceAndNorm) {
  Gen g(103);
  for (int n = 0; n < 1000; ++n) {
    auto x = g.quaternion();
    ASSERT_EQ(x * x, x * Scalar(2 * x[0]) - SplitQuaternion(qform(x)));
  }
}

TEST(Properties, PseudoInverse) {
  Gen g(104);
  for (int n = 0; n < 1000; ++n) {
    auto x = n % 2 ? g.zero_divisor() : g.quaternion();
    auto p = pinv(x);
    ASSERT_EQ(x * p * x, x);
    ASSERT_EQ(p * x * p, p);
    if (classify(x) == Kind::invertible) {
      ASSERT_EQ(p, inverse(x));
    }
  }
}

TEST(Properties, DeterminantVanishesWhenPabNonzero) {
  Gen g(105);
  for (int n = 0; n < 500; ++n) {
    auto a = g.normalized_a();
    auto b = g.b_with(a, g.scalar(), g.nonzero(), g.scalar());
    ASSERT_FALSE(is_zero(inner(a, b)));
    ASSERT_EQ(splitq::testing::pab_nonzero_det(a, b), 0) << to_string(a) << " , " << to_string(b);
  }
}

TEST(Properties, PointDataIdentitiesWhenPabNonzero) {
  Gen g(106);
  for (int n = 0; n < 1000; ++n) {
    auto a = g.normalized_a();
    QuadEquation e{a, g.b_with(a, g.scalar(), g.nonzero(), g.scalar()), g.quaternion()};
    auto d = branch_data(e);
    ASSERT_TRUE(d.point);
    const auto& p = *d.point;
    ASSERT_EQ(p.k1 * p.k1 + p.k2 * p.k2, p.m * p.m);
    ASSERT_EQ(p.m, d.Pab * d.Pab + d.delta * d.delta);
  }
}

TEST(Properties, LinearRelationsHoldForRootsWhenPabZero) {
  Gen g(107);
  std::size_t checked = 0;
  auto check = [&](const QuadEquation& e) {
    auto rep = solve_normalized(e);
    ASSERT_TRUE(rep.data);
    ParamSampler rng(checked);
    for (auto& x : rep.set.points) {
      auto r = splitq::testing::pab_zero_linear_residual(*rep.data, x);
      ASSERT_TRUE(is_zero(r[0]) && is_zero(r[1])) << to_string(x);
      ++checked;
    }
    for (auto& f : rep.set.families) {
      auto s = sample_family(f, 10, rng);
      for (auto& x : s.exact) {
        auto r = splitq::testing::pab_zero_linear_residual(*rep.data, x);
        ASSERT_TRUE(is_zero(r[0]) && is_zero(r[1])) << to_string(x) << " of " << f.origin;
        ++checked;
      }
      for (auto& x : s.approx) {
        auto r = splitq::testing::pab_zero_linear_residual(*rep.data, x);
        ASSERT_LT(std::max(std::abs(r[0]), std::abs(r[1])), 1e-9);
        ++checked;
      }
    }
  };
  for (int n = 0; n < 100; ++n) {
    check(splitq::testing::sz_pab_zero_instance(g, false).first);
    check(splitq::testing::sz_pab_zero_instance(g, true).first);
    check(splitq::testing::si_pab_zero_instance(g).first);
    check(splitq::testing::si_free_trace_instance(g).first);
  }
  for (const char* id : {"3.3", "3.4", "3.5", "3.6", "4.2", "4.3"}) check(normalize(corpus::find(id)->eq).eq);
  EXPECT_GT(checked, 1000u);
}

TEST(Properties, FreeTraceIdentities) {
  Gen g(108);
  int done = 0;
  for (int tries = 0; done < 200 && tries < 100000; ++tries) {
    auto [e, x] = splitq::testing::si_free_trace_instance(g);
    auto d = branch_data(e);
    if (!is_zero(d.Ic) || !is_zero(d.Pbc) || is_zero(d.Ib)) continue;
    ASSERT_TRUE(is_zero(d.Pab));
    ASSERT_TRUE(is_zero(d.Ib + 2 * d.Pac));
    auto bad = splitq::testing::free_trace_identities(d);
    ASSERT_TRUE(bad.empty()) << bad.front();
    ++done;
  }
  EXPECT_EQ(done, 200);
}

TEST(Properties, RandomInstancesContainTheirRoot) {
  Gen g(109);
  for (int n = 0; n < 200; ++n) {
    auto [e, x] = splitq::testing::sz_pab_nonzero_instance(g);
    ASSERT_TRUE(e(x).is_zero());
    ASSERT_TRUE(solve(e).contains(x)) << to_string(x);
  }
}
