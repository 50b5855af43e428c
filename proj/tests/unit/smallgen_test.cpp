#include <gtest/gtest.h>

#include "extremal/chevalley.hpp"
#include "extremal/errors.hpp"
#include "extremal/smallgen.hpp"

using namespace extremal;
using namespace extremal::smallgen;

TEST(TwoGenerators, Classification) {
  Field q = Field::rationals();
  EXPECT_EQ(two_gen_classify(q.from_int(0), false).kind, TwoGenCase::Abelian);
  auto h = two_gen_classify(q.from_int(0), true);
  EXPECT_EQ(h.kind, TwoGenCase::Heisenberg);
  EXPECT_EQ(h.algebra.dim(), 3);
  auto s = two_gen_classify(q.from_int(3), true);
  EXPECT_EQ(s.kind, TwoGenCase::Sl2);
  EXPECT_EQ(s.algebra.dim(), 3);
  auto fx = is_extremal(s.algebra, s.x);
  ASSERT_TRUE(fx.has_value());
  EXPECT_EQ(dot(*fx, s.y), q.from_int(3));
}

// The transformed parameters agree with f-values read off the algebra itself.
TEST(ThreeGenerators, ExpTransformMatchesAlgebra) {
  for (long long c : {0LL, 7LL}) {
    Field k = Field::of_characteristic(c);
    auto p = TriangleParams::make(k, 1, 2, 3, 0);
    auto M = build_M(p);
    const auto& L = M.algebra;
    Vec x = L.basis_vector(0), y = L.basis_vector(1), z = L.basis_vector(2);
    auto fx = *is_extremal(L, x);
    auto fy = *is_extremal(L, y);
    for (long long sv : {1LL, -2LL, 3LL}) {
      Scalar s = k.from_int(sv);
      Vec z2 = exp_apply(L, x, s, z);
      ASSERT_TRUE(is_extremal(L, z2).has_value());
      auto t = exp_transform_params(p, s);
      EXPECT_EQ(t.xy, p.xy);
      EXPECT_EQ(t.xz, dot(fx, z2));
      EXPECT_EQ(t.yz, dot(fy, z2));
      EXPECT_EQ(t.central, dot(fx, L.bracket(y, z2)));
    }
  }
}

TEST(ThreeGenerators, NormalizationReplays) {
  Field q = Field::rationals();
  for (auto p : {TriangleParams::make(q, 0, 0, 0, 5), TriangleParams::make(q, 3, 0, 0, 2),
                 TriangleParams::make(q, 1, 1, 0, 4), TriangleParams::make(q, 1, 2, -4, 0),
                 TriangleParams::make(q, 2, 1, 1, 1)}) {
    auto tr = normalize(p);
    EXPECT_EQ(replay(p, tr.steps), tr.final) << p.to_string();
    if (!tr.extension_required) EXPECT_TRUE(tr.final.central.is_zero()) << p.to_string();
  }
}

TEST(ThreeGenerators, ExtensionRequired) {
  // -2abc = 32 is not a rational square.
  EXPECT_TRUE(normalize(TriangleParams::make(Field::rationals(), -8, -2, -1, 0)).extension_required);
  // -2 = 5 is not a square mod 7.
  EXPECT_TRUE(normalize(TriangleParams::make(Field::prime(7), 1, 1, 1, 0)).extension_required);
  EXPECT_FALSE(normalize(TriangleParams::make(Field::rationals(), -2, -2, -2, 0)).extension_required);
}

TEST(ThreeGenerators, AllCasesBuildAndVerify) {
  for (long long c : {0LL, 5LL}) {
    Field k = Field::of_characteristic(c);
    for (auto p : {TriangleParams::make(k, 0, 0, 0, 0), TriangleParams::make(k, 1, 0, 0, 0),
                   TriangleParams::make(k, 1, 1, 0, 0), TriangleParams::make(k, -2, -2, -2, 0)}) {
      auto tr = normalize(p);
      ASSERT_FALSE(tr.extension_required);
      auto M = build_M(tr.final);
      EXPECT_EQ(M.algebra.dim(), 8);
      EXPECT_EQ(M.rewrite_log.size(), 28u);
      auto rep = verify_3gen_structure(M);
      EXPECT_TRUE(rep.pass()) << p.to_string();
    }
  }
}

TEST(ThreeGenerators, RejectsCentral) {
  EXPECT_THROW(build_M(TriangleParams::make(Field::rationals(), 0, 0, 0, 1)), CentralNotZero);
  EXPECT_THROW(scale_params(TriangleParams::make(Field::rationals(), 1, 1, 1, 1), Field::rationals().from_int(1),
                            Field::rationals().from_int(1), Field::rationals().from_int(1)),
               CentralNotZero);
}

TEST(ThreeGenerators, Sl3ExampleParameters) {
  Field q = Field::rationals();
  auto ex = sl3_example(q);
  const auto& L = ex.algebra;
  Vec x = L.basis_vector(0), y = L.basis_vector(1), z = L.basis_vector(2);
  auto fx = *is_extremal(L, x);
  auto fy = *is_extremal(L, y);
  EXPECT_EQ(dot(fx, y), q.from_int(-2));
  EXPECT_EQ(dot(fx, z), q.from_int(-2));
  EXPECT_EQ(dot(fy, z), q.from_int(-2));
  EXPECT_TRUE(dot(fx, L.bracket(y, z)).is_zero());
}
