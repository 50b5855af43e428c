#include <gtest/gtest.h>

#include "extremal/chevalley.hpp"
#include "extremal/errors.hpp"
#include "extremal/liealg.hpp"

using namespace extremal;

namespace {

// e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra sl2(const Field& k) {
  return LieAlgebra(k, {"e", "f", "h"},
                    {{0, 1, 2, k.from_int(1)}, {2, 0, 0, k.from_int(2)}, {2, 1, 1, k.from_int(-2)}});
}

// Heisenberg algebra: [a,b] = c.
LieAlgebra heisenberg(const Field& k) { return LieAlgebra(k, {"a", "b", "c"}, {{0, 1, 2, k.from_int(1)}}); }

}  // namespace

TEST(LieAlgebra, RejectsJacobiFailure) {
  Field q = Field::rationals();
  // [a,b] = c, [a,c] = a: J(a,b,c) = c.
  EXPECT_THROW(LieAlgebra(q, {"a", "b", "c"}, {{0, 1, 2, q.from_int(1)}, {0, 2, 0, q.from_int(1)}}),
               JacobiViolation);
}

TEST(LieAlgebra, Sl2Forms) {
  Field q = Field::rationals();
  auto L = sl2(q);
  auto e = L.basis_vector(0), f = L.basis_vector(1), h = L.basis_vector(2);
  auto k = killing_form(L);
  EXPECT_EQ(k(e, f), q.from_int(4));
  EXPECT_EQ(k(h, h), q.from_int(8));
  // [e,[e,f]] = [e,h] = -2e.
  auto fe = is_extremal(L, e);
  ASSERT_TRUE(fe.has_value());
  EXPECT_EQ(dot(*fe, f), q.from_int(-2));
  EXPECT_FALSE(is_extremal(L, h).has_value());
  auto form = extremal_form(L, {e, f, exp_apply(L, e, q.from_int(1), f)});
  EXPECT_TRUE(is_symmetric(form.gram));
  EXPECT_TRUE(is_associative(L, form.gram));
  EXPECT_EQ(center(L).dim(), 0);
  EXPECT_EQ(solvable_radical(L).space.dim(), 0);
}

TEST(LieAlgebra, Sl2InCharacteristicThreeKeepsNoRadical) {
  auto L = sl2(Field::prime(3));
  EXPECT_EQ(solvable_radical(L).space.dim(), 0);
  EXPECT_EQ(radical_of_form(killing_form(L)).dim(), 0);
}

TEST(LieAlgebra, HeisenbergStructure) {
  Field q = Field::rationals();
  auto L = heisenberg(q);
  EXPECT_EQ(center(L).dim(), 1);
  EXPECT_TRUE(is_nilpotent(L, Subspace::whole(q, 3)));
  auto lcs = lower_central_series(L);
  ASSERT_GE(lcs.size(), 3u);
  EXPECT_EQ(lcs[1].dim(), 1);
  EXPECT_EQ(lcs[2].dim(), 0);
  EXPECT_TRUE(is_sandwich(L, L.basis_vector(0)));
  EXPECT_TRUE(is_sandwich(L, L.basis_vector(2)));
  EXPECT_EQ(radical_of_form(killing_form(L)).dim(), 3);
}

TEST(LieAlgebra, JsonRoundTrip) {
  auto L = sl2(Field::prime(7));
  auto back = LieAlgebra::from_json(L.to_json());
  EXPECT_EQ(back.to_json(), L.to_json());
  EXPECT_EQ(back.field(), Field::prime(7));
}

TEST(Radicals, Sl3ModThreeHasCenter) {
  ChevalleyAlgebra g('A', 2, Field::prime(3));
  EXPECT_EQ(center(g.algebra()).dim(), 1);
  EXPECT_EQ(radical_of_form(killing_form(g.algebra())).dim(), 8);
  EXPECT_EQ(solvable_radical(g.algebra()).space.dim(), 1);
}

TEST(Radicals, G2ModThree) {
  ChevalleyAlgebra g('G', 2, Field::prime(3));
  const auto& L = g.algebra();
  auto form = extremal_form(L, extremal_spanning_set(g));
  auto radf = radical_of_form(form);
  EXPECT_EQ(radf.dim(), 7);
  EXPECT_TRUE(is_ideal(L, radf));
  EXPECT_EQ(solvable_radical(L).space.dim(), 0);
  std::vector<Vec> shorts;
  for (const auto& r : g.root_system().roots())
    if (!g.root_system().is_long(r)) shorts.push_back(g.x(r));
  EXPECT_EQ(ideal_generated(L, shorts), radf);
}

TEST(Radicals, PhiSpectrumOnSl2) {
  auto L = sl2(Field::rationals());
  EXPECT_TRUE(phi_spectrum_check(L, L.basis_vector(0), L.basis_vector(1)).pass());
}
