#include <gtest/gtest.h>

#include "extremal/chevalley.hpp"
#include "extremal/errors.hpp"

using namespace extremal;

TEST(Chevalley, DimensionsAndValidation) {
  for (auto [t, n, d] : std::vector<std::tuple<char, int, int>>{
           {'A', 1, 3}, {'A', 2, 8}, {'B', 2, 10}, {'C', 3, 21}, {'D', 4, 28}, {'G', 2, 14}, {'F', 4, 52}}) {
    ChevalleyAlgebra g(t, n, Field::rationals());
    EXPECT_EQ(g.dim(), d);
    EXPECT_NO_THROW(g.algebra().validate());
  }
}

TEST(Chevalley, RootElementsExtremalExactlyWhenLong) {
  for (long long p : {0LL, 5LL}) {
    Field f = Field::of_characteristic(p);
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'G', 2}, {'F', 4}}) {
      ChevalleyAlgebra g(t, n, f);
      const auto& rs = g.root_system();
      for (const auto& r : rs.roots())
        EXPECT_EQ(is_extremal(g.algebra(), g.x(r)).has_value(), rs.is_long(r)) << g.name() << " " << p;
    }
  }
}

TEST(Chevalley, KillingValueOnSl3) {
  // kappa(E12, E21) = 2n tr(E12 E21) = 6 for sl_3.
  ChevalleyAlgebra g('A', 2, Field::rationals());
  auto k = killing_form(g.algebra());
  auto a = g.root_system().simple_roots()[0];
  Root neg{-a[0], -a[1]};
  EXPECT_EQ(k(g.x(a), g.x(neg)), Field::rationals().from_int(6));
}

TEST(Chevalley, ExtremalFormFromSpanningSet) {
  ChevalleyAlgebra g('G', 2, Field::rationals());
  auto span = extremal_spanning_set(g);
  auto form = extremal_form(g.algebra(), span);
  EXPECT_TRUE(is_symmetric(form.gram));
  EXPECT_TRUE(is_associative(g.algebra(), form.gram));
  const auto& hr = g.root_system().highest_root();
  Root neg{-hr[0], -hr[1]};
  auto fx = is_extremal(g.algebra(), g.x(hr));
  ASSERT_TRUE(fx.has_value());
  EXPECT_EQ(form(g.x(hr), g.x(neg)), dot(*fx, g.x(neg)));
}

TEST(Chevalley, ReductionFromRationalConstants) {
  ChevalleyAlgebra q('E', 6, Field::rationals());
  ChevalleyAlgebra direct('E', 6, Field::prime(5));
  ChevalleyAlgebra reduced('E', 6, Field::prime(5), q.algebra());
  EXPECT_EQ(direct.algebra().constants().size(), reduced.algebra().constants().size());
  EXPECT_EQ(direct.algebra().to_json(), reduced.algebra().to_json());
  EXPECT_THROW(ChevalleyAlgebra('E', 7, Field::prime(5), q.algebra()), PreconditionNotMet);
}

TEST(Chevalley, MingenSmallRows) {
  for (auto [t, n, expect] : std::vector<std::tuple<char, int, int>>{{'A', 2, 3}, {'C', 2, 4}, {'G', 2, 4}}) {
    EXPECT_EQ(minimal_generator_count(t, n), expect);
    auto row = mingen_row(t, n, Field::prime(5));
    EXPECT_TRUE(row.pass()) << row.to_json();
  }
}

TEST(Chevalley, ExpAutomorphismRejectsNonExtremal) {
  ChevalleyAlgebra g('B', 2, Field::rationals());
  const auto& rs = g.root_system();
  for (const auto& r : rs.roots())
    if (!rs.is_long(r)) {
      EXPECT_THROW(exp_automorphism(g.algebra(), g.x(r), Field::rationals().from_int(1)), NotExtremal);
      break;
    }
}
