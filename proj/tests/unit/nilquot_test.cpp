#include <gtest/gtest.h>

#include "extremal/errors.hpp"
#include "extremal/freelie.hpp"
#include "extremal/nilquot.hpp"

using namespace extremal;
using namespace extremal::nilquot;

TEST(GradedQuotient, FreeModeMatchesWitt) {
  for (int r = 2; r <= 3; ++r) {
    QuotientOptions o;
    o.presentation = Presentation::Free;
    o.max_degree = 7;
    auto q = graded_quotient(r, o);
    EXPECT_TRUE(q.truncated());
    auto dims = q.dims_by_degree();
    ASSERT_EQ(dims.size(), 7u);
    for (int d = 1; d <= 7; ++d) EXPECT_EQ(dims[d - 1], freelie::witt_number(r, d)) << r << " " << d;
    EXPECT_TRUE(q.certify().pass());
  }
}

TEST(GradedQuotient, SmallSandwichAlgebras) {
  EXPECT_EQ(sandwich_algebra(1).dim(), 1);
  EXPECT_EQ(sandwich_algebra(2).dim(), 3);
  auto l3 = sandwich_algebra(3);
  EXPECT_EQ(l3.dim(), 8);
  EXPECT_TRUE(l3.certify().pass());
  auto l4 = sandwich_algebra(4);
  EXPECT_EQ(l4.dim(), 28);
  EXPECT_EQ(l4.dims_by_degree(), std::vector<int>({4, 6, 8, 6, 4}));
  EXPECT_TRUE(l4.certify().pass());
}

TEST(GradedQuotient, AgreesWithFreeAlgebraElimination) {
  for (int r = 1; r <= 4; ++r)
    EXPECT_EQ(sandwich_dims_via_free_algebra(r), sandwich_algebra(r).dims_by_degree()) << r;
}

TEST(GradedQuotient, PrimeFieldAgrees) {
  auto q = sandwich_algebra(4, Field::prime(101));
  EXPECT_EQ(q.dim(), 28);
  EXPECT_TRUE(q.certify().pass());
}

TEST(GradedQuotient, ToLieAlgebraValidates) {
  auto l = sandwich_algebra(3).to_lie_algebra();
  EXPECT_EQ(l.dim(), 8);
  EXPECT_NO_THROW(l.validate());
  EXPECT_TRUE(is_nilpotent(l, Subspace::whole(l.field(), l.dim())));
}

TEST(AssocDims, SmallRanks) {
  EXPECT_EQ(assoc_dims_via_embedding(1).total, 2);
  EXPECT_EQ(assoc_dims_via_embedding(2).total, 5);
  auto r3 = assoc_dims_via_embedding(3);
  EXPECT_EQ(r3.total, 19);
  EXPECT_EQ(r3.dims_by_length, std::vector<int>({1, 3, 6, 6, 3}));
  EXPECT_TRUE(r3.palindromic());
  for (int r = 1; r <= 3; ++r) {
    auto d = assoc_dims_direct(r);
    EXPECT_EQ(d.dims_by_length, assoc_dims_via_embedding(r).dims_by_length) << r;
  }
}

TEST(Embedding, LowerRankSits) {
  for (int r = 2; r <= 4; ++r) EXPECT_TRUE(check_subalgebra_embedding(r).pass()) << r;
}

TEST(SpanningSet, FourGenerators) {
  auto rep = spanning_set_check_4gen();
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.actual;
}
