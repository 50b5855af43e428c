#include <gtest/gtest.h>

#include "extremal/freelie.hpp"

using namespace extremal;
using namespace extremal::freelie;

namespace {

// Brute-force count: aperiodic words that are minimal among their rotations.
long long count_lyndon(int r, int d) {
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= r;
  long long c = 0;
  for (long long code = 0; code < n; ++code) {
    Word w(d);
    long long x = code;
    for (int i = d - 1; i >= 0; --i) {
      w[i] = static_cast<int>(x % r) + 1;
      x /= r;
    }
    bool ok = true;
    for (int s = 1; s < d && ok; ++s) {
      Word rot(w.begin() + s, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + s);
      if (!(w < rot)) ok = false;
    }
    if (ok) ++c;
  }
  return c;
}

}  // namespace

TEST(FreeLie, WittMatchesBruteForce) {
  for (int r = 1; r <= 4; ++r)
    for (int d = 1; d <= 7; ++d) {
      EXPECT_EQ(witt_number(r, d), count_lyndon(r, d)) << r << " " << d;
      EXPECT_EQ(static_cast<long long>(lyndon_words(r, d).size()), witt_number(r, d));
    }
}

TEST(FreeLie, StandardFactorization) {
  auto [u, v] = standard_factorization({1, 1, 2});
  EXPECT_EQ(u, Word({1}));
  EXPECT_EQ(v, Word({1, 2}));
  EXPECT_EQ(bracket_string({1, 1, 2}), "[x1,[x1,x2]]");
  EXPECT_EQ(bracket_string({1, 2, 2}), "[[x1,x2],x2]");
}

TEST(FreeLie, BracketAntisymmetryAndJacobi) {
  FreeLieAlgebra F(3);
  auto x = F.generator(1), y = F.generator(2), z = F.generator(3);
  auto xy = F.bracket(x, y);
  EXPECT_EQ(F.bracket(y, x), F.field().from_int(-1) * xy);
  EXPECT_TRUE(F.bracket(x, x).is_zero());
  auto j = F.bracket(x, F.bracket(y, z)) + F.bracket(y, F.bracket(z, x)) + F.bracket(z, F.bracket(x, y));
  EXPECT_TRUE(j.is_zero());
  auto m = F.monomial({2, 1, 3, 1});
  EXPECT_EQ(m.homogeneous_degree(3), MultiDegree({2, 1, 1}));
}

TEST(FreeLie, JacobiOnBasisTriples) {
  FreeLieAlgebra F(2);
  std::vector<Element> els;
  for (int d = 1; d <= 3; ++d)
    for (const auto& w : F.basis(d)) els.push_back(F.basis_element(w));
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els) {
        auto j = F.bracket(a, F.bracket(b, c)) + F.bracket(b, F.bracket(c, a)) + F.bracket(c, F.bracket(a, b));
        ASSERT_TRUE(j.is_zero());
      }
}
