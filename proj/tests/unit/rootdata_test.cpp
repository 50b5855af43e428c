#include <gtest/gtest.h>

#include "extremal/errors.hpp"
#include "extremal/rootdata.hpp"

using namespace extremal;

namespace {

int expected_root_count(char t, int n) {
  switch (t) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'G': return 12;
    case 'F': return 48;
    default: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
}

int coxeter_number(char t, int n) {
  switch (t) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2 * n;
    case 'D': return 2 * n - 2;
    case 'G': return 6;
    case 'F': return 12;
    default: return n == 6 ? 12 : n == 7 ? 18 : 30;
  }
}

const std::vector<std::pair<char, int>> kTypes = {{'A', 1}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 5}, {'C', 3},
                                                  {'C', 4}, {'D', 4}, {'D', 6}, {'G', 2}, {'F', 4}, {'E', 6},
                                                  {'E', 7}, {'E', 8}};

}  // namespace

TEST(RootSystem, CountsAndHighestRoot) {
  for (auto [t, n] : kTypes) {
    RootSystem rs(t, n);
    EXPECT_EQ(static_cast<int>(rs.roots().size()), expected_root_count(t, n)) << rs.name();
    EXPECT_EQ(RootSystem::height(rs.highest_root()), coxeter_number(t, n) - 1) << rs.name();
    EXPECT_TRUE(rs.is_long(rs.highest_root())) << rs.name();
    for (const auto& r : rs.roots()) {
      Root neg(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
      EXPECT_TRUE(rs.is_root(neg));
    }
  }
}

TEST(RootSystem, CartanMatrices) {
  using M = std::vector<std::vector<int>>;
  EXPECT_EQ(RootSystem('A', 3).cartan_matrix(), (M{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  // Row i holds <alpha_j, alpha_i^vee>; alpha_3 of B_3 is short.
  EXPECT_EQ(RootSystem('B', 3).cartan_matrix(), (M{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  EXPECT_EQ(RootSystem('C', 3).cartan_matrix(), (M{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  EXPECT_EQ(RootSystem('G', 2).cartan_matrix(), (M{{2, -3}, {-1, 2}}));
  EXPECT_EQ(RootSystem('D', 4).cartan_matrix(), (M{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
}

TEST(RootSystem, EpsilonCoordinates) {
  RootSystem b3('B', 3);
  for (const auto& r : b3.roots()) EXPECT_EQ(b3.from_epsilon(b3.to_epsilon(r)), r);
  int short_count = 0;
  for (const auto& r : b3.roots()) short_count += b3.is_long(r) ? 0 : 1;
  EXPECT_EQ(short_count, 6);
  EXPECT_THROW(b3.from_epsilon({1, 1, 1}), PreconditionNotMet);
}

TEST(RootSystem, RejectsInvalidRanks) {
  EXPECT_THROW(RootSystem('A', 0), InvalidRank);
  EXPECT_THROW(RootSystem('B', 1), InvalidRank);
  EXPECT_THROW(RootSystem('D', 3), InvalidRank);
  EXPECT_THROW(RootSystem('E', 9), InvalidRank);
  EXPECT_THROW(RootSystem('G', 3), InvalidRank);
}

TEST(ChevalleyConstants, MagnitudeIsStringLengthPlusOne) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}, {'F', 4}, {'E', 6}}) {
    RootSystem rs(t, n);
    ChevalleyConstants N(rs);
    for (const auto& a : rs.roots())
      for (const auto& b : rs.roots()) {
        Root s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        if (!rs.is_root(s)) {
          EXPECT_EQ(N.N(a, b), 0);
          continue;
        }
        // Walk the a-string through b downwards directly.
        int p = 0;
        Root c = b;
        while (true) {
          for (std::size_t i = 0; i < c.size(); ++i) c[i] -= a[i];
          if (!rs.is_root(c)) break;
          ++p;
        }
        EXPECT_EQ(std::abs(N.N(a, b)), p + 1) << rs.name();
        EXPECT_EQ(N.N(a, b), -N.N(b, a));
      }
  }
}
