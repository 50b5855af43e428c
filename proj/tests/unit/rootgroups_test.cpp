#include <gtest/gtest.h>

#include <set>

#include "extremal/chevalley.hpp"
#include "extremal/errors.hpp"
#include "extremal/properties.hpp"
#include "extremal/rootgroups.hpp"

using namespace extremal;
using namespace extremal::rootgroups;

TEST(RootGroups, SampleParameters) {
  EXPECT_EQ(sample_parameters(Field::prime(5)).size(), 5u);
  EXPECT_EQ(sample_parameters(Field::prime(7)).size(), 7u);
  EXPECT_EQ(sample_parameters(Field::rationals()).size(), 7u);
}

TEST(RootGroups, PairKindsFollowRootGeometry) {
  ChevalleyAlgebra g('A', 3, Field::rationals());
  auto pairs = long_root_pairs(g.root_system());
  std::set<std::string> kinds;
  for (const auto& rp : pairs) {
    kinds.insert(rp.kind);
    auto k = classify_pair(g.algebra(), g.x(rp.a), g.x(rp.b));
    if (rp.kind == "opposite") EXPECT_EQ(k, PairKind::RankOne);
    else if (rp.kind == "sum-root") EXPECT_EQ(k, PairKind::Nilpotent);
    else EXPECT_EQ(k, PairKind::Commuting);
  }
  EXPECT_EQ(kinds.size(), 4u);
}

TEST(RootGroups, AbstractPropertiesExhaustiveGF5) {
  ChevalleyAlgebra g('A', 2, Field::prime(5));
  auto params = sample_parameters(g.field());
  for (const auto& rp : long_root_pairs(g.root_system())) {
    auto rep = verify_abstract_root_properties(g.algebra(), g.x(rp.a), g.x(rp.b), params);
    EXPECT_TRUE(rep.pass()) << rp.kind;
  }
}

TEST(RootGroups, ElementIsAdditiveInParameter) {
  Field k = Field::prime(7);
  ChevalleyAlgebra g('A', 2, k);
  auto x = g.x(g.root_system().highest_root());
  auto a = root_group_element(g.algebra(), x, k.from_int(3));
  auto b = root_group_element(g.algebra(), x, k.from_int(5));
  auto c = root_group_element(g.algebra(), x, k.from_int(1));
  EXPECT_EQ(a.matrix * b.matrix, c.matrix);
}

TEST(RootGroups, RejectsNonExtremal) {
  ChevalleyAlgebra g('B', 2, Field::rationals());
  const auto& rs = g.root_system();
  Vec shortx, longx;
  for (const auto& r : rs.roots()) (rs.is_long(r) ? longx : shortx) = g.x(r);
  EXPECT_THROW(verify_abstract_root_properties(g.algebra(), shortx, longx, sample_parameters(g.field())),
               NotExtremal);
}

TEST(RootGroups, ProjectiveLineGF5) {
  ChevalleyAlgebra g('A', 3, Field::prime(5));
  for (const auto& rp : long_root_pairs(g.root_system()))
    if (rp.kind == "difference-root" || rp.kind == "orthogonal") {
      auto rep = strongcomm_check(g.algebra(), g.x(rp.a), g.x(rp.b), sample_parameters(g.field()));
      EXPECT_TRUE(rep.pass()) << rp.kind;
    }
}

TEST(Properties, RandomPairChecks) {
  ChevalleyAlgebra g('A', 3, Field::rationals());
  std::vector<Vec> seeds;
  for (const auto& r : g.root_system().roots()) seeds.push_back(g.x(r));
  auto br = properties::bracket_extremal_property(g.algebra(), seeds, 11, 20);
  EXPECT_TRUE(br.pass());
  auto form = extremal_form(g.algebra(), extremal_spanning_set(g));
  EXPECT_TRUE(properties::exp_form_property(g.algebra(), form.gram, seeds, 11, 10).pass());
}

TEST(Properties, SamplerIsDeterministic) {
  ChevalleyAlgebra g('A', 2, Field::prime(7));
  std::vector<Vec> seeds{g.x(g.root_system().highest_root())};
  properties::ExtremalSampler a(g.algebra(), seeds, 3), b(g.algebra(), seeds, 3);
  for (int i = 0; i < 5; ++i) {
    auto v = a.next();
    EXPECT_EQ(v, b.next());
    EXPECT_TRUE(is_extremal(g.algebra(), v).has_value());
  }
}
