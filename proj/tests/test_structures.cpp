#include <gtest/gtest.h>

#include "inclogic/structures.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace inclogic;
using inclogic::testing::sample_model;

namespace {

WorldTeam team(const KripkeModel& m, std::vector<std::string> names) { return m.team(names); }

}  // namespace

TEST(Image, Forward) {
  const auto m = sample_model();
  EXPECT_EQ(r_image(m, team(m, {"w1"})), team(m, {"s1", "s2"}));
  EXPECT_EQ(r_image(m, m.empty_team()), m.empty_team());
  EXPECT_EQ(r_image(m, team(m, {"w1", "w2", "w3"})), team(m, {"s1", "s2", "s3"}));
}

TEST(Image, Backward) {
  const auto m = sample_model();
  EXPECT_EQ(r_preimage(m, team(m, {"s2"})), team(m, {"w1", "w2", "w3"}));
  EXPECT_EQ(r_preimage(m, m.empty_team()), m.empty_team());
  EXPECT_EQ(r_preimage(m, team(m, {"s1"})), team(m, {"w1"}));
}

TEST(Image, SuccessorPair) {
  const auto m = sample_model();
  EXPECT_TRUE(is_successor_pair(m, team(m, {"w1"}), team(m, {"s1"})));
  EXPECT_TRUE(is_successor_pair(m, m.empty_team(), m.empty_team()));
  EXPECT_FALSE(is_successor_pair(m, team(m, {"w2"}), team(m, {"s1"})));
}

TEST(Image, ForeignTeam) {
  const auto m = sample_model();
  EXPECT_THROW(r_image(m, WorldSet(3)), ForeignWorldError);
  EXPECT_THROW(m.team({"nowhere"}), ForeignWorldError);
  EXPECT_THROW(is_successor_pair(m, m.all_worlds(), WorldSet(2)), ForeignWorldError);
}

TEST(Image, PropertiesOnRandomModels) {
  inclogic::testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto m = inclogic::testing::random_model(rng, 1 + i % 7, {"p"});
    const auto t = inclogic::testing::random_team(rng, m.size(), m.size());
    const auto s = t | inclogic::testing::random_team(rng, m.size(), m.size());
    EXPECT_TRUE(r_image(m, t).is_subset_of(r_image(m, s)));
    EXPECT_TRUE(r_preimage(m, t).is_subset_of(r_preimage(m, s)));
    bool all_have_successor = true;
    t.for_each([&](std::size_t w) { all_have_successor = all_have_successor && !m.successors(w).empty(); });
    if (all_have_successor) {
      EXPECT_TRUE(is_successor_pair(m, t, r_image(m, t)));
    }
  }
}

TEST(Assignments, Enumerate) {
  EXPECT_EQ(all_assignments({}).size(), 1U);
  const auto one = all_assignments({"p"});
  ASSERT_EQ(one.size(), 2U);
  EXPECT_FALSE(one.at(0)["p"]);
  EXPECT_TRUE(one.at(1)["p"]);
  EXPECT_EQ(all_assignments({"p", "q"}).size(), 4U);
  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) many.push_back("x" + std::to_string(i));
  EXPECT_THROW(all_assignments(many), SizeGuardError);
}

TEST(PropTeamTest, CanonicalOrderAndDedup) {
  const PropTeam x({"p", "q"}, {{1, 1}, {0, 1}, {1, 0}, {1, 1}});
  ASSERT_EQ(x.size(), 3U);
  EXPECT_EQ(x.rows()[0], (Bits{1, 0}));
  EXPECT_EQ(x.rows()[1], (Bits{0, 1}));
  EXPECT_EQ(x.rows()[2], (Bits{1, 1}));
  EXPECT_TRUE(x.contains({0, 1}));
  EXPECT_FALSE(x.contains({0, 0}));
  EXPECT_THROW(PropTeam({"p"}, {{1, 0}}), FormatError);
  EXPECT_THROW(PropTeam({"p", "p"}, {}), FormatError);
}

TEST(PropTeamTest, ProjectionAndLookup) {
  const auto x = inclogic::testing::sample_team();
  const auto s2 = x.at(2);
  EXPECT_EQ(s2.project({"p", "r"}), (Bits{1, 1}));
  EXPECT_THROW(s2["z"], UnboundPropError);
  EXPECT_EQ((x.subteam(0b001) | x.subteam(0b110)), x);
}

TEST(Model, Accessors) {
  const auto m = sample_model();
  EXPECT_EQ(m.size(), 6U);
  EXPECT_TRUE(m.has_edge(m.world_index("w3"), m.world_index("s3")));
  EXPECT_FALSE(m.has_edge(m.world_index("s3"), m.world_index("w3")));
  EXPECT_THROW(m.valuation("z"), UnboundPropError);
  const auto n = m.with_valuation("z", m.team({"w1"}));
  EXPECT_TRUE(n.valuation("z").contains(0));
  EXPECT_THROW(KripkeModel::from_names({"a"}, {{"a", "b"}}, {}), ForeignWorldError);
}

TEST(Model, PropEmbedding) {
  const auto x = inclogic::testing::sample_team();
  const auto m = embed_prop_team(x);
  EXPECT_EQ(m.size(), 3U);
  EXPECT_TRUE(m.edges().empty());
  for (std::size_t i = 0; i < x.size(); ++i)
    EXPECT_EQ(m.valuation("q").contains(i), x.at(i)["q"]);
}
