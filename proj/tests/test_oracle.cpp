#include <gtest/gtest.h>

#include "inclogic/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace inclogic;
namespace t = inclogic::testing;

TEST(Tarski, Propositional) {
  const PropTeam x({"p", "q"}, {{1, 0}, {0, 0}});
  const auto s10 = x.at(1);
  const auto s00 = x.at(0);
  EXPECT_TRUE(eval_pl_tarski(s10, parse_formula("p")));
  EXPECT_FALSE(eval_pl_tarski(s10, parse_formula("p & q")));
  EXPECT_TRUE(eval_pl_tarski(s00, parse_formula("p | !p")));
  EXPECT_THROW(eval_pl_tarski(s00, parse_formula("z")), UnboundPropError);
}

TEST(Tarski, Modal) {
  const auto m = t::sample_model();
  EXPECT_TRUE(eval_ml_tarski(m, "w2", parse_formula("<>q")));
  EXPECT_TRUE(eval_ml_tarski(m, "w1", parse_formula("[]p")));
  EXPECT_FALSE(eval_ml_tarski(m, "w3", parse_formula("[]p")));
  for (const auto& w : m.world_names()) EXPECT_TRUE(eval_ml_tarski(m, w, parse_formula("p | !p")));
  EXPECT_THROW(eval_ml_tarski(m, "nowhere", parse_formula("p")), ForeignWorldError);
}

TEST(InclusionAtom, FourAssignmentTeam) {
  const auto x = t::sample_team();
  EXPECT_TRUE(eval_inclusion_prop(x, {"p"}, {"r"}));
  EXPECT_TRUE(eval_inclusion_prop(x, {"q"}, {"p"}));
  EXPECT_FALSE(eval_inclusion_prop(x, {"p", "q"}, {"r", "r"}));
  EXPECT_THROW(eval_inclusion_prop(x, {}, {}), ArityError);
  EXPECT_TRUE(eval_inclusion_prop(PropTeam({"p", "q"}, {}), {"p"}, {"q"}));
  EXPECT_THROW(eval_inclusion_prop(x, {"z"}, {"p"}), UnboundPropError);
}

TEST(TeamProp, GuardedDisjunction) {
  const Formula f = parse_formula(t::guarded_disjunction());
  EXPECT_TRUE(eval_team_prop(t::sample_subteam({1, 2}), f, Semantics::Strict));
  EXPECT_TRUE(eval_team_prop(t::sample_subteam({2, 3}), f, Semantics::Strict));
  EXPECT_FALSE(eval_team_prop(t::sample_team(), f, Semantics::Strict));
  EXPECT_TRUE(eval_team_prop(t::sample_team(), f, Semantics::Lax));
}

TEST(TeamProp, RejectsModalities) {
  EXPECT_THROW(eval_team_prop(t::sample_team(), parse_formula("<>p"), Semantics::Lax), FragmentError);
}

TEST(TeamModal, BoxOverSampleModel) {
  const auto m = t::sample_model();
  const Formula f = Formula::box(parse_formula(t::guarded_disjunction()));
  for (const char* w : {"w1", "w2", "w3"})
    EXPECT_TRUE(eval_team_modal(m, m.team({w}), f, Semantics::Strict)) << w;
  EXPECT_FALSE(eval_team_modal(m, m.team({"w1", "w2", "w3"}), f, Semantics::Strict));
  EXPECT_TRUE(eval_team_modal(m, m.team({"w1", "w2", "w3"}), f, Semantics::Lax));
}

TEST(TeamModal, EmptyTeamSatisfiesEverything) {
  const auto m = t::sample_model();
  for (const char* text : {"p & !p", "<>p", "[p <= r] & <>q", "[<>p <= q]"})
    for (auto mode : {Semantics::Lax, Semantics::Strict})
      EXPECT_TRUE(eval_team_modal(m, m.empty_team(), parse_formula(text), mode)) << text;
}

TEST(TeamModal, Guards) {
  t::Rng rng(3);
  const auto big = t::random_model(rng, 20, {"p"});
  EXPECT_THROW(eval_team_modal(big, big.all_worlds(), parse_formula("p"), Semantics::Lax),
               SizeGuardError);
  const auto m = t::sample_model();
  OracleGuards g;
  g.max_team = 2;
  EXPECT_THROW(eval_team_modal(m, m.team({"w1", "w2", "w3"}), parse_formula("p"), Semantics::Lax, g),
               SizeGuardError);
  EXPECT_THROW(eval_team_modal(m, m.all_worlds(), parse_formula("[[p <= q] <= r]"), Semantics::Lax),
               NotEmincError);
}

TEST(Properties, FlatnessPropositional) {
  t::Rng rng(31);
  const auto vars = t::var_names(3);
  for (int i = 0; i < 300; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 10, {false, false, false, 1});
    const PropTeam x = t::random_prop_team(rng, vars, 6);
    bool pointwise = true;
    for (std::size_t k = 0; k < x.size(); ++k) pointwise = pointwise && eval_pl_tarski(x.at(k), f);
    EXPECT_EQ(eval_team_prop(x, f, Semantics::Lax), pointwise);
    EXPECT_EQ(eval_team_prop(x, f, Semantics::Strict), pointwise);
  }
}

TEST(Properties, FlatnessModal) {
  t::Rng rng(32);
  const auto vars = t::var_names(2);
  for (int i = 0; i < 300; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 10, {true, false, false, 1});
    const auto m = t::random_model(rng, 1 + i % 5, vars);
    const auto team = t::random_team(rng, m.size(), 4);
    bool pointwise = true;
    team.for_each([&](std::size_t w) { pointwise = pointwise && eval_ml_tarski(m, w, f); });
    EXPECT_EQ(eval_team_modal(m, team, f, Semantics::Lax), pointwise);
    EXPECT_EQ(eval_team_modal(m, team, f, Semantics::Strict), pointwise);
  }
}

TEST(Properties, StrictImpliesLax) {
  t::Rng rng(33);
  const auto vars = t::var_names(2);
  for (int i = 0; i < 300; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 10);
    const auto m = t::random_model(rng, 1 + i % 5, vars);
    const auto team = t::random_team(rng, m.size(), 4);
    if (eval_team_modal(m, team, f, Semantics::Strict)) {
      EXPECT_TRUE(eval_team_modal(m, team, f, Semantics::Lax)) << render_formula(f);
    }
  }
}
