#include <gtest/gtest.h>

#include "inclogic/model_check.hpp"
#include "inclogic/oracle.hpp"
#include "inclogic/validity.hpp"
#include "support/generators.hpp"

using namespace inclogic;
namespace t = inclogic::testing;

namespace {

// Brute force over every non-empty team on vars(f).
bool valid_by_teams(const Formula& f, Semantics mode) {
  const auto props = f.props();
  const std::vector<std::string> vars(props.begin(), props.end());
  const PropTeam all = all_assignments(vars);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask)
    if (!eval_team_prop(all.subteam(mask), f, mode)) return false;
  return true;
}

}  // namespace

TEST(SingletonTranslation, Examples) {
  EXPECT_EQ(render_formula(inclusion_to_pl_singleton(parse_formula("[p <= q]"))),
            "((p & q) | (!p & !q))");
  EXPECT_EQ(render_formula(inclusion_to_pl_singleton(parse_formula("[p <= p]"))),
            "((p & p) | (!p & !p))");
  EXPECT_EQ(render_formula(inclusion_to_pl_singleton(parse_formula("[p,q <= r,s]"))),
            "(((p & r) | (!p & !r)) & ((q & s) | (!q & !s)))");
  EXPECT_THROW(inclusion_to_pl_singleton(parse_formula("p & q")), FragmentError);
}

TEST(PlValidity, Examples) {
  EXPECT_TRUE(pl_validity(parse_formula("p | !p")).valid());
  const auto v = pl_validity(parse_formula("p"));
  ASSERT_TRUE(v.invalid());
  EXPECT_FALSE(v.prop_witness->at(0)["p"]);
  const auto w = pl_validity(parse_formula("(p & q) | (!p & !q)"));
  ASSERT_TRUE(w.invalid());
  EXPECT_TRUE(w.prop_witness->at(0)["p"]);
  EXPECT_FALSE(w.prop_witness->at(0)["q"]);
  EXPECT_THROW(pl_validity(parse_formula("p"), 0), SizeGuardError);
  EXPECT_THROW(pl_validity(parse_formula("[p <= q]")), FragmentError);
}

TEST(PlincStrictValidity, Examples) {
  EXPECT_TRUE(plinc_strict_validity(parse_formula("[p <= p]")).valid());
  EXPECT_TRUE(plinc_strict_validity(parse_formula("p | !p")).valid());
  const auto v = plinc_strict_validity(parse_formula("[p <= q] | [q <= p]"));
  ASSERT_TRUE(v.invalid());
  EXPECT_EQ(v.prop_witness->size(), 1U);
  EXPECT_TRUE(v.prop_witness->at(0)["p"]);
  EXPECT_FALSE(v.prop_witness->at(0)["q"]);
  EXPECT_FALSE(valid_by_teams(parse_formula("[p <= q] | [q <= p]"), Semantics::Strict));
}

TEST(PlincValidity, MatchesBruteForceBothModes) {
  t::Rng rng(61);
  const auto vars = t::var_names(3);
  for (int i = 0; i < 150; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 9, {false, true, false, 2});
    EXPECT_EQ(plinc_strict_validity(f).valid(), valid_by_teams(f, Semantics::Strict))
        << render_formula(f);
    EXPECT_EQ(plinc_lax_validity(f).valid(), valid_by_teams(f, Semantics::Lax)) << render_formula(f);
  }
}

TEST(PlincValidity, WitnessesRecheck) {
  t::Rng rng(62);
  const auto vars = t::var_names(3);
  for (int i = 0; i < 200; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 9, {false, true, false, 2});
    const auto v = plinc_strict_validity(f);
    if (v.invalid()) {
      EXPECT_FALSE(eval_team_prop(*v.prop_witness, f, Semantics::Strict));
    }
  }
}

TEST(EmincValToMinc, NoExtendedAtoms) {
  const Formula f = parse_formula("[p <= q] | <>r");
  EXPECT_EQ(eminc_val_to_minc(f), f);
}

TEST(EmincValToMinc, DiamondParameter) {
  const Formula g = eminc_val_to_minc(parse_formula("[<>p <= q]"));
  EXPECT_EQ(g.fragment(), Fragment::Minc);
  const std::string text = render_formula(g);
  EXPECT_NE(text.find("[f0 <= q]"), std::string::npos);
  EXPECT_NE(text.find("[]((!f0 | <>p) & (f0 | []!p))"), std::string::npos);
  EXPECT_NE(text.find("((!f0 | <>p) & (f0 | []!p))"), std::string::npos);
  EXPECT_THROW(eminc_val_to_minc(parse_formula("[[p <= q] <= r]")), NotEmincError);
}

TEST(EmincValToMinc, FreshNamesAvoidExistingOnes) {
  const Formula g = eminc_val_to_minc(parse_formula("[<>f0 <= f1]"));
  EXPECT_NE(render_formula(g).find("[f2 <= f1]"), std::string::npos);
}

TEST(BoundedSearch, Examples) {
  BoundedSearchOptions opt;
  EXPECT_TRUE(minc_bounded_counterexample(parse_formula("p | !p"), opt).unknown());
  const auto v = minc_bounded_counterexample(parse_formula("p"), opt);
  ASSERT_TRUE(v.invalid());
  EXPECT_EQ(v.modal_witness->model.size(), 1U);
  const auto w = minc_bounded_counterexample(parse_formula("[p <= q]"), opt);
  ASSERT_TRUE(w.invalid());
  EXPECT_EQ(w.modal_witness->model.size(), 1U);
  EXPECT_TRUE(w.modal_witness->model.valuation("p").contains(0));
  EXPECT_FALSE(w.modal_witness->model.valuation("q").contains(0));
}

TEST(BoundedSearch, WitnessesRecheckAndShardsAgree) {
  t::Rng rng(63);
  const auto vars = t::var_names(2);
  for (int i = 0; i < 40; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 8);
    for (auto mode : {Semantics::Lax, Semantics::Strict}) {
      BoundedSearchOptions one{2, 2, mode, 1};
      BoundedSearchOptions many{2, 2, mode, 3};
      const auto a = minc_bounded_counterexample(f, one);
      const auto b = minc_bounded_counterexample(f, many);
      ASSERT_EQ(a.kind, b.kind);
      if (a.invalid()) {
        EXPECT_FALSE(model_check(a.modal_witness->model, a.modal_witness->team, f, mode));
        EXPECT_EQ(a.modal_witness->team, b.modal_witness->team);
        EXPECT_EQ(a.modal_witness->model.edges(), b.modal_witness->model.edges());
      }
    }
  }
}

TEST(BoundedSearch, Guard) {
  BoundedSearchOptions opt;
  opt.max_worlds = 6;
  EXPECT_THROW(minc_bounded_counterexample(parse_formula("p"), opt), SizeGuardError);
}
