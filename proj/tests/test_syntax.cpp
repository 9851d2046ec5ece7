#include <gtest/gtest.h>

#include "inclogic/syntax.hpp"
#include "support/generators.hpp"

using namespace inclogic;
namespace t = inclogic::testing;

TEST(Parse, ConjunctionOfLiterals) {
  const Formula f = parse_formula("p & !q");
  EXPECT_EQ(f.kind(), Kind::And);
  EXPECT_EQ(f[1].kind, Kind::Atom);
  EXPECT_EQ(f[1].prop, "p");
  EXPECT_EQ(f[2].kind, Kind::NegAtom);
  EXPECT_EQ(f[2].prop, "q");
  EXPECT_EQ(f.fragment(), Fragment::PL);
}

TEST(Parse, DisjunctionOfGuardedInclusions) {
  const Formula f = parse_formula("(p & [p <= r]) | (q & [q <= r])");
  EXPECT_EQ(f.kind(), Kind::Or);
  EXPECT_EQ(f.fragment(), Fragment::PLinc);
  EXPECT_EQ(render_formula(f), "((p & [p <= r]) | (q & [q <= r]))");
}

TEST(Parse, NestedModalities) {
  const Formula f = parse_formula("[] ( <> p )");
  EXPECT_EQ(f.kind(), Kind::Box);
  EXPECT_EQ(f[1].kind, Kind::Diamond);
  EXPECT_EQ(f[2].kind, Kind::Atom);
  EXPECT_EQ(f.fragment(), Fragment::ML);
}

TEST(Parse, FragmentClassification) {
  EXPECT_EQ(parse_formula("<>[p <= q]").fragment(), Fragment::Minc);
  EXPECT_EQ(parse_formula("[<>p <= q]").fragment(), Fragment::EMinc);
  EXPECT_EQ(parse_formula("[p, q <= r, s]").fragment(), Fragment::PLinc);
  EXPECT_TRUE(parse_formula("[[p <= q] <= r]").has_nested_inclusion());
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(render_formula(parse_formula("p | q & r")), "(p | (q & r))");
  EXPECT_EQ(render_formula(parse_formula("p & q & r")), "((p & q) & r)");
  EXPECT_EQ(render_formula(parse_formula("<>p & q")), "(<>p & q)");
  EXPECT_EQ(render_formula(parse_formula("[ ] p")), "[]p");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_formula("!(p & q)"), ParseError);
  EXPECT_THROW(parse_formula("p &"), ParseError);
  EXPECT_THROW(parse_formula("[p, q <= r]"), ParseError);
  EXPECT_THROW(parse_formula("[p <= ]"), ParseError);
  EXPECT_THROW(parse_formula("p q"), ParseError);
  try {
    parse_formula("p & #");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4U);
  }
}

TEST(Render, Basics) {
  EXPECT_EQ(render_formula(Formula::atom("p")), "p");
  EXPECT_EQ(render_formula(Formula::conj(Formula::atom("p"), Formula::neg_atom("q"))), "(p & !q)");
  EXPECT_EQ(render_formula(Formula::inclusion(std::vector<std::string>{"p", "q"}, std::vector<std::string>{"r", "s"})), "[p,q <= r,s]");
}

TEST(Render, RoundTripOnRandomFormulas) {
  t::Rng rng(11);
  const auto vars = t::var_names(4);
  for (int i = 0; i < 500; ++i) {
    t::FormulaShape shape;
    shape.extended = i % 2 == 0;
    const Formula f = t::random_formula(rng, vars, 1 + i % 15, shape);
    EXPECT_EQ(parse_formula(render_formula(f)), f) << render_formula(f);
  }
}

TEST(Build, InclusionArity) {
  EXPECT_THROW(Formula::inclusion(std::vector<std::string>{}, std::vector<std::string>{}), ArityError);
  EXPECT_THROW(Formula::inclusion(std::vector<std::string>{"p"}, std::vector<std::string>{"q", "r"}),
               ArityError);
}

TEST(NnfNegate, Examples) {
  EXPECT_EQ(render_formula(nnf_negate(parse_formula("p"))), "!p");
  EXPECT_EQ(render_formula(nnf_negate(parse_formula("p & []q"))), "(!p | <>!q)");
  EXPECT_EQ(render_formula(nnf_negate(parse_formula("<>(p | q)"))), "[](!p & !q)");
  EXPECT_THROW(nnf_negate(parse_formula("p & [p <= q]")), NotMlError);
}

TEST(NnfNegate, Involution) {
  t::Rng rng(12);
  const auto vars = t::var_names(3);
  for (int i = 0; i < 300; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 12, {true, false, false, 1});
    EXPECT_EQ(nnf_negate(nnf_negate(f)), f);
  }
}

TEST(SubOccurrences, BottomUp) {
  const Formula a = parse_formula("p");
  ASSERT_EQ(sub_occurrences(a).size(), 1U);

  const Formula b = parse_formula("p & q");
  const auto occ = sub_occurrences(b);
  ASSERT_EQ(occ.size(), 3U);
  EXPECT_EQ(occ[0].node->prop, "p");
  EXPECT_EQ(occ[1].node->prop, "q");
  EXPECT_EQ(occ[2].id, b.root());

  const Formula c = parse_formula("p | (p | q)");
  const auto occ_c = sub_occurrences(c);
  ASSERT_EQ(occ_c.size(), 5U);
  std::vector<OccId> p_ids;
  for (const auto& o : occ_c)
    if (o.node->kind == Kind::Atom && o.node->prop == "p") p_ids.push_back(o.id);
  ASSERT_EQ(p_ids.size(), 2U);
  EXPECT_NE(p_ids[0], p_ids[1]);
}

TEST(SubOccurrences, ChildrenPrecedeParents) {
  t::Rng rng(13);
  const auto vars = t::var_names(3);
  for (int i = 0; i < 200; ++i) {
    const Formula f = t::random_formula(rng, vars, 1 + i % 14);
    const auto occ = sub_occurrences(f);
    EXPECT_EQ(occ.size(), f.size());
    std::vector<std::size_t> pos(f.size());
    for (std::size_t k = 0; k < occ.size(); ++k) pos[occ[k].id] = k;
    for (OccId id = 0; id < f.size(); ++id)
      for (auto c : f[id].children) EXPECT_LT(pos[c], pos[id]);
  }
}

TEST(ModalDepth, Examples) {
  EXPECT_EQ(modal_depth(parse_formula("p")), 0U);
  EXPECT_EQ(modal_depth(parse_formula("[]<>p")), 2U);
  EXPECT_EQ(modal_depth(parse_formula("[]p & q")), 1U);
}

TEST(FreshProps, Examples) {
  EXPECT_EQ(fresh_props("f", 2, {}), (std::vector<std::string>{"f0", "f1"}));
  EXPECT_EQ(fresh_props("f", 2, {"f0"}), (std::vector<std::string>{"f1", "f2"}));
  EXPECT_TRUE(fresh_props("x", 0, {}).empty());
}

TEST(Rewrite, ReplacesSubtrees) {
  const Formula f = parse_formula("(p & q) | <>p");
  const Formula g = rewrite(f, [&](OccId id) -> std::optional<Formula> {
    if (f[id].kind == Kind::Atom && f[id].prop == "p") return Formula::neg_atom("r");
    return std::nullopt;
  });
  EXPECT_EQ(render_formula(g), "((!r & q) | <>!r)");
}
