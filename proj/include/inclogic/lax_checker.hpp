#pragma once

// Polynomial-time model checking for modal inclusion logic under lax
// semantics: maximal satisfying subteams of atoms, the alternating
// bottom-up/top-down labelling fixpoint, and the substitution that turns
// extended inclusion atoms into plain ones.

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inclogic/error.hpp"
#include "inclogic/structures.hpp"
#include "inclogic/syntax.hpp"
#include "inclogic/tarski.hpp"

namespace inclogic {

// Inclusion-compatibility graph of a team for one atom p1..pk ⊆ q1..qk:
// (u, v) is an edge iff u(p_i) = v(q_i) for every i. Self-loops allowed.
// Edges are represented implicitly by value tuples, so the out-degree of u is
// the number of live vertices whose q-tuple equals u's p-tuple.
class WitnessGraph {
 public:
  WitnessGraph(const WorldSet& vertices, std::vector<std::uint64_t> lhs_key,
               std::vector<std::uint64_t> rhs_key)
      : alive_(vertices), lhs_(std::move(lhs_key)), rhs_(std::move(rhs_key)) {
    alive_.for_each([&](std::size_t v) {
      ++providers_[rhs_[v]];
      seekers_[lhs_[v]].push_back(v);
    });
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    return alive_.contains(u) && alive_.contains(v) && lhs_[u] == rhs_[v];
  }
  std::size_t out_degree(std::size_t u) const {
    auto it = providers_.find(lhs_[u]);
    return it == providers_.end() ? 0 : it->second;
  }
  const WorldSet& vertices() const noexcept { return alive_; }

  // Repeatedly delete vertices of out-degree 0; returns the survivors.
  WorldSet prune() {
    std::vector<std::size_t> work;
    alive_.for_each([&](std::size_t u) {
      if (out_degree(u) == 0) work.push_back(u);
    });
    while (!work.empty()) {
      const std::size_t u = work.back();
      work.pop_back();
      if (!alive_.contains(u)) continue;
      alive_.erase(u);
      if (--providers_[rhs_[u]] == 0)
        for (auto s : seekers_[rhs_[u]])
          if (alive_.contains(s)) work.push_back(s);
    }
    return alive_;
  }

 private:
  WorldSet alive_;
  std::vector<std::uint64_t> lhs_, rhs_;
  std::unordered_map<std::uint64_t, std::size_t> providers_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seekers_;
};

namespace detail {

inline bool is_lax_atom(Kind k) {
  return k == Kind::Atom || k == Kind::NegAtom || k == Kind::Inclusion;
}

// Value tuples of the proposition parameters on one side of an inclusion
// atom, packed as bits (parameter i -> bit i).
inline std::vector<std::uint64_t> inclusion_keys(const KripkeModel& m, const Formula& f,
                                                 const std::vector<OccId>& params) {
  if (params.size() > 64) throw ArityError("inclusion arity above 64 is not supported");
  std::vector<std::uint64_t> keys(m.size(), 0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const Node& p = f[params[i]];
    if (p.kind != Kind::Atom)
      throw FragmentError("inclusion parameter '" + render_formula(f, params[i]) +
                          "' is not a proposition symbol");
    m.valuation(p.prop).for_each([&](std::size_t w) { keys[w] |= std::uint64_t{1} << i; });
  }
  return keys;
}

// Maximal subteam of `team` satisfying the atom at occurrence `id`.
inline WorldSet maxsub_at(const KripkeModel& m, const Formula& f, OccId id, const WorldSet& team) {
  const Node& n = f[id];
  switch (n.kind) {
    case Kind::Atom: return team & m.valuation(n.prop);
    case Kind::NegAtom: return team - m.valuation(n.prop);
    case Kind::Inclusion: {
      WitnessGraph g(team, inclusion_keys(m, f, f.lhs(id)), inclusion_keys(m, f, f.rhs(id)));
      return g.prune();
    }
    default: break;
  }
  throw FragmentError("maxsub is only defined for literals and inclusion atoms");
}

}  // namespace detail

// Unique maximal T' ⊆ t with K, T' |= atom, for a literal or an inclusion
// atom over proposition symbols.
inline WorldTeam maxsub(const KripkeModel& m, const WorldTeam& t, const Formula& atom) {
  m.check_team(t);
  if (!detail::is_lax_atom(atom.kind()))
    throw FragmentError("maxsub is only defined for literals and inclusion atoms");
  return detail::maxsub_at(m, atom, atom.root(), t);
}

// Propositional variant, through the one-world-per-assignment embedding.
inline PropTeam maxsub_prop(const PropTeam& x, const Formula& atom) {
  const KripkeModel m = embed_prop_team(x);
  const WorldSet keep = maxsub(m, m.all_worlds(), atom);
  std::vector<Bits> rows;
  keep.for_each([&](std::size_t i) { rows.push_back(x.rows()[i]); });
  return PropTeam(x.domain_ptr(), std::move(rows));
}

// Fixpoint of the labelling sequence. Occurrences strictly inside inclusion
// atoms are parameters, not subformulas the algorithm labels; `labelled`
// marks the ones that are.
struct Labelling {
  std::vector<WorldSet> labels;
  std::vector<bool> labelled;
  std::size_t rounds = 0;
};

namespace detail {

inline void print_round(std::ostream& os, const KripkeModel& m, const Labelling& l,
                        std::size_t round) {
  os << "round " << round << ':';
  for (std::size_t id = 0; id < l.labels.size(); ++id) {
    if (!l.labelled[id]) continue;
    os << ' ' << id << "={";
    bool first = true;
    l.labels[id].for_each([&](std::size_t w) {
      if (!first) os << ',';
      os << m.world_name(w);
      first = false;
    });
    os << '}';
  }
  os << '\n';
}

}  // namespace detail

inline Labelling lax_labelling(const KripkeModel& m, const WorldTeam& t, const Formula& f,
                               std::ostream* trace = nullptr) {
  m.check_team(t);
  if (f.fragment() == Fragment::EMinc)
    throw FragmentError("lax_labelling needs a Minc formula; preprocess EMinc input first");

  Labelling l;
  l.labels.assign(f.size(), WorldSet::full(m.size()));
  l.labelled.assign(f.size(), true);
  for (OccId id = 0; id < f.size(); ++id)
    if (f[id].kind == Kind::Inclusion)
      for (OccId d = id + 1; d < id + f[id].extent; ++d) l.labelled[d] = false;
  for (OccId id = 0; id < f.size(); ++id)
    if (l.labelled[id] && (f[id].kind == Kind::Atom || f[id].kind == Kind::NegAtom))
      m.valuation(f[id].prop);  // unbound propositions fail up front

  // Children before parents, restricted to labelled occurrences.
  std::vector<OccId> bottom_up;
  for (const auto& occ : sub_occurrences(f))
    if (l.labelled[occ.id]) bottom_up.push_back(occ.id);

  auto& lab = l.labels;
  const std::size_t max_rounds = 2 * m.size() * f.size() + 4;
  for (;;) {
    const auto before = lab;

    // Odd round, bottom up. Each label is overwritten in place; a node reads
    // its own previous label and its children's new ones.
    ++l.rounds;
    for (OccId id : bottom_up) {
      const Node& n = f[id];
      switch (n.kind) {
        case Kind::Atom:
        case Kind::NegAtom:
        case Kind::Inclusion: lab[id] = detail::maxsub_at(m, f, id, lab[id]); break;
        case Kind::And: lab[id] = lab[n.children[0]] & lab[n.children[1]]; break;
        case Kind::Or: lab[id] = lab[n.children[0]] | lab[n.children[1]]; break;
        case Kind::Diamond: {
          WorldSet keep(m.size());
          lab[id].for_each([&](std::size_t w) {
            if (m.successor_set(w).intersects(lab[n.children[0]])) keep.insert(w);
          });
          lab[id] = std::move(keep);
          break;
        }
        case Kind::Box: {
          WorldSet keep(m.size());
          lab[id].for_each([&](std::size_t w) {
            if (m.successor_set(w).is_subset_of(lab[n.children[0]])) keep.insert(w);
          });
          lab[id] = std::move(keep);
          break;
        }
      }
    }
    if (trace) detail::print_round(*trace, m, l, l.rounds);

    // Even round, top down: preorder is ascending id order.
    ++l.rounds;
    lab[f.root()] &= t;
    for (OccId id = 0; id < f.size(); ++id) {
      if (!l.labelled[id]) continue;
      const Node& n = f[id];
      switch (n.kind) {
        case Kind::And:
          lab[n.children[0]] = lab[id];
          lab[n.children[1]] = lab[id];
          break;
        case Kind::Or:
          lab[n.children[0]] &= lab[id];
          lab[n.children[1]] &= lab[id];
          break;
        case Kind::Diamond:
        case Kind::Box: lab[n.children[0]] &= r_image(m, lab[id]); break;
        default: break;
      }
    }
    if (trace) detail::print_round(*trace, m, l, l.rounds);

    if (lab == before) break;
    if (l.rounds > max_rounds)
      throw Error("labelling did not stabilise within the round bound");
  }
  return l;
}

// K, T |= f under lax semantics, for Minc formulas.
inline bool lax_check(const KripkeModel& m, const WorldTeam& t, const Formula& f,
                      std::ostream* trace = nullptr) {
  return lax_labelling(m, t, f, trace).labels[f.root()] == t;
}

// X |= f under lax semantics, for PL / PLinc formulas.
inline bool lax_check_prop(const PropTeam& x, const Formula& f, std::ostream* trace = nullptr) {
  if (f.fragment() != Fragment::PL && f.fragment() != Fragment::PLinc)
    throw FragmentError("lax_check_prop needs a PL or PLinc formula");
  const KripkeModel m = embed_prop_team(x);
  return lax_check(m, m.all_worlds(), f, trace);
}

// Replaces every non-atomic inclusion parameter by a fresh proposition whose
// valuation is the parameter's classical truth set. Syntactically equal
// parameters share one fresh proposition.
inline std::pair<KripkeModel, Formula> eminc_preprocess(const KripkeModel& m, const Formula& f,
                                                        const std::string& base = "f") {
  if (f.has_nested_inclusion())
    throw NotEmincError("inclusion parameters must be ML formulas (nested inclusion atom found)");
  if (f.fragment() != Fragment::EMinc) return {m, f};

  std::set<std::string> avoid = f.props();
  for (const auto& [p, _] : m.valuations()) avoid.insert(p);

  std::map<std::string, std::string> fresh_for;  // rendered parameter -> fresh prop
  std::vector<std::string> order;
  for (OccId id = 0; id < f.size(); ++id) {
    if (f[id].kind != Kind::Inclusion) continue;
    for (auto c : f[id].children) {
      if (f[c].kind == Kind::Atom) continue;
      auto text = render_formula(f, c);
      if (!fresh_for.count(text)) {
        fresh_for.emplace(text, "");
        order.push_back(text);
      }
    }
  }
  const auto names = fresh_props(base, order.size(), avoid);
  for (std::size_t i = 0; i < order.size(); ++i) fresh_for[order[i]] = names[i];

  KripkeModel out = m;
  std::vector<bool> is_param(f.size(), false);
  for (OccId id = 0; id < f.size(); ++id)
    if (f[id].kind == Kind::Inclusion)
      for (auto c : f[id].children) is_param[c] = true;
  std::set<std::string> done;
  for (OccId id = 0; id < f.size(); ++id) {
    if (!is_param[id] || f[id].kind == Kind::Atom) continue;
    const auto& name = fresh_for.at(render_formula(f, id));
    if (done.insert(name).second) out = out.with_valuation(name, detail::ml_truth_set(m, f, id));
  }
  Formula g = rewrite(f, [&](OccId id) -> std::optional<Formula> {
    if (is_param[id] && f[id].kind != Kind::Atom)
      return Formula::atom(fresh_for.at(render_formula(f, id)));
    return std::nullopt;
  });
  return {std::move(out), std::move(g)};
}

}  // namespace inclogic
