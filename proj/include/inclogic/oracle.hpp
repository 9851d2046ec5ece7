#pragma once

// Brute-force team semantics. Every clause is evaluated literally by
// enumerating splits, successor teams and choice functions; the checkers in
// lax_checker.hpp and strict_checker.hpp are tested against these functions.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "inclogic/error.hpp"
#include "inclogic/semantics.hpp"
#include "inclogic/structures.hpp"
#include "inclogic/syntax.hpp"
#include "inclogic/tarski.hpp"

namespace inclogic {

struct OracleGuards {
  std::size_t max_team = 12;     // team size at the root (propositional: |X|)
  std::size_t max_worlds = 12;   // |W|
  std::size_t max_images = 1U << 16;  // distinct strict diamond images per node
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

// Shared recursion over a universe of at most 64 elements. The propositional
// oracle uses it with no edges; modal clauses are rejected upstream.
class OracleCore {
 public:
  OracleCore(const Formula& f, Semantics mode, std::size_t n, std::vector<Mask> succ,
             std::function<Mask(const std::string&)> literal_truth,
             std::function<Mask(OccId)> param_truth, const OracleGuards& guards)
      : f_(f), mode_(mode), n_(n), succ_(std::move(succ)), guards_(guards), memo_(f.size()) {
    truth_.resize(f.size());
    lhs_keys_.resize(f.size());
    rhs_keys_.resize(f.size());
    for (OccId id = 0; id < f.size(); ++id) {
      const Node& node = f[id];
      if (node.kind == Kind::Atom || node.kind == Kind::NegAtom) {
        truth_[id] = literal_truth(node.prop);
      } else if (node.kind == Kind::Inclusion) {
        if (node.arity > 64) throw ArityError("inclusion arity above 64 is not supported");
        lhs_keys_[id].assign(n_, 0);
        rhs_keys_[id].assign(n_, 0);
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          Mask t = param_truth(node.children[i]);
          auto& keys = i < node.arity ? lhs_keys_[id] : rhs_keys_[id];
          const std::size_t pos = i < node.arity ? i : i - node.arity;
          for (std::size_t e = 0; e < n_; ++e)
            if (t & bit(e)) keys[e] |= Mask{1} << pos;
        }
      }
    }
  }

  bool sat(OccId id, Mask team) {
    auto& memo = memo_[id];
    if (auto it = memo.find(team); it != memo.end()) return it->second;
    bool r = compute(id, team);
    memo.emplace(team, r);
    return r;
  }

 private:
  Mask image(Mask team) const {
    Mask out = 0;
    for (Mask t = team; t; t &= t - 1) out |= succ_[static_cast<std::size_t>(std::countr_zero(t))];
    return out;
  }

  bool compute(OccId id, Mask team) {
    const Node& n = f_[id];
    switch (n.kind) {
      case Kind::Atom: return (team & ~truth_[id]) == 0;
      case Kind::NegAtom: return (team & truth_[id]) == 0;
      case Kind::And: return sat(n.children[0], team) && sat(n.children[1], team);
      case Kind::Or: return disjunction(n.children[0], n.children[1], team);
      case Kind::Box: return sat(n.children[0], image(team));
      case Kind::Diamond:
        return mode_ == Semantics::Lax ? lax_diamond(n.children[0], team)
                                       : strict_diamond(n.children[0], team);
      case Kind::Inclusion: return inclusion(id, team);
    }
    return false;
  }

  bool disjunction(OccId l, OccId r, Mask team) {
    // Y ranges over all subteams. Strict: Z is the complement. Lax: Z is any
    // subteam containing the complement.
    for (Mask y = team;; y = (y - 1) & team) {
      if (sat(l, y)) {
        const Mask rest = team & ~y;
        if (mode_ == Semantics::Strict) {
          if (sat(r, rest)) return true;
        } else {
          for (Mask s = y;; s = (s - 1) & y) {
            if (sat(r, rest | s)) return true;
            if (s == 0) break;
          }
        }
      }
      if (y == 0) break;
    }
    return false;
  }

  bool lax_diamond(OccId c, Mask team) {
    const Mask img = image(team);
    for (Mask s = img;; s = (s - 1) & img) {
      bool every_has_successor = true;
      for (Mask t = team; t; t &= t - 1)
        if ((succ_[static_cast<std::size_t>(std::countr_zero(t))] & s) == 0) {
          every_has_successor = false;
          break;
        }
      if (every_has_successor && sat(c, s)) return true;
      if (s == 0) break;
    }
    return false;
  }

  bool strict_diamond(OccId c, Mask team) {
    std::set<Mask> images{0};
    for (Mask t = team; t; t &= t - 1) {
      const Mask succ = succ_[static_cast<std::size_t>(std::countr_zero(t))];
      if (succ == 0) return false;
      std::set<Mask> next;
      for (Mask img : images)
        for (Mask s = succ; s; s &= s - 1) next.insert(img | (s & (~s + 1)));
      if (next.size() > guards_.max_images)
        throw SizeGuardError("strict diamond: too many successor images");
      images = std::move(next);
    }
    for (Mask img : images)
      if (sat(c, img)) return true;
    return false;
  }

  bool inclusion(OccId id, Mask team) const {
    std::set<Mask> available;
    for (Mask t = team; t; t &= t - 1)
      available.insert(rhs_keys_[id][static_cast<std::size_t>(std::countr_zero(t))]);
    for (Mask t = team; t; t &= t - 1)
      if (!available.count(lhs_keys_[id][static_cast<std::size_t>(std::countr_zero(t))]))
        return false;
    return true;
  }

  const Formula& f_;
  Semantics mode_;
  std::size_t n_;
  std::vector<Mask> succ_;
  OracleGuards guards_;
  std::vector<Mask> truth_;
  std::vector<std::vector<Mask>> lhs_keys_, rhs_keys_;
  std::vector<std::unordered_map<Mask, bool>> memo_;
};

inline void require_pl_parameters(const Formula& f) {
  for (OccId id = 0; id < f.size(); ++id)
    if (f[id].kind == Kind::Inclusion)
      for (auto c : f[id].children)
        if (!is_pl_subtree(f, c))
          throw FragmentError("propositional inclusion parameters must be PL formulas");
}

}  // namespace detail

// X |= lhs ⊆ rhs, read directly off the definition.
inline bool eval_inclusion_prop(const PropTeam& x, const std::vector<std::string>& lhs,
                                const std::vector<std::string>& rhs) {
  if (lhs.empty() || lhs.size() != rhs.size())
    throw ArityError("inclusion atom needs equal, positive arity");
  for (const auto& p : lhs) x.domain().index(p);
  for (const auto& q : rhs) x.domain().index(q);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto want = x.at(i).project(lhs);
    bool found = false;
    for (std::size_t j = 0; j < x.size() && !found; ++j) found = x.at(j).project(rhs) == want;
    if (!found) return false;
  }
  return true;
}

// X |= f for PL / PLinc formulas by exhaustive recursion.
inline bool eval_team_prop(const PropTeam& x, const Formula& f, Semantics mode,
                           const OracleGuards& guards = {}) {
  for (OccId id = 0; id < f.size(); ++id)
    if (f[id].kind == Kind::Diamond || f[id].kind == Kind::Box)
      throw FragmentError("propositional team semantics has no modalities");
  detail::require_pl_parameters(f);
  if (x.size() > guards.max_team || x.size() > 64)
    throw SizeGuardError("oracle: team of size " + std::to_string(x.size()) +
                         " exceeds the guard");
  const std::size_t n = x.size();
  auto literal_truth = [&](const std::string& p) {
    const std::size_t idx = x.domain().index(p);
    detail::Mask m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (x.rows()[i][idx]) m |= detail::bit(i);
    return m;
  };
  auto param_truth = [&](OccId id) {
    detail::Mask m = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (detail::pl_truth(x.at(i), f, id)) m |= detail::bit(i);
    return m;
  };
  detail::OracleCore core(f, mode, n, std::vector<detail::Mask>(n, 0), literal_truth, param_truth,
                          guards);
  const detail::Mask all = n == 64 ? ~detail::Mask{0} : (detail::bit(n) - 1);
  return core.sat(f.root(), all);
}

// K, T |= f for ML / Minc / EMinc formulas by exhaustive recursion. Extended
// inclusion parameters are evaluated pointwise with classical modal truth.
inline bool eval_team_modal(const KripkeModel& m, const WorldTeam& t, const Formula& f,
                            Semantics mode, const OracleGuards& guards = {}) {
  m.check_team(t);
  if (m.size() > guards.max_worlds || m.size() > 64)
    throw SizeGuardError("oracle: model with " + std::to_string(m.size()) +
                         " worlds exceeds the guard");
  if (t.size() > guards.max_team)
    throw SizeGuardError("oracle: team of size " + std::to_string(t.size()) +
                         " exceeds the guard");
  for (OccId id = 0; id < f.size(); ++id)
    if (f[id].kind == Kind::Inclusion)
      for (auto c : f[id].children)
        if (!detail::is_ml_subtree(f, c))
          throw NotEmincError("inclusion parameters must be ML formulas");
  auto to_mask = [](const WorldSet& s) {
    detail::Mask out = 0;
    s.for_each([&](std::size_t w) { out |= detail::bit(w); });
    return out;
  };
  std::vector<detail::Mask> succ;
  for (std::size_t w = 0; w < m.size(); ++w) succ.push_back(to_mask(m.successor_set(w)));
  auto literal_truth = [&](const std::string& p) { return to_mask(m.valuation(p)); };
  auto param_truth = [&](OccId id) { return to_mask(detail::ml_truth_set(m, f, id)); };
  detail::OracleCore core(f, mode, m.size(), std::move(succ), literal_truth, param_truth, guards);
  return core.sat(f.root(), to_mask(t));
}

}  // namespace inclogic
