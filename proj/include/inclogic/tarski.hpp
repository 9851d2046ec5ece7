#pragma once

#include <cstddef>

#include "inclogic/error.hpp"
#include "inclogic/structures.hpp"
#include "inclogic/syntax.hpp"

namespace inclogic {

namespace detail {

inline bool pl_truth(const Assignment& s, const Formula& f, OccId id) {
  const Node& n = f[id];
  switch (n.kind) {
    case Kind::Atom: return s[n.prop];
    case Kind::NegAtom: return !s[n.prop];
    case Kind::And: return pl_truth(s, f, n.children[0]) && pl_truth(s, f, n.children[1]);
    case Kind::Or: return pl_truth(s, f, n.children[0]) || pl_truth(s, f, n.children[1]);
    default: break;
  }
  throw FragmentError("classical evaluation needs a PL formula");
}

inline bool is_ml_subtree(const Formula& f, OccId id) {
  for (OccId d = id; d < id + f[id].extent; ++d)
    if (f[d].kind == Kind::Inclusion) return false;
  return true;
}

inline bool is_pl_subtree(const Formula& f, OccId id) {
  for (OccId d = id; d < id + f[id].extent; ++d) {
    auto k = f[d].kind;
    if (k == Kind::Inclusion || k == Kind::Diamond || k == Kind::Box) return false;
  }
  return true;
}

// Standard bottom-up truth-set computation for the ML subformula at `id`.
inline WorldSet ml_truth_set(const KripkeModel& m, const Formula& f, OccId id) {
  const Node& n = f[id];
  switch (n.kind) {
    case Kind::Atom: return m.valuation(n.prop);
    case Kind::NegAtom: return WorldSet::full(m.size()) - m.valuation(n.prop);
    case Kind::And: return ml_truth_set(m, f, n.children[0]) & ml_truth_set(m, f, n.children[1]);
    case Kind::Or: return ml_truth_set(m, f, n.children[0]) | ml_truth_set(m, f, n.children[1]);
    case Kind::Diamond: {
      auto sub = ml_truth_set(m, f, n.children[0]);
      WorldSet out(m.size());
      for (std::size_t w = 0; w < m.size(); ++w)
        if (m.successor_set(w).intersects(sub)) out.insert(w);
      return out;
    }
    case Kind::Box: {
      auto sub = ml_truth_set(m, f, n.children[0]);
      WorldSet out(m.size());
      for (std::size_t w = 0; w < m.size(); ++w)
        if (m.successor_set(w).is_subset_of(sub)) out.insert(w);
      return out;
    }
    case Kind::Inclusion: break;
  }
  throw FragmentError("classical modal evaluation needs an ML formula");
}

}  // namespace detail

// s |= f for a PL formula.
inline bool eval_pl_tarski(const Assignment& s, const Formula& f) {
  if (f.fragment() != Fragment::PL) throw FragmentError("eval_pl_tarski needs a PL formula");
  return detail::pl_truth(s, f, f.root());
}

// Worlds of `m` where the ML formula `f` is true.
inline WorldSet ml_truth_set(const KripkeModel& m, const Formula& f) {
  if (f.fragment() != Fragment::PL && f.fragment() != Fragment::ML)
    throw FragmentError("classical modal evaluation needs an ML formula");
  return detail::ml_truth_set(m, f, f.root());
}

// K, w |= f for an ML formula.
inline bool eval_ml_tarski(const KripkeModel& m, std::size_t w, const Formula& f) {
  if (w >= m.size()) throw ForeignWorldError("world index out of range");
  return ml_truth_set(m, f).contains(w);
}

inline bool eval_ml_tarski(const KripkeModel& m, const std::string& w, const Formula& f) {
  return eval_ml_tarski(m, m.world_index(w), f);
}

}  // namespace inclogic
