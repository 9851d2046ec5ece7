#pragma once

#include <ostream>

#include "inclogic/lax_checker.hpp"
#include "inclogic/semantics.hpp"
#include "inclogic/strict_checker.hpp"

namespace inclogic {

// Picks the checker for `mode`; EMinc formulas are preprocessed first.
inline bool model_check(const KripkeModel& m, const WorldTeam& t, const Formula& f, Semantics mode,
                        const StrictGuards& guards = {}, StrictStats* stats = nullptr,
                        std::ostream* trace = nullptr) {
  if (f.fragment() == Fragment::EMinc) {
    auto [m2, f2] = eminc_preprocess(m, f);
    return model_check(m2, t, f2, mode, guards, stats, trace);
  }
  if (mode == Semantics::Lax) return lax_check(m, t, f, trace);
  return strict_check(m, t, f, guards, stats);
}

inline bool model_check_prop(const PropTeam& x, const Formula& f, Semantics mode,
                             const StrictGuards& guards = {}, StrictStats* stats = nullptr,
                             std::ostream* trace = nullptr) {
  if (f.fragment() != Fragment::PL && f.fragment() != Fragment::PLinc)
    throw FragmentError("propositional model checking needs a PL or PLinc formula");
  const KripkeModel m = embed_prop_team(x);
  return model_check(m, m.all_worlds(), f, mode, guards, stats, trace);
}

}  // namespace inclogic
