#pragma once

// Model checking under strict semantics by backtracking over disjoint
// disjunction splits and diamond choice functions, memoised per
// (occurrence, team).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "inclogic/error.hpp"
#include "inclogic/lax_checker.hpp"
#include "inclogic/structures.hpp"
#include "inclogic/syntax.hpp"

namespace inclogic {

struct StrictGuards {
  std::size_t max_team = 16;             // team size at any disjunction
  std::size_t max_states = 10'000'000;   // explored search states
};

struct StrictStats {
  std::size_t states = 0;
  std::size_t memo_hits = 0;
};

class StrictChecker {
 public:
  StrictChecker(const KripkeModel& m, const Formula& f, StrictGuards guards = {})
      : m_(m), f_(f), guards_(guards), memo_(f.size()), lhs_(f.size()), rhs_(f.size()) {
    if (f.fragment() == Fragment::EMinc)
      throw FragmentError("StrictChecker needs a Minc formula; preprocess EMinc input first");
    for (OccId id = 0; id < f.size(); ++id) {
      const Node& n = f[id];
      if (n.kind == Kind::Atom || n.kind == Kind::NegAtom) {
        m.valuation(n.prop);
      } else if (n.kind == Kind::Inclusion) {
        lhs_[id] = detail::inclusion_keys(m, f, f.lhs(id));
        rhs_[id] = detail::inclusion_keys(m, f, f.rhs(id));
      }
    }
  }

  bool check(const WorldTeam& t) {
    m_.check_team(t);
    return sat(f_.root(), t);
  }

  const StrictStats& stats() const noexcept { return stats_; }

 private:
  bool sat(OccId id, const WorldSet& team) {
    auto& memo = memo_[id];
    if (auto it = memo.find(team); it != memo.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    if (++stats_.states > guards_.max_states)
      throw SizeGuardError("strict check: explored-state guard exceeded");
    const bool r = compute(id, team);
    memo.emplace(team, r);
    return r;
  }

  static bool cheap(Kind k) {
    return k == Kind::Atom || k == Kind::NegAtom || k == Kind::Inclusion;
  }

  bool compute(OccId id, const WorldSet& team) {
    const Node& n = f_[id];
    switch (n.kind) {
      case Kind::Atom: return team.is_subset_of(m_.valuation(n.prop));
      case Kind::NegAtom: return !team.intersects(m_.valuation(n.prop));
      case Kind::Inclusion: return inclusion(id, team);
      case Kind::And: {
        auto a = n.children[0], b = n.children[1];
        if (cheap(f_[b].kind) && !cheap(f_[a].kind)) std::swap(a, b);
        return sat(a, team) && sat(b, team);
      }
      case Kind::Or: return disjunction(n.children[0], n.children[1], team);
      case Kind::Box: return sat(n.children[0], r_image(m_, team));
      case Kind::Diamond: return diamond(n.children[0], team);
    }
    return false;
  }

  bool inclusion(OccId id, const WorldSet& team) const {
    std::unordered_set<std::uint64_t> available;
    team.for_each([&](std::size_t w) { available.insert(rhs_[id][w]); });
    for (auto w : team)
      if (!available.count(lhs_[id][w])) return false;
    return true;
  }

  // Disjoint splits, left part by increasing size.
  bool disjunction(OccId l, OccId r, const WorldSet& team) {
    const auto members = team.members();
    const std::size_t k = members.size();
    if (k > guards_.max_team || k >= 64)
      throw SizeGuardError("strict check: disjunction over a team of size " + std::to_string(k) +
                           " exceeds the guard");
    auto build = [&](std::uint64_t mask) {
      WorldSet y(m_.size());
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1U) y.insert(members[i]);
      return y;
    };
    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    for (std::size_t size = 0; size <= k; ++size) {
      if (size == 0) {
        if (sat(l, build(0)) && sat(r, team)) return true;
        continue;
      }
      // Gosper's hack: masks with `size` bits in increasing order.
      for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask <= all;) {
        const WorldSet y = build(mask);
        if (sat(l, y) && sat(r, team - y)) return true;
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t rr = mask + c;
        if (rr == 0 || rr > all) break;
        mask = (((rr ^ mask) >> 2) / c) | rr;
      }
    }
    return false;
  }

  // Choice functions in lexicographic order of successor choices; partial
  // images that coincide are explored once.
  bool diamond(OccId c, const WorldSet& team) {
    const auto members = team.members();
    for (auto w : members)
      if (m_.successors(w).empty()) return false;
    std::unordered_set<WorldSet, WorldSetHash> seen_images;
    std::vector<std::unordered_set<WorldSet, WorldSetHash>> seen_partial(members.size());
    WorldSet image(m_.size());
    return choose(c, members, 0, image, seen_partial, seen_images);
  }

  bool choose(OccId c, const std::vector<std::size_t>& members, std::size_t i, WorldSet& image,
              std::vector<std::unordered_set<WorldSet, WorldSetHash>>& seen_partial,
              std::unordered_set<WorldSet, WorldSetHash>& seen_images) {
    if (i == members.size()) {
      if (!seen_images.insert(image).second) return false;
      return sat(c, image);
    }
    if (!seen_partial[i].insert(image).second) return false;
    if (++stats_.states > guards_.max_states)
      throw SizeGuardError("strict check: explored-state guard exceeded");
    for (auto v : m_.successors(members[i])) {
      const bool had = image.contains(v);
      image.insert(v);
      if (choose(c, members, i + 1, image, seen_partial, seen_images)) return true;
      if (!had) image.erase(v);
    }
    return false;
  }

  const KripkeModel& m_;
  const Formula& f_;
  StrictGuards guards_;
  StrictStats stats_;
  std::vector<std::unordered_map<WorldSet, bool, WorldSetHash>> memo_;
  std::vector<std::vector<std::uint64_t>> lhs_, rhs_;
};

// K, T |=_s f. EMinc input is routed through eminc_preprocess.
inline bool strict_check(const KripkeModel& m, const WorldTeam& t, const Formula& f,
                         const StrictGuards& guards = {}, StrictStats* stats = nullptr) {
  m.check_team(t);
  if (f.fragment() == Fragment::EMinc) {
    auto [m2, f2] = eminc_preprocess(m, f);
    return strict_check(m2, t, f2, guards, stats);
  }
  StrictChecker checker(m, f, guards);
  const bool r = checker.check(t);
  if (stats) *stats = checker.stats();
  return r;
}

// X |=_s f for PL / PLinc formulas, through the one-layer embedding.
inline bool strict_check_prop(const PropTeam& x, const Formula& f, const StrictGuards& guards = {},
                              StrictStats* stats = nullptr) {
  if (f.fragment() != Fragment::PL && f.fragment() != Fragment::PLinc)
    throw FragmentError("strict_check_prop needs a PL or PLinc formula");
  const KripkeModel m = embed_prop_team(x);
  return strict_check(m, m.all_worlds(), f, guards, stats);
}

}  // namespace inclogic
