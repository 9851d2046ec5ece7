#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "inclogic/error.hpp"
#include "inclogic/model_check.hpp"
#include "inclogic/semantics.hpp"
#include "inclogic/structures.hpp"
#include "inclogic/syntax.hpp"

namespace inclogic {

struct ModalWitness {
  KripkeModel model;
  WorldTeam team;
};

struct ValidityVerdict {
  enum class Kind { Valid, Invalid, Unknown };

  Kind kind = Kind::Valid;
  std::optional<PropTeam> prop_witness;    // Invalid propositional verdicts
  std::optional<ModalWitness> modal_witness;  // Invalid modal verdicts
  std::size_t bound_worlds = 0;            // Unknown: search bound reached
  std::size_t bound_team = 0;

  bool valid() const noexcept { return kind == Kind::Valid; }
  bool invalid() const noexcept { return kind == Kind::Invalid; }
  bool unknown() const noexcept { return kind == Kind::Unknown; }
};

inline const char* to_string(ValidityVerdict::Kind k) {
  switch (k) {
    case ValidityVerdict::Kind::Valid: return "valid";
    case ValidityVerdict::Kind::Invalid: return "invalid";
    case ValidityVerdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Propositional

// On a singleton team, p1..pn ⊆ q1..qn says each p_i agrees with q_i.
inline Formula inclusion_to_pl_singleton(const Formula& atom) {
  if (atom.kind() != Kind::Inclusion || atom.fragment() != Fragment::PLinc)
    throw FragmentError("expected an inclusion atom over proposition symbols");
  const auto lhs = atom.lhs(atom.root());
  const auto rhs = atom.rhs(atom.root());
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const auto& p = atom[lhs[i]].prop;
    const auto& q = atom[rhs[i]].prop;
    parts.push_back(Formula::disj(Formula::conj(Formula::atom(p), Formula::atom(q)),
                                  Formula::conj(Formula::neg_atom(p), Formula::neg_atom(q))));
  }
  return Formula::conj_all(parts);
}

// Replaces every inclusion atom of a PLinc formula by its singleton translation.
inline Formula plinc_to_pl(const Formula& f) {
  if (f.fragment() != Fragment::PL && f.fragment() != Fragment::PLinc)
    throw FragmentError("expected a PL or PLinc formula");
  return rewrite(f, [&](OccId id) -> std::optional<Formula> {
    if (f[id].kind == Kind::Inclusion) return inclusion_to_pl_singleton(f.subformula(id));
    return std::nullopt;
  });
}

inline constexpr std::size_t kDefaultPlVarBound = 24;

namespace detail {

inline bool pl_eval_bits(const Formula& f, OccId id, const std::vector<std::size_t>& var_of,
                         std::uint64_t bits) {
  const Node& n = f[id];
  switch (n.kind) {
    case Kind::Atom: return (bits >> var_of[id]) & 1U;
    case Kind::NegAtom: return !((bits >> var_of[id]) & 1U);
    case Kind::And:
      return pl_eval_bits(f, n.children[0], var_of, bits) &&
             pl_eval_bits(f, n.children[1], var_of, bits);
    case Kind::Or:
      return pl_eval_bits(f, n.children[0], var_of, bits) ||
             pl_eval_bits(f, n.children[1], var_of, bits);
    default: break;
  }
  throw FragmentError("expected a PL formula");
}

}  // namespace detail

// Exhaustive PL validity. Assignments are tried in counting order over the
// sorted variables, so the witness is the least falsifying assignment.
inline ValidityVerdict pl_validity(const Formula& f, std::size_t max_vars = kDefaultPlVarBound) {
  if (f.fragment() != Fragment::PL) throw FragmentError("pl_validity needs a PL formula");
  const auto props = f.props();
  const std::vector<std::string> vars(props.begin(), props.end());
  if (vars.size() > max_vars || vars.size() >= 63)
    throw SizeGuardError("pl_validity: " + std::to_string(vars.size()) +
                         " variables exceed the bound of " + std::to_string(max_vars));
  std::vector<std::size_t> var_of(f.size(), 0);
  for (OccId id = 0; id < f.size(); ++id)
    if (f[id].kind == Kind::Atom || f[id].kind == Kind::NegAtom)
      var_of[id] = static_cast<std::size_t>(
          std::lower_bound(vars.begin(), vars.end(), f[id].prop) - vars.begin());
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (detail::pl_eval_bits(f, f.root(), var_of, bits)) continue;
    Bits row(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) row[i] = (bits >> i) & 1U;
    ValidityVerdict v;
    v.kind = ValidityVerdict::Kind::Invalid;
    v.prop_witness = PropTeam(vars, {row});
    return v;
  }
  return {};
}

// A PLinc formula is strictly valid iff every singleton team satisfies it,
// and on singletons inclusion atoms are classical; so validity reduces to PL
// validity of the translated formula. The witness is a falsifying singleton.
inline ValidityVerdict plinc_strict_validity(const Formula& f,
                                             std::size_t max_vars = kDefaultPlVarBound) {
  return pl_validity(plinc_to_pl(f), max_vars);
}

// Lax validity goes through the same singleton reduction: lax and strict
// agree on singletons, and lax satisfaction is closed under unions.
inline ValidityVerdict plinc_lax_validity(const Formula& f,
                                          std::size_t max_vars = kDefaultPlVarBound) {
  return plinc_strict_validity(f, max_vars);
}

// ---------------------------------------------------------------------------
// Modal

// (p <-> phi) written in negation normal form as (!p | phi) & (p | phi^⊥).
inline Formula nnf_biconditional(const std::string& p, const Formula& phi) {
  return Formula::conj(Formula::disj(Formula::neg_atom(p), phi),
                       Formula::disj(Formula::atom(p), nnf_negate(phi)));
}

// Validity-preserving translation of an EMinc formula into Minc:
//   subst := AND_{0<=i<=k} []^i AND_j (p_j <-> phi_j)
//   out   := subst^⊥ | (subst & phi+)
// where phi_j are the non-atomic inclusion parameters, k is the modal depth
// and phi+ replaces each phi_j by p_j. Formulas without extended atoms are
// returned unchanged.
inline Formula eminc_val_to_minc(const Formula& f, const std::string& base = "f") {
  if (f.has_nested_inclusion())
    throw NotEmincError("inclusion parameters must be ML formulas (nested inclusion atom found)");
  if (f.fragment() != Fragment::EMinc) return f;

  std::vector<bool> is_param(f.size(), false);
  for (OccId id = 0; id < f.size(); ++id)
    if (f[id].kind == Kind::Inclusion)
      for (auto c : f[id].children) is_param[c] = f[c].kind != Kind::Atom;

  std::map<std::string, std::size_t> index;  // rendered parameter -> j
  std::vector<Formula> params;
  for (OccId id = 0; id < f.size(); ++id) {
    if (!is_param[id]) continue;
    if (index.emplace(render_formula(f, id), params.size()).second)
      params.push_back(f.subformula(id));
  }
  const auto fresh = fresh_props(base, params.size(), f.props());

  std::vector<Formula> biconds;
  for (std::size_t j = 0; j < params.size(); ++j)
    biconds.push_back(nnf_biconditional(fresh[j], params[j]));
  const Formula inner = Formula::conj_all(biconds);
  std::vector<Formula> layers;
  for (std::size_t i = 0; i <= modal_depth(f); ++i) layers.push_back(Formula::boxes(i, inner));
  const Formula subst = Formula::conj_all(layers);

  const Formula plus = rewrite(f, [&](OccId id) -> std::optional<Formula> {
    if (is_param[id]) return Formula::atom(fresh[index.at(render_formula(f, id))]);
    return std::nullopt;
  });
  return Formula::disj(nnf_negate(subst), Formula::conj(subst, plus));
}

struct BoundedSearchOptions {
  std::size_t max_worlds = 3;
  std::size_t max_team = 3;
  Semantics mode = Semantics::Lax;
  std::size_t workers = 1;
  std::size_t max_code_bits = 30;  // edges plus valuation bits per model size
};

namespace detail {

// A candidate model over `n` worlds: bit (u*n+v) of `edges` is the edge u->v,
// bit (p*n+w) of `val` puts world w into the valuation of variable p.
struct ModelCode {
  std::size_t worlds;
  std::uint64_t edges;
  std::uint64_t val;
};

inline std::uint64_t permuted_code(const ModelCode& c, std::size_t vars,
                                   const std::vector<std::size_t>& perm) {
  const std::size_t n = c.worlds;
  std::uint64_t e = 0, v = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w)
      if ((c.edges >> (u * n + w)) & 1U) e |= std::uint64_t{1} << (perm[u] * n + perm[w]);
  for (std::size_t p = 0; p < vars; ++p)
    for (std::size_t w = 0; w < n; ++w)
      if ((c.val >> (p * n + w)) & 1U) v |= std::uint64_t{1} << (p * n + perm[w]);
  return (v << (n * n)) | e;
}

// True if no relabelling of the worlds yields a smaller code.
inline bool is_canonical(const ModelCode& c, std::size_t vars) {
  std::vector<std::size_t> perm(c.worlds);
  std::iota(perm.begin(), perm.end(), 0);
  const std::uint64_t own = (c.val << (c.worlds * c.worlds)) | c.edges;
  while (std::next_permutation(perm.begin(), perm.end()))
    if (permuted_code(c, vars, perm) < own) return false;
  return true;
}

inline KripkeModel decode_model(const ModelCode& c, const std::vector<std::string>& vars) {
  const std::size_t n = c.worlds;
  std::vector<std::string> names;
  for (std::size_t w = 0; w < n; ++w) names.push_back("w" + std::to_string(w));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w)
      if ((c.edges >> (u * n + w)) & 1U) edges.emplace_back(u, w);
  std::map<std::string, WorldSet> val;
  for (std::size_t p = 0; p < vars.size(); ++p) {
    WorldSet s(n);
    for (std::size_t w = 0; w < n; ++w)
      if ((c.val >> (p * n + w)) & 1U) s.insert(w);
    val.emplace(vars[p], std::move(s));
  }
  return KripkeModel(std::move(names), edges, std::move(val));
}

struct Counterexample {
  std::size_t worlds;
  std::uint64_t code;
  std::uint64_t team;
  friend bool operator<(const Counterexample& a, const Counterexample& b) {
    return std::tie(a.worlds, a.code, a.team) < std::tie(b.worlds, b.code, b.team);
  }
};

// Scans models with `n` worlds whose enumeration index is congruent to
// `shard` modulo `shards`; returns the first counterexample.
inline std::optional<Counterexample> scan_models(const Formula& f,
                                                 const std::vector<std::string>& vars,
                                                 std::size_t n, const BoundedSearchOptions& opt,
                                                 std::size_t shard, std::size_t shards) {
  const std::size_t edge_bits = n * n;
  const std::size_t val_bits = vars.size() * n;
  const std::uint64_t total = std::uint64_t{1} << (edge_bits + val_bits);
  const std::uint64_t edge_mask = (std::uint64_t{1} << edge_bits) - 1;
  const std::size_t team_limit = std::min(opt.max_team, n);
  for (std::uint64_t code = shard; code < total; code += shards) {
    ModelCode mc{n, code & edge_mask, code >> edge_bits};
    if (!is_canonical(mc, vars.size())) continue;
    KripkeModel m = decode_model(mc, vars);
    Formula g = f;
    if (f.fragment() == Fragment::EMinc) std::tie(m, g) = eminc_preprocess(m, f);
    for (std::uint64_t team = 1; team < (std::uint64_t{1} << n); ++team) {
      if (static_cast<std::size_t>(std::popcount(team)) > team_limit) continue;
      WorldSet t(n);
      for (std::size_t w = 0; w < n; ++w)
        if ((team >> w) & 1U) t.insert(w);
      const bool ok = opt.mode == Semantics::Lax ? lax_check(m, t, g) : strict_check(m, t, g);
      if (!ok) return Counterexample{n, code, team};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Searches every model with at most max_worlds worlds over vars(f), up to
// relabelling of worlds, and every non-empty team of at most max_team
// worlds. Finds a counterexample or reports Unknown at the bound.
inline ValidityVerdict minc_bounded_counterexample(const Formula& f,
                                                   const BoundedSearchOptions& opt = {}) {
  if (f.has_nested_inclusion())
    throw NotEmincError("inclusion parameters must be ML formulas (nested inclusion atom found)");
  const auto props = f.props();
  const std::vector<std::string> vars(props.begin(), props.end());
  for (std::size_t n = 1; n <= opt.max_worlds; ++n)
    if (n * n + vars.size() * n > opt.max_code_bits)
      throw SizeGuardError("bounded search: " + std::to_string(n) + " worlds over " +
                           std::to_string(vars.size()) + " variables exceeds the guard");

  const std::size_t shards = std::max<std::size_t>(1, opt.workers);
  for (std::size_t n = 1; n <= opt.max_worlds; ++n) {
    std::optional<detail::Counterexample> best;
    if (shards == 1) {
      best = detail::scan_models(f, vars, n, opt, 0, 1);
    } else {
      std::vector<std::future<std::optional<detail::Counterexample>>> jobs;
      for (std::size_t s = 0; s < shards; ++s)
        jobs.push_back(std::async(std::launch::async, detail::scan_models, std::cref(f),
                                  std::cref(vars), n, std::cref(opt), s, shards));
      for (auto& j : jobs) {
        auto r = j.get();
        if (r && (!best || *r < *best)) best = r;
      }
    }
    if (best) {
      const std::uint64_t edge_mask = (std::uint64_t{1} << (n * n)) - 1;
      detail::ModelCode mc{n, best->code & edge_mask, best->code >> (n * n)};
      KripkeModel m = detail::decode_model(mc, vars);
      WorldSet t(n);
      for (std::size_t w = 0; w < n; ++w)
        if ((best->team >> w) & 1U) t.insert(w);
      ValidityVerdict v;
      v.kind = ValidityVerdict::Kind::Invalid;
      v.modal_witness = ModalWitness{std::move(m), std::move(t)};
      return v;
    }
  }
  ValidityVerdict v;
  v.kind = ValidityVerdict::Kind::Unknown;
  v.bound_worlds = opt.max_worlds;
  v.bound_team = opt.max_team;
  return v;
}

}  // namespace inclogic
