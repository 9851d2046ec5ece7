#pragma once

// Executable hardness constructions with brute-force oracles for their
// source problems: monotone circuit value, set splitting, and non-validity
// of dependency quantified Boolean formulas.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "inclogic/error.hpp"
#include "inclogic/structures.hpp"
#include "inclogic/syntax.hpp"
#include "inclogic/tarski.hpp"
#include "inclogic/validity.hpp"

namespace inclogic {

// ---------------------------------------------------------------------------
// Monotone circuits

struct Gate {
  enum class Kind { And, Or, Input };
  Kind kind = Kind::Input;
  std::size_t lhs = 0, rhs = 0;  // operand gates for And / Or
  std::size_t input = 0;         // 1-based input variable for Input
};

// Gate 0 is the output. Inputs are numbered 1..n, one gate each.
class MonotoneCircuit {
 public:
  explicit MonotoneCircuit(std::vector<Gate> gates) : gates_(std::move(gates)) { validate(); }

  std::size_t size() const noexcept { return gates_.size(); }
  const Gate& gate(std::size_t i) const { return gates_.at(i); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t input_count() const noexcept { return input_gate_.size(); }
  // Gate carrying input variable t (1-based).
  std::size_t input_gate(std::size_t t) const { return input_gate_.at(t - 1); }
  // Gates in an order where operands precede their users.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

 private:
  void validate() {
    const std::size_t n = gates_.size();
    if (n == 0) throw CircuitInvariantError("circuit has no gates");
    std::vector<std::size_t> out_degree(n, 0);
    std::map<std::size_t, std::size_t> inputs;
    for (std::size_t i = 0; i < n; ++i) {
      const Gate& g = gates_[i];
      if (g.kind == Gate::Kind::Input) {
        if (g.input == 0) throw CircuitInvariantError("input variables are numbered from 1");
        if (!inputs.emplace(g.input, i).second)
          throw CircuitInvariantError("input x" + std::to_string(g.input) +
                                      " is carried by more than one gate");
        continue;
      }
      if (g.lhs >= n || g.rhs >= n)
        throw CircuitInvariantError("gate g" + std::to_string(i) + " reads an unknown gate");
      if (g.lhs == g.rhs)
        throw CircuitInvariantError("gate g" + std::to_string(i) + " needs two distinct operands");
      ++out_degree[g.lhs];
      ++out_degree[g.rhs];
    }
    for (std::size_t t = 1; t <= inputs.size(); ++t) {
      auto it = inputs.find(t);
      if (it == inputs.end())
        throw CircuitInvariantError("input variables must be x1..x" +
                                    std::to_string(inputs.size()));
      input_gate_.push_back(it->second);
    }
    if (out_degree[0] != 0) throw CircuitInvariantError("output gate g0 feeds another gate");
    for (std::size_t i = 1; i < n; ++i)
      if (out_degree[i] == 0)
        throw CircuitInvariantError("gate g" + std::to_string(i) + " is unused");

    // Kahn's algorithm; leftovers mean a cycle.
    std::vector<std::size_t> pending(n, 0);
    std::vector<std::vector<std::size_t>> users(n);
    for (std::size_t i = 0; i < n; ++i)
      if (gates_[i].kind != Gate::Kind::Input) {
        pending[i] = 2;
        users[gates_[i].lhs].push_back(i);
        users[gates_[i].rhs].push_back(i);
      }
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
      if (pending[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
      const std::size_t g = ready.back();
      ready.pop_back();
      topo_.push_back(g);
      for (auto u : users[g])
        if (--pending[u] == 0) ready.push_back(u);
    }
    if (topo_.size() != n) throw CircuitInvariantError("circuit contains a cycle");
  }

  std::vector<Gate> gates_;
  std::vector<std::size_t> input_gate_;
  std::vector<std::size_t> topo_;
};

// Value of every gate under the input bits (bit t-1 feeds x_t).
inline std::vector<bool> evaluate_gates(const MonotoneCircuit& c, const std::vector<bool>& bits) {
  if (bits.size() != c.input_count())
    throw CircuitInvariantError("expected " + std::to_string(c.input_count()) +
                                " input bits, got " + std::to_string(bits.size()));
  std::vector<bool> value(c.size(), false);
  for (auto i : c.topological_order()) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case Gate::Kind::Input: value[i] = bits[g.input - 1]; break;
      case Gate::Kind::And: value[i] = value[g.lhs] && value[g.rhs]; break;
      case Gate::Kind::Or: value[i] = value[g.lhs] || value[g.rhs]; break;
    }
  }
  return value;
}

inline bool evaluate_circuit(const MonotoneCircuit& c, const std::vector<bool>& bits) {
  return evaluate_gates(c, bits)[0];
}

// Proposition for an Or gate k over operands i < j.
inline std::string or_prop(std::size_t k, std::size_t i, std::size_t j) {
  return "p" + std::to_string(k) + "_or_" + std::to_string(i) + "_" + std::to_string(j);
}

// Team and formula whose lax (and strict) satisfaction equals the circuit
// value. Gate i owns proposition p<i>; p_top is constant 1 and p_bot marks
// the single auxiliary assignment.
inline std::pair<PropTeam, Formula> mcvp_encode(const MonotoneCircuit& c,
                                                const std::vector<bool>& bits) {
  if (bits.size() != c.input_count())
    throw CircuitInvariantError("expected " + std::to_string(c.input_count()) +
                                " input bits, got " + std::to_string(bits.size()));
  const std::size_t n = c.size();
  auto gate_prop = [](std::size_t i) { return "p" + std::to_string(i); };

  std::vector<std::string> domain;
  for (std::size_t i = 0; i < n; ++i) domain.push_back(gate_prop(i));
  domain.push_back("p_top");
  domain.push_back("p_bot");
  struct OrGate {
    std::size_t k, i, j;
  };
  std::vector<OrGate> ors;
  for (std::size_t k = 0; k < n; ++k) {
    const Gate& g = c.gate(k);
    if (g.kind != Gate::Kind::Or) continue;
    ors.push_back({k, std::min(g.lhs, g.rhs), std::max(g.lhs, g.rhs)});
    domain.push_back(or_prop(k, ors.back().i, ors.back().j));
  }
  const PropDomain index(domain);

  std::vector<Bits> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Gate& g = c.gate(i);
    if (g.kind == Gate::Kind::Input && !bits[g.input - 1]) continue;
    Bits row(domain.size(), false);
    row[index.index(gate_prop(i))] = true;
    row[index.index("p_top")] = true;
    for (const auto& o : ors)
      if (o.i == i || o.j == i) row[index.index(or_prop(o.k, o.i, o.j))] = true;
    rows.push_back(std::move(row));
  }
  Bits bottom(domain.size(), false);
  bottom[index.index("p_top")] = true;
  bottom[index.index("p_bot")] = true;
  rows.push_back(std::move(bottom));

  std::vector<Formula> parts{Formula::inclusion({"p_top"}, {gate_prop(0)})};
  for (std::size_t i = 0; i < n; ++i) {
    const Gate& g = c.gate(i);
    if (g.kind != Gate::Kind::And) continue;
    for (auto j : {std::min(g.lhs, g.rhs), std::max(g.lhs, g.rhs)})
      parts.push_back(Formula::inclusion({gate_prop(i)}, {gate_prop(j)}));
  }
  for (const auto& o : ors)
    parts.push_back(Formula::inclusion({gate_prop(o.k)}, {or_prop(o.k, o.i, o.j)}));
  Formula f = Formula::disj(Formula::neg_atom("p_bot"), Formula::conj_all(parts));
  return {PropTeam(std::move(domain), std::move(rows)), std::move(f)};
}

// Lines "g<i> = AND g<j> g<k>", "g<i> = OR g<j> g<k>", "g<i> = INPUT x<t>".
// Blank lines and lines starting with '#' are skipped. Every operand must be
// defined on an earlier line.
inline MonotoneCircuit parse_circuit(std::istream& in) {
  std::map<std::size_t, Gate> gates;
  std::string line;
  std::size_t lineno = 0;
  auto number = [&](const std::string& tok, char prefix) {
    if (tok.size() < 2 || tok[0] != prefix ||
        !std::all_of(tok.begin() + 1, tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw FormatError("line " + std::to_string(lineno) + ": expected " + prefix +
                        "<number>, got '" + tok + "'");
    return static_cast<std::size_t>(std::stoul(tok.substr(1)));
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string name, eq, op;
    if (!(ls >> name) || name[0] == '#') continue;
    if (!(ls >> eq >> op) || eq != "=")
      throw FormatError("line " + std::to_string(lineno) + ": expected 'g<i> = OP ...'");
    const std::size_t id = number(name, 'g');
    if (gates.count(id))
      throw FormatError("line " + std::to_string(lineno) + ": gate " + name + " defined twice");
    Gate g;
    std::string a, b, extra;
    if (op == "INPUT") {
      if (!(ls >> a) || (ls >> extra))
        throw FormatError("line " + std::to_string(lineno) + ": INPUT takes one variable");
      g.kind = Gate::Kind::Input;
      g.input = number(a, 'x');
    } else if (op == "AND" || op == "OR") {
      if (!(ls >> a >> b) || (ls >> extra))
        throw FormatError("line " + std::to_string(lineno) + ": " + op + " takes two gates");
      g.kind = op == "AND" ? Gate::Kind::And : Gate::Kind::Or;
      g.lhs = number(a, 'g');
      g.rhs = number(b, 'g');
      for (auto operand : {g.lhs, g.rhs})
        if (!gates.count(operand))
          throw CircuitInvariantError("line " + std::to_string(lineno) + ": operand g" +
                                      std::to_string(operand) + " is not defined earlier");
    } else {
      throw FormatError("line " + std::to_string(lineno) + ": unknown gate kind '" + op + "'");
    }
    gates.emplace(id, g);
  }
  std::vector<Gate> out;
  for (const auto& [id, g] : gates) {
    if (id != out.size())
      throw CircuitInvariantError("gates must be numbered g0..g" + std::to_string(gates.size() - 1));
    out.push_back(g);
  }
  return MonotoneCircuit(std::move(out));
}

inline std::vector<bool> parse_bits(const std::string& text) {
  std::vector<bool> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') bits.push_back(ch == '1');
    else throw FormatError("input bits must be a 0/1 string");
  }
  return bits;
}

// ---------------------------------------------------------------------------
// Set splitting

struct SetSplitInstance {
  std::vector<std::string> universe;            // a_1..a_k
  std::vector<std::vector<std::size_t>> family;  // each B_j as sorted indices into universe

  void validate() const {
    if (universe.empty()) throw InstanceError("set splitting: empty universe");
    if (std::set<std::string>(universe.begin(), universe.end()).size() != universe.size())
      throw InstanceError("set splitting: duplicate element names");
    std::vector<bool> covered(universe.size(), false);
    for (const auto& b : family) {
      if (b.empty()) throw InstanceError("set splitting: empty set in family");
      for (auto a : b) {
        if (a >= universe.size()) throw InstanceError("set splitting: element out of range");
        covered[a] = true;
      }
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end())
      throw InstanceError("set splitting: the family must cover the universe");
  }
};

inline constexpr std::size_t kSplitOracleBound = 20;

// Is there a bipartition S1, S2 of the universe splitting every set?
inline bool split_oracle(const SetSplitInstance& inst) {
  inst.validate();
  const std::size_t k = inst.universe.size();
  if (k > kSplitOracleBound)
    throw SizeGuardError("split_oracle: universe of " + std::to_string(k) + " elements exceeds " +
                         std::to_string(kSplitOracleBound));
  for (std::uint32_t side = 0; side < (std::uint32_t{1} << k); ++side) {
    bool ok = true;
    for (const auto& b : inst.family) {
      bool in1 = false, in2 = false;
      for (auto a : b) ((side >> a) & 1U ? in2 : in1) = true;
      if (!(in1 && in2)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Team and formula whose strict satisfaction equals split_oracle. Element i
// owns p<i>, set j owns q<j>; p_c and p_d mark the two auxiliary assignments.
inline std::pair<PropTeam, Formula> setsplit_encode(const SetSplitInstance& inst) {
  inst.validate();
  const std::size_t k = inst.universe.size();
  const std::size_t n = inst.family.size();
  std::vector<std::string> domain;
  for (std::size_t i = 1; i <= k; ++i) domain.push_back("p" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) domain.push_back("q" + std::to_string(j));
  const std::size_t top = domain.size();
  domain.insert(domain.end(), {"p_top", "p_c", "p_d"});

  std::vector<Bits> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Bits row(domain.size(), false);
    row[i] = true;
    row[top] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (std::binary_search(inst.family[j].begin(), inst.family[j].end(), i)) row[k + j] = true;
    rows.push_back(std::move(row));
  }
  for (std::size_t marker : {top + 1, top + 2}) {
    Bits row(domain.size(), false);
    row[top] = true;
    row[marker] = true;
    rows.push_back(std::move(row));
  }

  auto side = [&](const std::string& excluded) {
    std::vector<Formula> parts{Formula::neg_atom(excluded)};
    for (std::size_t j = 1; j <= n; ++j)
      parts.push_back(Formula::inclusion({"p_top"}, {"q" + std::to_string(j)}));
    return Formula::conj_all(parts);
  };
  Formula f = Formula::disj(side("p_c"), side("p_d"));
  return {PropTeam(std::move(domain), std::move(rows)), std::move(f)};
}

// One set per line, comma-separated element names. Elements are indexed in
// order of first appearance.
inline SetSplitInstance parse_set_family(std::istream& in) {
  SetSplitInstance inst;
  std::map<std::string, std::size_t> index;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#')
      continue;
    std::set<std::size_t> set;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      const auto b = tok.find_first_not_of(" \t\r");
      if (b == std::string::npos) throw FormatError("set family: empty element name");
      tok = tok.substr(b, tok.find_last_not_of(" \t\r") - b + 1);
      auto [it, added] = index.emplace(tok, inst.universe.size());
      if (added) inst.universe.push_back(tok);
      set.insert(it->second);
    }
    inst.family.emplace_back(set.begin(), set.end());
  }
  inst.validate();
  return inst;
}

// ---------------------------------------------------------------------------
// Dependency quantified Boolean formulas

struct DqbfInstance {
  std::vector<std::string> universals;                // p_1..p_n
  std::vector<std::string> existentials;              // q_1..q_k
  std::vector<std::vector<std::size_t>> constraints;  // C_j as sorted indices into universals
  Formula matrix;                                     // PL over universals and existentials

  std::size_t max_constraint() const {
    std::size_t l = 0;
    for (const auto& c : constraints) l = std::max(l, c.size());
    return l;
  }

  void validate() const {
    if (universals.empty()) throw InstanceError("dqbf: at least one universal variable is required");
    if (existentials.empty())
      throw InstanceError("dqbf: at least one existential variable is required");
    if (constraints.size() != existentials.size())
      throw InstanceError("dqbf: one constraint set per existential variable");
    std::set<std::string> names;
    for (const auto& v : universals)
      if (!names.insert(v).second) throw InstanceError("dqbf: duplicate variable '" + v + "'");
    for (const auto& v : existentials)
      if (!names.insert(v).second) throw InstanceError("dqbf: duplicate variable '" + v + "'");
    for (const auto& c : constraints)
      for (auto i : c)
        if (i >= universals.size()) throw InstanceError("dqbf: constraint names an unknown variable");
    if (matrix.fragment() != Fragment::PL) throw InstanceError("dqbf: the matrix must be a PL formula");
    for (const auto& p : matrix.props())
      if (!names.count(p)) throw InstanceError("dqbf: matrix uses undeclared variable '" + p + "'");
  }
};

inline constexpr std::size_t kDqbfFunctionBits = 16;

enum class DqbfAnswer { Valid, Nonvalid };

inline const char* to_string(DqbfAnswer a) { return a == DqbfAnswer::Valid ? "valid" : "nonvalid"; }

namespace detail {

inline std::size_t constraint_key(const std::vector<std::size_t>& c, std::uint32_t universal_bits) {
  std::size_t key = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if ((universal_bits >> c[i]) & 1U) key |= std::size_t{1} << i;
  return key;
}

}  // namespace detail

// Exhaustive search over Skolem function tables f_j : {0,1}^|C_j| -> {0,1}.
inline DqbfAnswer dqbf_oracle(const DqbfInstance& inst) {
  inst.validate();
  std::size_t table_bits = 0;
  std::vector<std::size_t> offset;
  for (const auto& c : inst.constraints) {
    offset.push_back(table_bits);
    table_bits += std::size_t{1} << c.size();
  }
  if (table_bits > kDqbfFunctionBits)
    throw SizeGuardError("dqbf_oracle: function tables need " + std::to_string(table_bits) +
                         " bits, above the guard of " + std::to_string(kDqbfFunctionBits));
  const std::size_t n = inst.universals.size();
  std::vector<std::string> vars = inst.universals;
  vars.insert(vars.end(), inst.existentials.begin(), inst.existentials.end());
  const auto domain = std::make_shared<const PropDomain>(vars);
  for (std::uint64_t tables = 0; tables < (std::uint64_t{1} << table_bits); ++tables) {
    bool all = true;
    for (std::uint32_t u = 0; u < (std::uint32_t{1} << n) && all; ++u) {
      Bits row(vars.size());
      for (std::size_t i = 0; i < n; ++i) row[i] = (u >> i) & 1U;
      for (std::size_t j = 0; j < inst.existentials.size(); ++j)
        row[n + j] = (tables >> (offset[j] + detail::constraint_key(inst.constraints[j], u))) & 1U;
      all = eval_pl_tarski(Assignment(domain, std::move(row)), inst.matrix);
    }
    if (all) return DqbfAnswer::Valid;
  }
  return DqbfAnswer::Nonvalid;
}

namespace detail {

inline Formula branch(const std::string& p) {
  return Formula::conj(Formula::diamond(Formula::atom(p)), Formula::diamond(Formula::neg_atom(p)));
}

inline Formula store(const std::string& p) {
  return Formula::conj(Formula::disj(Formula::neg_atom(p), Formula::box(Formula::atom(p))),
                       Formula::disj(Formula::atom(p), Formula::box(Formula::neg_atom(p))));
}

// Forces a complete binary assignment tree over vars of depth |vars|.
inline std::optional<Formula> tree(const std::vector<std::string>& vars) {
  if (vars.empty()) return std::nullopt;
  std::vector<Formula> parts{branch(vars[0])};
  for (std::size_t i = 1; i < vars.size(); ++i) {
    std::vector<Formula> level{branch(vars[i])};
    for (std::size_t j = 0; j < i; ++j) level.push_back(store(vars[j]));
    parts.push_back(Formula::boxes(i, Formula::conj_all(level)));
  }
  return Formula::conj_all(parts);
}

inline std::vector<std::string> t_vars(std::size_t l) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= l; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

inline void check_reserved(const DqbfInstance& inst) {
  std::set<std::string> reserved{"p_top", "p_bot", "p_theta"};
  for (const auto& t : t_vars(inst.max_constraint())) reserved.insert(t);
  for (const auto* side : {&inst.universals, &inst.existentials})
    for (const auto& v : *side)
      if (reserved.count(v))
        throw PropCollisionError("dqbf: variable '" + v + "' collides with a reserved proposition");
}

}  // namespace detail

// Structural part: the p-tree, a t-tree below every p-leaf, value
// propagation down to the t-leaves, and the constants and p_theta there.
inline Formula dqbf_structure(const DqbfInstance& inst) {
  inst.validate();
  detail::check_reserved(inst);
  const std::size_t n = inst.universals.size();
  const std::size_t l = inst.max_constraint();
  const auto ts = detail::t_vars(l);

  std::vector<Formula> parts{*detail::tree(inst.universals)};
  if (auto t_tree = detail::tree(ts)) parts.push_back(Formula::boxes(n, *t_tree));
  parts.push_back(Formula::boxes(
      n + l, Formula::conj_all({nnf_biconditional("p_theta", inst.matrix), Formula::atom("p_top"),
                                Formula::neg_atom("p_bot")})));
  if (l > 0) {
    std::vector<Formula> stores;
    for (const auto* side : {&inst.universals, &inst.existentials})
      for (const auto& v : *side) stores.push_back(detail::store(v));
    const Formula keep = Formula::conj_all(stores);
    std::vector<Formula> layers;
    for (std::size_t i = 0; i < l; ++i) layers.push_back(Formula::boxes(i, keep));
    parts.push_back(Formula::boxes(n, Formula::conj_all(layers)));
  }
  return Formula::conj_all(parts);
}

// Disjunction over existentials j of the two inclusion atoms tying q_j to
// the t-encoded values of its constraint variables.
inline Formula dqbf_constraints(const DqbfInstance& inst) {
  inst.validate();
  detail::check_reserved(inst);
  const auto ts = detail::t_vars(inst.max_constraint());
  std::vector<Formula> alternatives;
  for (std::size_t j = 0; j < inst.existentials.size(); ++j) {
    const auto& c = inst.constraints[j];
    std::vector<std::string> rhs;
    for (auto i : c) rhs.push_back(inst.universals[i]);
    rhs.push_back(inst.existentials[j]);
    std::vector<std::string> lhs(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(c.size()));
    auto with = [&](const std::string& constant) {
      auto l = lhs;
      l.push_back(constant);
      return Formula::inclusion(l, rhs);
    };
    alternatives.push_back(Formula::conj(with("p_bot"), with("p_top")));
  }
  return Formula::disj_all(alternatives);
}

// []^n <>^l (constraints | [p_bot <= p_theta])
inline Formula dqbf_body(const DqbfInstance& inst) {
  const Formula inner =
      Formula::disj(dqbf_constraints(inst), Formula::inclusion({"p_bot"}, {"p_theta"}));
  return Formula::boxes(inst.universals.size(), Formula::diamonds(inst.max_constraint(), inner));
}

// structure^⊥ | (structure & body): valid iff the instance is not valid.
inline Formula dqbf_encode_nonvalidity(const DqbfInstance& inst) {
  const Formula structure = dqbf_structure(inst);
  return Formula::disj(nnf_negate(structure), Formula::conj(structure, dqbf_body(inst)));
}

// Existential values at a p-leaf, given the universal assignment there
// (bit i of the argument is p_{i+1}).
using QLabel = std::function<Bits(std::uint32_t universal_bits)>;

inline constexpr std::size_t kCanonicalWorldBound = 1U << 14;

// The minimal tree model forced by the structural part: a complete binary
// p-tree of depth n, a complete binary t-tree of depth l under every p-leaf,
// values stored along every path. The team is the root.
inline std::pair<KripkeModel, WorldTeam> canonical_models(const DqbfInstance& inst,
                                                         const QLabel& q_label) {
  inst.validate();
  detail::check_reserved(inst);
  const std::size_t n = inst.universals.size();
  const std::size_t l = inst.max_constraint();
  const std::size_t k = inst.existentials.size();
  if (n + l >= 14 || (std::size_t{2} << (n + l)) > kCanonicalWorldBound)
    throw SizeGuardError("canonical_models: tree of depth " + std::to_string(n + l) +
                         " exceeds the world guard");

  struct Node {
    std::size_t depth;
    std::uint32_t ubits, tbits;  // path bits, first branch in bit 0
  };
  std::vector<Node> nodes{{0, 0, 0}};
  std::vector<std::string> names{"root"};
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node cur = nodes[i];
    if (cur.depth == n + l) continue;
    for (std::uint32_t b = 0; b < 2; ++b) {
      Node child = cur;
      ++child.depth;
      if (cur.depth < n) child.ubits |= b << cur.depth;
      else child.tbits |= b << (cur.depth - n);
      edges.emplace_back(i, nodes.size());
      nodes.push_back(child);
      std::string name = "u";
      for (std::size_t d = 0; d < std::min(child.depth, n); ++d) name += ((child.ubits >> d) & 1U) ? '1' : '0';
      if (child.depth > n) {
        name += "_t";
        for (std::size_t d = 0; d < child.depth - n; ++d) name += ((child.tbits >> d) & 1U) ? '1' : '0';
      }
      names.push_back(std::move(name));
    }
  }

  const std::size_t w = nodes.size();
  std::map<std::string, WorldSet> val;
  for (const auto& v : inst.universals) val.emplace(v, WorldSet(w));
  for (const auto& v : inst.existentials) val.emplace(v, WorldSet(w));
  const auto ts = detail::t_vars(l);
  for (const auto& t : ts) val.emplace(t, WorldSet(w));
  for (const char* c : {"p_top", "p_bot", "p_theta"}) val.emplace(c, WorldSet(w));

  std::vector<std::string> vars = inst.universals;
  vars.insert(vars.end(), inst.existentials.begin(), inst.existentials.end());
  const auto domain = std::make_shared<const PropDomain>(vars);
  std::map<std::uint32_t, Bits> labels;
  for (std::uint32_t u = 0; u < (std::uint32_t{1} << n); ++u) {
    Bits q = q_label(u);
    if (q.size() != k) throw InstanceError("q_label must give one value per existential");
    labels.emplace(u, std::move(q));
  }

  for (std::size_t i = 0; i < w; ++i) {
    const Node& node = nodes[i];
    for (std::size_t d = 0; d < std::min(node.depth, n); ++d)
      if ((node.ubits >> d) & 1U) val[inst.universals[d]].insert(i);
    for (std::size_t d = 0; d + n < node.depth; ++d)
      if ((node.tbits >> d) & 1U) val[ts[d]].insert(i);
    if (node.depth < n) continue;
    const Bits& q = labels.at(node.ubits);
    for (std::size_t j = 0; j < k; ++j)
      if (q[j]) val[inst.existentials[j]].insert(i);
    if (node.depth == n + l) {
      val["p_top"].insert(i);
      Bits row(vars.size());
      for (std::size_t d = 0; d < n; ++d) row[d] = (node.ubits >> d) & 1U;
      for (std::size_t j = 0; j < k; ++j) row[n + j] = q[j];
      if (eval_pl_tarski(Assignment(domain, std::move(row)), inst.matrix)) val["p_theta"].insert(i);
    }
  }
  KripkeModel m(std::move(names), edges, std::move(val));
  WorldSet root(w);
  root.insert(0);
  return {std::move(m), std::move(root)};
}

inline constexpr std::size_t kQLabelBound = 1U << 12;

// Every existential labelling of the p-leaves, as a callable per labelling.
inline std::vector<QLabel> all_q_labels(const DqbfInstance& inst) {
  const std::size_t n = inst.universals.size();
  const std::size_t k = inst.existentials.size();
  const std::size_t bits = k << n;
  if (bits >= 63 || (std::uint64_t{1} << bits) > kQLabelBound)
    throw SizeGuardError("all_q_labels: too many labellings");
  std::vector<QLabel> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code)
    out.push_back([code, k](std::uint32_t u) {
      Bits q(k);
      for (std::size_t j = 0; j < k; ++j) q[j] = (code >> (u * k + j)) & 1U;
      return q;
    });
  return out;
}

// "forall p1 p2 ; exists q1 {p1} ; exists q2 {p1,p2} ; matrix <formula>"
inline DqbfInstance parse_dqbf(const std::string& text) {
  DqbfInstance inst;
  bool have_matrix = false;
  std::istringstream in(text);
  std::string clause;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
  };
  while (std::getline(in, clause, ';')) {
    clause = trim(clause);
    if (clause.empty()) continue;
    std::istringstream cs(clause);
    std::string head;
    cs >> head;
    if (head == "forall") {
      std::string v;
      while (cs >> v) inst.universals.push_back(v);
    } else if (head == "exists") {
      std::string v, rest;
      if (!(cs >> v)) throw FormatError("dqbf: 'exists' needs a variable");
      std::getline(cs, rest);
      rest = trim(rest);
      if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
        throw FormatError("dqbf: constraint set for '" + v + "' must be written {p1,...}");
      std::set<std::size_t> c;
      std::istringstream rs(rest.substr(1, rest.size() - 2));
      std::string p;
      while (std::getline(rs, p, ',')) {
        p = trim(p);
        if (p.empty()) continue;
        auto it = std::find(inst.universals.begin(), inst.universals.end(), p);
        if (it == inst.universals.end())
          throw InstanceError("dqbf: constraint of '" + v + "' names unknown universal '" + p + "'");
        c.insert(static_cast<std::size_t>(it - inst.universals.begin()));
      }
      inst.existentials.push_back(v);
      inst.constraints.emplace_back(c.begin(), c.end());
    } else if (head == "matrix") {
      std::string rest;
      std::getline(cs, rest);
      inst.matrix = parse_formula(rest);
      have_matrix = true;
    } else {
      throw FormatError("dqbf: unknown clause '" + head + "'");
    }
  }
  if (!have_matrix) throw FormatError("dqbf: missing matrix clause");
  inst.validate();
  return inst;
}

}  // namespace inclogic
