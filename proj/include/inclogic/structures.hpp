#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inclogic/error.hpp"
#include "inclogic/world_set.hpp"

namespace inclogic {

// ---------------------------------------------------------------------------
// Propositional teams

class PropDomain {
 public:
  PropDomain() = default;
  explicit PropDomain(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw FormatError("duplicate proposition '" + names_[i] + "' in domain");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  bool contains(const std::string& p) const { return index_.count(p) != 0; }
  std::size_t index(const std::string& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw UnboundPropError(p);
    return it->second;
  }

  friend bool operator==(const PropDomain& a, const PropDomain& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Bits = std::vector<bool>;

// Counting order: the first domain proposition is the least significant bit.
inline bool counting_less(const Bits& a, const Bits& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

class Assignment {
 public:
  Assignment(std::shared_ptr<const PropDomain> domain, Bits values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (values_.size() != domain_->size())
      throw FormatError("assignment length does not match its domain");
  }

  const PropDomain& domain() const { return *domain_; }
  const std::shared_ptr<const PropDomain>& domain_ptr() const { return domain_; }
  const Bits& values() const noexcept { return values_; }

  bool operator[](const std::string& p) const { return values_[domain_->index(p)]; }
  bool at(std::size_t i) const { return values_.at(i); }

  // s(p1, ..., pn)
  Bits project(const std::vector<std::string>& props) const {
    Bits out;
    out.reserve(props.size());
    for (const auto& p : props) out.push_back((*this)[p]);
    return out;
  }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return *a.domain_ == *b.domain_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const PropDomain> domain_;
  Bits values_;
};

// A duplicate-free set of assignments over a common domain, kept in
// counting order.
class PropTeam {
 public:
  explicit PropTeam(std::shared_ptr<const PropDomain> domain, std::vector<Bits> rows = {})
      : domain_(std::move(domain)), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != domain_->size())
        throw FormatError("assignment length does not match the team domain");
    std::sort(rows_.begin(), rows_.end(), counting_less);
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
  }
  PropTeam(std::vector<std::string> domain, std::vector<Bits> rows)
      : PropTeam(std::make_shared<const PropDomain>(std::move(domain)), std::move(rows)) {}

  const PropDomain& domain() const { return *domain_; }
  const std::shared_ptr<const PropDomain>& domain_ptr() const { return domain_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<Bits>& rows() const noexcept { return rows_; }
  Assignment at(std::size_t i) const { return {domain_, rows_.at(i)}; }
  bool contains(const Bits& row) const {
    return std::binary_search(rows_.begin(), rows_.end(), row, counting_less);
  }

  // Subteam selected by a bitmask over row positions (bit i = row i).
  PropTeam subteam(std::uint64_t mask) const {
    std::vector<Bits> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if ((mask >> i) & 1U) out.push_back(rows_[i]);
    return PropTeam(domain_, std::move(out));
  }

  friend PropTeam operator|(const PropTeam& a, const PropTeam& b) {
    if (!(a.domain() == b.domain())) throw FormatError("team union over different domains");
    auto rows = a.rows_;
    rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
    return PropTeam(a.domain_, std::move(rows));
  }

  friend bool operator==(const PropTeam& a, const PropTeam& b) {
    return a.domain() == b.domain() && a.rows_ == b.rows_;
  }

 private:
  std::shared_ptr<const PropDomain> domain_;
  std::vector<Bits> rows_;
};

inline constexpr std::size_t kDefaultAssignmentBound = std::size_t{1} << 20;

// 2^D in counting order.
inline PropTeam all_assignments(const std::vector<std::string>& domain,
                                std::size_t bound = kDefaultAssignmentBound) {
  if (domain.size() >= 63 || (std::size_t{1} << domain.size()) > bound)
    throw SizeGuardError("2^" + std::to_string(domain.size()) +
                         " assignments exceed the configured bound");
  std::vector<Bits> rows;
  const std::size_t n = std::size_t{1} << domain.size();
  rows.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    Bits r(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) r[i] = (m >> i) & 1U;
    rows.push_back(std::move(r));
  }
  return PropTeam(domain, std::move(rows));
}

// ---------------------------------------------------------------------------
// Kripke models

using WorldTeam = WorldSet;

class KripkeModel {
 public:
  KripkeModel() = default;

  KripkeModel(std::vector<std::string> worlds,
              const std::vector<std::pair<std::size_t, std::size_t>>& edges,
              std::map<std::string, WorldSet> valuation)
      : names_(std::move(worlds)), valuation_(std::move(valuation)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (!index_.emplace(names_[i], i).second)
        throw FormatError("duplicate world '" + names_[i] + "'");
    const std::size_t n = names_.size();
    succ_.assign(n, {});
    pred_.assign(n, {});
    succ_set_.assign(n, WorldSet(n));
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) throw ForeignWorldError("edge references an unknown world");
      if (succ_set_[u].contains(v)) continue;
      succ_set_[u].insert(v);
      succ_[u].push_back(v);
      pred_[v].push_back(u);
    }
    for (auto& s : succ_) std::sort(s.begin(), s.end());
    for (auto& p : pred_) std::sort(p.begin(), p.end());
    for (const auto& [p, ws] : valuation_)
      if (ws.universe() != n) throw ForeignWorldError("valuation of '" + p + "' has wrong universe");
  }

  // Name-based constructor matching the JSON model format.
  static KripkeModel from_names(std::vector<std::string> worlds,
                                const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::map<std::string, std::vector<std::string>>& valuation) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < worlds.size(); ++i) idx.emplace(worlds[i], i);
    auto lookup = [&](const std::string& w) {
      auto it = idx.find(w);
      if (it == idx.end()) throw ForeignWorldError("unknown world '" + w + "'");
      return it->second;
    };
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (const auto& [u, v] : edges) e.emplace_back(lookup(u), lookup(v));
    std::map<std::string, WorldSet> val;
    for (const auto& [p, ws] : valuation) {
      WorldSet s(worlds.size());
      for (const auto& w : ws) s.insert(lookup(w));
      val.emplace(p, std::move(s));
    }
    return KripkeModel(std::move(worlds), e, std::move(val));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& world_names() const noexcept { return names_; }
  const std::string& world_name(std::size_t w) const { return names_.at(w); }
  std::size_t world_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ForeignWorldError("unknown world '" + name + "'");
    return it->second;
  }

  const std::vector<std::size_t>& successors(std::size_t w) const { return succ_.at(w); }
  const std::vector<std::size_t>& predecessors(std::size_t w) const { return pred_.at(w); }
  const WorldSet& successor_set(std::size_t w) const { return succ_set_.at(w); }
  bool has_edge(std::size_t u, std::size_t v) const { return succ_set_.at(u).contains(v); }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < succ_.size(); ++u)
      for (auto v : succ_[u]) out.emplace_back(u, v);
    return out;
  }

  bool has_prop(const std::string& p) const { return valuation_.count(p) != 0; }
  const WorldSet& valuation(const std::string& p) const {
    auto it = valuation_.find(p);
    if (it == valuation_.end()) throw UnboundPropError(p);
    return it->second;
  }
  const std::map<std::string, WorldSet>& valuations() const noexcept { return valuation_; }

  KripkeModel with_valuation(const std::string& p, WorldSet truth) const {
    if (truth.universe() != size()) throw ForeignWorldError("valuation has wrong universe");
    KripkeModel m = *this;
    m.valuation_[p] = std::move(truth);
    return m;
  }

  WorldTeam empty_team() const { return WorldSet(size()); }
  WorldTeam all_worlds() const { return WorldSet::full(size()); }
  WorldTeam team(const std::vector<std::string>& names) const {
    WorldSet t(size());
    for (const auto& n : names) t.insert(world_index(n));
    return t;
  }

  void check_team(const WorldTeam& t) const {
    if (t.universe() != size()) throw ForeignWorldError("team does not belong to this model");
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> succ_, pred_;
  std::vector<WorldSet> succ_set_;
  std::map<std::string, WorldSet> valuation_;
};

// R[T]
inline WorldTeam r_image(const KripkeModel& m, const WorldTeam& t) {
  m.check_team(t);
  WorldSet out(m.size());
  t.for_each([&](std::size_t w) { out |= m.successor_set(w); });
  return out;
}

// R^{-1}[T]
inline WorldTeam r_preimage(const KripkeModel& m, const WorldTeam& t) {
  m.check_team(t);
  WorldSet out(m.size());
  t.for_each([&](std::size_t v) {
    for (auto u : m.predecessors(v)) out.insert(u);
  });
  return out;
}

// T[R]S: S within R[T] and T within R^{-1}[S].
inline bool is_successor_pair(const KripkeModel& m, const WorldTeam& t, const WorldTeam& s) {
  m.check_team(t);
  m.check_team(s);
  return s.is_subset_of(r_image(m, t)) && t.is_subset_of(r_preimage(m, s));
}

// One world per team member, no edges, valuation read off the assignments.
// World i corresponds to row i of the team.
inline KripkeModel embed_prop_team(const PropTeam& x) {
  std::vector<std::string> worlds;
  for (std::size_t i = 0; i < x.size(); ++i) worlds.push_back("s" + std::to_string(i));
  std::map<std::string, WorldSet> val;
  for (std::size_t p = 0; p < x.domain().size(); ++p) {
    WorldSet truth(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.rows()[i][p]) truth.insert(i);
    val.emplace(x.domain().name(p), std::move(truth));
  }
  return KripkeModel(std::move(worlds), {}, std::move(val));
}

}  // namespace inclogic
