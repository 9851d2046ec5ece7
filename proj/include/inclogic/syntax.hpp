#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inclogic/error.hpp"

namespace inclogic {

enum class Kind { Atom, NegAtom, And, Or, Diamond, Box, Inclusion };

// Syntactic fragment, detected once at construction.
//   PL     literals, conjunction, disjunction
//   PLinc  PL plus inclusion atoms over proposition symbols
//   ML     PL plus diamond and box
//   Minc   ML plus inclusion atoms over proposition symbols
//   EMinc  some inclusion atom has a non-atomic parameter
enum class Fragment { PL, PLinc, ML, Minc, EMinc };

inline const char* to_string(Fragment f) {
  switch (f) {
    case Fragment::PL: return "PL";
    case Fragment::PLinc: return "PLinc";
    case Fragment::ML: return "ML";
    case Fragment::Minc: return "Minc";
    case Fragment::EMinc: return "EMinc";
  }
  return "?";
}

inline bool is_modal_fragment(Fragment f) {
  return f == Fragment::ML || f == Fragment::Minc;
}

using OccId = std::size_t;

struct Node {
  Kind kind = Kind::Atom;
  std::string prop;             // Atom / NegAtom only
  std::vector<OccId> children;  // Inclusion: lhs parameters, then rhs parameters
  std::size_t arity = 0;        // Inclusion only
  std::size_t extent = 1;       // number of nodes in this subtree
};

// Immutable formula stored as a preorder node array. Occurrence ids are
// array indices: the root is 0 and every subtree occupies the contiguous
// range [id, id + extent).
class Formula {
 public:
  static Formula atom(std::string p) { return leaf(Kind::Atom, std::move(p)); }
  static Formula neg_atom(std::string p) { return leaf(Kind::NegAtom, std::move(p)); }

  static Formula conj(const Formula& l, const Formula& r) { return compose(Kind::And, {&l, &r}, 0); }
  static Formula disj(const Formula& l, const Formula& r) { return compose(Kind::Or, {&l, &r}, 0); }
  static Formula diamond(const Formula& f) { return compose(Kind::Diamond, {&f}, 0); }
  static Formula box(const Formula& f) { return compose(Kind::Box, {&f}, 0); }

  static Formula inclusion(const std::vector<Formula>& lhs, const std::vector<Formula>& rhs) {
    if (lhs.empty() || lhs.size() != rhs.size())
      throw ArityError("inclusion atom needs equal, positive arity (got " +
                       std::to_string(lhs.size()) + " and " + std::to_string(rhs.size()) + ")");
    std::vector<const Formula*> parts;
    for (const auto& f : lhs) parts.push_back(&f);
    for (const auto& f : rhs) parts.push_back(&f);
    return compose(Kind::Inclusion, parts, lhs.size());
  }
  static Formula inclusion(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs) {
    std::vector<Formula> l, r;
    for (const auto& p : lhs) l.push_back(atom(p));
    for (const auto& p : rhs) r.push_back(atom(p));
    return inclusion(l, r);
  }

  // Left-associated folds; the list must be non-empty.
  static Formula conj_all(const std::vector<Formula>& fs) { return fold(Kind::And, fs); }
  static Formula disj_all(const std::vector<Formula>& fs) { return fold(Kind::Or, fs); }

  static Formula boxes(std::size_t n, Formula f) {
    for (std::size_t i = 0; i < n; ++i) f = box(f);
    return f;
  }
  static Formula diamonds(std::size_t n, Formula f) {
    for (std::size_t i = 0; i < n; ++i) f = diamond(f);
    return f;
  }

  OccId root() const noexcept { return 0; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& node(OccId id) const { return nodes_.at(id); }
  const Node& operator[](OccId id) const { return nodes_[id]; }
  Kind kind() const { return nodes_.front().kind; }
  Fragment fragment() const noexcept { return fragment_; }

  // True if some inclusion parameter itself contains an inclusion atom.
  bool has_nested_inclusion() const noexcept { return nested_inclusion_; }

  Formula subformula(OccId id) const {
    Formula f;
    const auto& n = nodes_.at(id);
    f.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(id),
                    nodes_.begin() + static_cast<std::ptrdiff_t>(id + n.extent));
    for (auto& m : f.nodes_)
      for (auto& c : m.children) c -= id;
    f.classify();
    return f;
  }

  std::vector<OccId> lhs(OccId id) const {
    const auto& n = nodes_.at(id);
    return {n.children.begin(), n.children.begin() + static_cast<std::ptrdiff_t>(n.arity)};
  }
  std::vector<OccId> rhs(OccId id) const {
    const auto& n = nodes_.at(id);
    return {n.children.begin() + static_cast<std::ptrdiff_t>(n.arity), n.children.end()};
  }

  std::set<std::string> props() const {
    std::set<std::string> out;
    for (const auto& n : nodes_)
      if (n.kind == Kind::Atom || n.kind == Kind::NegAtom) out.insert(n.prop);
    return out;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.nodes_.size() != b.nodes_.size()) return false;
    for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
      const auto& x = a.nodes_[i];
      const auto& y = b.nodes_[i];
      if (x.kind != y.kind || x.prop != y.prop || x.arity != y.arity || x.children != y.children)
        return false;
    }
    return true;
  }

 private:
  static Formula leaf(Kind k, std::string p) {
    Formula f;
    Node n;
    n.kind = k;
    n.prop = std::move(p);
    f.nodes_.push_back(std::move(n));
    f.classify();
    return f;
  }

  static Formula compose(Kind k, const std::vector<const Formula*>& parts, std::size_t arity) {
    Formula f;
    std::size_t total = 1;
    for (auto* p : parts) total += p->size();
    f.nodes_.reserve(total);
    Node root;
    root.kind = k;
    root.arity = arity;
    root.extent = total;
    f.nodes_.push_back(std::move(root));
    for (auto* p : parts) {
      const OccId offset = f.nodes_.size();
      f.nodes_.front().children.push_back(offset);
      for (const auto& n : p->nodes_) {
        Node copy = n;
        for (auto& c : copy.children) c += offset;
        f.nodes_.push_back(std::move(copy));
      }
    }
    f.classify();
    return f;
  }

  static Formula fold(Kind k, const std::vector<Formula>& fs) {
    if (fs.empty()) throw ArityError("cannot fold an empty formula list");
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = compose(k, {&acc, &fs[i]}, 0);
    return acc;
  }

  void classify() {
    bool modal = false, incl = false, extended = false;
    nested_inclusion_ = false;
    for (const auto& n : nodes_) {
      if (n.kind == Kind::Diamond || n.kind == Kind::Box) modal = true;
      if (n.kind != Kind::Inclusion) continue;
      incl = true;
      for (auto c : n.children) {
        const auto& param = nodes_[c];
        if (param.kind != Kind::Atom) extended = true;
        for (OccId d = c; d < c + param.extent; ++d)
          if (nodes_[d].kind == Kind::Inclusion) nested_inclusion_ = true;
      }
    }
    if (extended) fragment_ = Fragment::EMinc;
    else if (modal) fragment_ = incl ? Fragment::Minc : Fragment::ML;
    else fragment_ = incl ? Fragment::PLinc : Fragment::PL;
  }

  std::vector<Node> nodes_;
  Fragment fragment_ = Fragment::PL;
  bool nested_inclusion_ = false;
};

// ---------------------------------------------------------------------------
// Parsing
//
//   formula  := disj ; disj := conj ('|' conj)* ; conj := unary ('&' unary)*
//   unary    := '<>' unary | '[]' unary | primary
//   primary  := ident | '!' ident | '(' formula ')' | incl
//   incl     := '[' flist '<=' flist ']' ; flist := formula (',' formula)*

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = disj();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Next non-blank character after the one at pos_.
  char peek_second() {
    skip_ws();
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  // Consume a two-character token whose characters may be separated by blanks.
  void take_pair() {
    ++pos_;
    skip_ws();
    ++pos_;
  }

  Formula disj() {
    Formula f = conj();
    while (peek() == '|') {
      ++pos_;
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek() == '&') {
      ++pos_;
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    char c = peek();
    if (c == '<' && peek_second() == '>') {
      take_pair();
      return Formula::diamond(unary());
    }
    if (c == '[' && peek_second() == ']') {
      take_pair();
      return Formula::box(unary());
    }
    return primary();
  }

  Formula primary() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      if (!is_ident_start(peek())) fail("negation only applies to proposition symbols");
      return Formula::neg_atom(ident());
    }
    if (c == '(') {
      ++pos_;
      Formula f = disj();
      expect(')');
      return f;
    }
    if (c == '[') {
      ++pos_;
      auto lhs = flist();
      if (peek() != '<' || peek_second() != '=') fail("expected '<=' in inclusion atom");
      take_pair();
      auto rhs = flist();
      expect(']');
      if (lhs.size() != rhs.size())
        fail("inclusion atom sides differ in length (" + std::to_string(lhs.size()) + " vs " +
             std::to_string(rhs.size()) + ")");
      return Formula::inclusion(lhs, rhs);
    }
    if (is_ident_start(c)) return Formula::atom(ident());
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::vector<Formula> flist() {
    std::vector<Formula> out;
    out.push_back(disj());
    while (peek() == ',') {
      ++pos_;
      out.push_back(disj());
    }
    return out;
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (!is_ident_start(peek())) fail("expected proposition symbol");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void render_into(const Formula& f, OccId id, std::string& out) {
  const Node& n = f[id];
  switch (n.kind) {
    case Kind::Atom: out += n.prop; break;
    case Kind::NegAtom:
      out += '!';
      out += n.prop;
      break;
    case Kind::And:
    case Kind::Or:
      out += '(';
      render_into(f, n.children[0], out);
      out += n.kind == Kind::And ? " & " : " | ";
      render_into(f, n.children[1], out);
      out += ')';
      break;
    case Kind::Diamond:
      out += "<>";
      render_into(f, n.children[0], out);
      break;
    case Kind::Box:
      out += "[]";
      render_into(f, n.children[0], out);
      break;
    case Kind::Inclusion:
      out += '[';
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i == n.arity) out += " <= ";
        else if (i > 0) out += ',';
        render_into(f, n.children[i], out);
      }
      out += ']';
      break;
  }
}

}  // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string render_formula(const Formula& f, OccId id) {
  std::string out;
  detail::render_into(f, id, out);
  return out;
}
inline std::string render_formula(const Formula& f) { return render_formula(f, f.root()); }

// ---------------------------------------------------------------------------

namespace detail {

inline Formula negate_at(const Formula& f, OccId id) {
  const Node& n = f[id];
  switch (n.kind) {
    case Kind::Atom: return Formula::neg_atom(n.prop);
    case Kind::NegAtom: return Formula::atom(n.prop);
    case Kind::And: return Formula::disj(negate_at(f, n.children[0]), negate_at(f, n.children[1]));
    case Kind::Or: return Formula::conj(negate_at(f, n.children[0]), negate_at(f, n.children[1]));
    case Kind::Diamond: return Formula::box(negate_at(f, n.children[0]));
    case Kind::Box: return Formula::diamond(negate_at(f, n.children[0]));
    case Kind::Inclusion: break;
  }
  throw NotMlError("cannot negate a formula containing inclusion atoms");
}

}  // namespace detail

// Negation of an ML formula pushed down to the literals.
inline Formula nnf_negate(const Formula& f) {
  if (f.fragment() != Fragment::PL && f.fragment() != Fragment::ML)
    throw NotMlError("cannot negate a formula containing inclusion atoms");
  return detail::negate_at(f, f.root());
}

struct Occurrence {
  OccId id;
  const Node* node;
};
using OccurrenceSet = std::vector<Occurrence>;

namespace detail {
inline void postorder(const Formula& f, OccId id, OccurrenceSet& out) {
  for (auto c : f[id].children) postorder(f, c, out);
  out.push_back({id, &f[id]});
}
}  // namespace detail

// All occurrences in postorder: children before parents, left before right.
inline OccurrenceSet sub_occurrences(const Formula& f) {
  OccurrenceSet out;
  out.reserve(f.size());
  detail::postorder(f, f.root(), out);
  return out;
}

// Rebuilds `f` bottom-up. Wherever `replace(id)` yields a formula, that
// formula stands in for the whole subtree at `id`.
template <typename Fn>
Formula rewrite(const Formula& f, OccId id, Fn&& replace) {
  if (auto r = replace(id)) return *r;
  const Node& n = f[id];
  switch (n.kind) {
    case Kind::Atom:
    case Kind::NegAtom: return f.subformula(id);
    case Kind::And:
      return Formula::conj(rewrite(f, n.children[0], replace), rewrite(f, n.children[1], replace));
    case Kind::Or:
      return Formula::disj(rewrite(f, n.children[0], replace), rewrite(f, n.children[1], replace));
    case Kind::Diamond: return Formula::diamond(rewrite(f, n.children[0], replace));
    case Kind::Box: return Formula::box(rewrite(f, n.children[0], replace));
    case Kind::Inclusion: {
      std::vector<Formula> l, r;
      for (std::size_t i = 0; i < n.children.size(); ++i)
        (i < n.arity ? l : r).push_back(rewrite(f, n.children[i], replace));
      return Formula::inclusion(l, r);
    }
  }
  return f.subformula(id);
}

template <typename Fn>
Formula rewrite(const Formula& f, Fn&& replace) {
  return rewrite(f, f.root(), std::forward<Fn>(replace));
}

inline std::size_t modal_depth(const Formula& f, OccId id) {
  const Node& n = f[id];
  std::size_t d = 0;
  for (auto c : n.children) d = std::max(d, modal_depth(f, c));
  if (n.kind == Kind::Diamond || n.kind == Kind::Box) ++d;
  return d;
}
inline std::size_t modal_depth(const Formula& f) { return modal_depth(f, f.root()); }

// n distinct names base0, base1, ... skipping anything in `avoid`.
inline std::vector<std::string> fresh_props(const std::string& base, std::size_t n,
                                            const std::set<std::string>& avoid) {
  std::vector<std::string> out;
  for (std::size_t i = 0; out.size() < n; ++i) {
    auto name = base + std::to_string(i);
    if (!avoid.count(name)) out.push_back(std::move(name));
  }
  return out;
}

}  // namespace inclogic
