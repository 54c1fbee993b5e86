#include "ptrev/pass_algebra.hpp"

#include <algorithm>
#include <cctype>

#include "ptrev/error.hpp"

namespace ptrev {

CtlExpr CtlExpr::lit(std::string var, bool negated) {
  if (var.empty()) throw Error(ErrorKind::InvalidArgument, "control variable name must be non-empty");
  CtlExpr c;
  c.kind_ = Kind::Literal;
  c.literal_ = {std::move(var), negated};
  return c;
}

CtlExpr CtlExpr::all_of(std::vector<CtlExpr> terms) {
  CtlExpr c;
  c.kind_ = Kind::And;
  c.children_ = std::move(terms);
  return c;
}

CtlExpr CtlExpr::any_of(std::vector<CtlExpr> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "parallel condition needs at least one branch");
  CtlExpr c;
  c.kind_ = Kind::Or;
  c.children_ = std::move(terms);
  return c;
}

bool CtlExpr::eval(const std::map<std::string, bool>& assign) const {
  switch (kind_) {
    case Kind::Literal: {
      auto it = assign.find(literal_.var);
      if (it == assign.end()) throw Error(ErrorKind::UnboundVariable, "control variable '" + literal_.var + "' is unbound");
      return it->second != literal_.negated;
    }
    case Kind::And:
      return std::all_of(children_.begin(), children_.end(), [&](const CtlExpr& c) { return c.eval(assign); });
    case Kind::Or:
      return std::any_of(children_.begin(), children_.end(), [&](const CtlExpr& c) { return c.eval(assign); });
  }
  return false;
}

CtlExpr conjoin(const CtlExpr& a, const CtlExpr& b) {
  if (a.is_always()) return b;
  if (b.is_always()) return a;
  std::vector<CtlExpr> parts;
  for (const auto* side : {&a, &b}) {
    if (side->kind() == CtlExpr::Kind::And) {
      parts.insert(parts.end(), side->children().begin(), side->children().end());
    } else {
      parts.push_back(*side);
    }
  }
  return CtlExpr::all_of(std::move(parts));
}

PassExpr PassExpr::pass(std::string input, CtlExpr ctl) {
  if (input.empty()) throw Error(ErrorKind::InvalidArgument, "pass variable name must be non-empty");
  PassExpr e;
  e.kind_ = Kind::Pass;
  e.input_ = std::move(input);
  e.ctl_ = std::move(ctl);
  return e;
}

PassExpr PassExpr::sum(std::vector<PassExpr> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "sum of passes needs at least one term");
  PassExpr e;
  e.kind_ = Kind::Sum;
  e.terms_ = std::move(terms);
  return e;
}

PassExpr series(const PassExpr& e, const CtlExpr& more) {
  if (e.kind() == PassExpr::Kind::Pass) return PassExpr::pass(e.input(), conjoin(e.ctl(), more));
  std::vector<PassExpr> terms;
  terms.reserve(e.terms().size());
  for (const auto& t : e.terms()) terms.push_back(series(t, more));
  return PassExpr::sum(std::move(terms));
}

Signal eval_expr(const PassExpr& e, const std::map<std::string, bool>& ctl_assign,
                 const std::map<std::string, Signal>& pass_assign) {
  if (e.kind() == PassExpr::Kind::Sum) {
    Signal acc = Signal::Z;
    for (const auto& t : e.terms()) acc = merge(acc, eval_expr(t, ctl_assign, pass_assign));
    return acc;
  }
  auto it = pass_assign.find(e.input());
  if (it == pass_assign.end()) throw Error(ErrorKind::UnboundVariable, "pass variable '" + e.input() + "' is unbound");
  return pass_through(it->second, e.ctl().eval(ctl_assign));
}

namespace {

using Conjunction = std::vector<Literal>;  // sorted, unique

Conjunction join(const Conjunction& a, const Conjunction& b) {
  Conjunction out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Disjunctive form of a condition.
std::vector<Conjunction> dnf(const CtlExpr& c) {
  switch (c.kind()) {
    case CtlExpr::Kind::Literal:
      return {{c.literal()}};
    case CtlExpr::Kind::Or: {
      std::vector<Conjunction> out;
      for (const auto& child : c.children()) {
        auto part = dnf(child);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case CtlExpr::Kind::And: {
      std::vector<Conjunction> acc{{}};
      for (const auto& child : c.children()) {
        std::vector<Conjunction> next;
        for (const auto& rhs : dnf(child)) {
          for (const auto& lhs : acc) next.push_back(join(lhs, rhs));
        }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

struct Leaf {
  std::string input;
  Conjunction lits;

  auto operator<=>(const Leaf&) const = default;
};

void collect_leaves(const PassExpr& e, std::vector<Leaf>& out) {
  if (e.kind() == PassExpr::Kind::Sum) {
    for (const auto& t : e.terms()) collect_leaves(t, out);
    return;
  }
  for (auto& conj : dnf(e.ctl())) out.push_back({e.input(), std::move(conj)});
}

CtlExpr ctl_of(const Conjunction& lits) {
  if (lits.size() == 1) return CtlExpr::lit(lits[0].var, lits[0].negated);
  std::vector<CtlExpr> parts;
  for (const auto& l : lits) parts.push_back(CtlExpr::lit(l.var, l.negated));
  return CtlExpr::all_of(std::move(parts));
}

std::vector<Leaf> normal_leaves(const PassExpr& e) {
  std::vector<Leaf> leaves;
  collect_leaves(e, leaves);
  std::sort(leaves.begin(), leaves.end());
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

  std::vector<Leaf> kept;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const bool absorbed = std::any_of(leaves.begin(), leaves.end(), [&](const Leaf& other) {
      return &other != &leaves[i] && other.input == leaves[i].input &&
             std::includes(leaves[i].lits.begin(), leaves[i].lits.end(), other.lits.begin(), other.lits.end());
    });
    if (!absorbed) kept.push_back(leaves[i]);
  }
  return kept;
}

void collect_vars(const CtlExpr& c, std::set<std::string>& out) {
  if (c.kind() == CtlExpr::Kind::Literal) {
    out.insert(c.literal().var);
    return;
  }
  for (const auto& child : c.children()) collect_vars(child, out);
}

}  // namespace

PassExpr normalize(const PassExpr& e) {
  std::vector<PassExpr> terms;
  for (const auto& leaf : normal_leaves(e)) terms.push_back(PassExpr::pass(leaf.input, ctl_of(leaf.lits)));
  return PassExpr::sum(std::move(terms));
}

std::set<std::string> control_variables(const PassExpr& e) {
  std::set<std::string> out;
  if (e.kind() == PassExpr::Kind::Pass) {
    collect_vars(e.ctl(), out);
  } else {
    for (const auto& t : e.terms()) out.merge(control_variables(t));
  }
  return out;
}

std::set<std::string> pass_variables(const PassExpr& e) {
  if (e.kind() == PassExpr::Kind::Pass) return {e.input()};
  std::set<std::string> out;
  for (const auto& t : e.terms()) out.merge(pass_variables(t));
  return out;
}

std::size_t literal_count(const PassExpr& e) {
  std::size_t n = 0;
  for (const auto& leaf : normal_leaves(e)) n += leaf.lits.size();
  return n;
}

Netlist compile_expr(const PassExpr& e, const NodeId& output) {
  const auto leaves = normal_leaves(e);
  const auto controls = control_variables(e);
  auto passes = pass_variables(e);
  if (controls.count(output) || passes.count(output)) {
    throw Error(ErrorKind::InvalidArgument, "output '" + output + "' clashes with an expression variable");
  }

  NetlistBuilder b;
  for (const auto& x : controls) {
    b.rail_nodes(x).control_input(x).control_input(complement_name(x));
  }
  for (const auto& y : passes) {
    if (controls.count(y)) continue;
    b.node(y).pass_input(y);
  }
  b.node(output).output(output);

  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto& leaf = leaves[i];
    if (leaf.lits.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "leaf '" + leaf.input + "' is always conducting and has no transistor realization");
    }
    NodeId prev = leaf.input;
    for (std::size_t j = 0; j < leaf.lits.size(); ++j) {
      const bool last = j + 1 == leaf.lits.size();
      NodeId next = last ? output : output + "." + std::to_string(i) + "." + std::to_string(j);
      if (!last) b.node(next);
      const auto& l = leaf.lits[j];
      b.transistor(l.negated ? complement_name(l.var) : l.var, prev, next);
      prev = std::move(next);
    }
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Text syntax

std::string to_string(const CtlExpr& c) {
  switch (c.kind()) {
    case CtlExpr::Kind::Literal:
      return (c.literal().negated ? "~" : "") + c.literal().var;
    case CtlExpr::Kind::And: {
      if (c.children().empty()) return "1";
      std::string s;
      for (const auto& child : c.children()) {
        if (!s.empty()) s += '&';
        const bool wrap = child.kind() == CtlExpr::Kind::Or || child.kind() == CtlExpr::Kind::And;
        s += wrap ? "(" + to_string(child) + ")" : to_string(child);
      }
      return s;
    }
    case CtlExpr::Kind::Or: {
      std::string s;
      for (const auto& child : c.children()) {
        if (!s.empty()) s += '|';
        s += child.kind() == CtlExpr::Kind::Or ? "(" + to_string(child) + ")" : to_string(child);
      }
      return s;
    }
  }
  return {};
}

namespace {

// A one-term sum prints as its own parenthesized group so it survives a
// print/parse round trip; longer nested sums get parentheses from the parent.
std::string sum_term(const PassExpr& t) {
  if (t.kind() == PassExpr::Kind::Sum && t.terms().size() > 1) return "(" + to_string(t) + ")";
  return to_string(t);
}

}  // namespace

std::string to_string(const PassExpr& e) {
  if (e.kind() == PassExpr::Kind::Pass) return e.input() + "<" + to_string(e.ctl()) + ">";
  if (e.terms().size() == 1) return "(" + sum_term(e.terms().front()) + ")";
  std::string s;
  for (const auto& t : e.terms()) {
    if (!s.empty()) s += " + ";
    s += sum_term(t);
  }
  return s;
}

namespace {

CtlExpr negate(const CtlExpr& c) {
  switch (c.kind()) {
    case CtlExpr::Kind::Literal:
      return CtlExpr::lit(c.literal().var, !c.literal().negated);
    case CtlExpr::Kind::And: {
      if (c.children().empty()) throw Error(ErrorKind::Parse, "cannot negate the constant 1");
      std::vector<CtlExpr> parts;
      for (const auto& child : c.children()) parts.push_back(negate(child));
      return CtlExpr::any_of(std::move(parts));
    }
    case CtlExpr::Kind::Or: {
      std::vector<CtlExpr> parts;
      for (const auto& child : c.children()) parts.push_back(negate(child));
      return CtlExpr::all_of(std::move(parts));
    }
  }
  return c;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  PassExpr parse() {
    auto e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "expression column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a variable name");
    const auto start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  PassExpr sum() {
    std::vector<PassExpr> terms{term()};
    while (accept('+')) terms.push_back(term());
    return terms.size() == 1 ? std::move(terms.front()) : PassExpr::sum(std::move(terms));
  }

  PassExpr term() {
    PassExpr e;
    if (accept('(')) {
      std::vector<PassExpr> inner{term()};
      while (accept('+')) inner.push_back(term());
      expect(')');
      e = PassExpr::sum(std::move(inner));
    } else {
      auto name = ident();
      expect('<');
      auto c = ctl();
      expect('>');
      e = PassExpr::pass(std::move(name), std::move(c));
    }
    while (accept('<')) {
      auto c = ctl();
      expect('>');
      e = series(e, c);
    }
    return e;
  }

  CtlExpr ctl() {
    std::vector<CtlExpr> parts{conj()};
    while (accept('|')) parts.push_back(conj());
    return parts.size() == 1 ? std::move(parts.front()) : CtlExpr::any_of(std::move(parts));
  }

  CtlExpr conj() {
    std::vector<CtlExpr> parts{unary()};
    while (accept('&')) parts.push_back(unary());
    return parts.size() == 1 ? std::move(parts.front()) : CtlExpr::all_of(std::move(parts));
  }

  CtlExpr unary() {
    if (accept('~')) return negate(unary());
    if (accept('1')) return CtlExpr::always();
    if (accept('(')) {
      auto c = ctl();
      expect(')');
      return c;
    }
    return CtlExpr::lit(ident());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PassExpr parse_pass_expr(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace ptrev
