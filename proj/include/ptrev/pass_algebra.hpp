#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ptrev/netlist.hpp"
#include "ptrev/signal.hpp"

namespace ptrev {

struct Literal {
  std::string var;
  bool negated = false;

  auto operator<=>(const Literal&) const = default;
};

/// Conduction condition of a pass network: literals combined in series
/// (conjunction) and parallel with a common input (disjunction). An empty
/// conjunction is the constant "always conducting".
class CtlExpr {
 public:
  enum class Kind { Literal, And, Or };

  static CtlExpr lit(std::string var, bool negated = false);
  static CtlExpr all_of(std::vector<CtlExpr> terms);
  static CtlExpr any_of(std::vector<CtlExpr> terms);  // throws on empty
  static CtlExpr always() { return all_of({}); }

  Kind kind() const { return kind_; }
  const Literal& literal() const { return literal_; }
  const std::vector<CtlExpr>& children() const { return children_; }
  bool is_always() const { return kind_ == Kind::And && children_.empty(); }

  /// Throws Error(UnboundVariable).
  bool eval(const std::map<std::string, bool>& assign) const;

  bool operator==(const CtlExpr&) const = default;

 private:
  Kind kind_ = Kind::And;
  Literal literal_;
  std::vector<CtlExpr> children_;
};

/// Series composition of two conditions, flattening nested conjunctions and
/// dropping constant-true operands.
CtlExpr conjoin(const CtlExpr& a, const CtlExpr& b);

/// A pass input gated by a condition, or several of those driving one node
/// in parallel.
class PassExpr {
 public:
  enum class Kind { Pass, Sum };

  static PassExpr pass(std::string input, CtlExpr ctl);
  static PassExpr sum(std::vector<PassExpr> terms);  // throws on empty

  Kind kind() const { return kind_; }
  const std::string& input() const { return input_; }
  const CtlExpr& ctl() const { return ctl_; }
  const std::vector<PassExpr>& terms() const { return terms_; }

  bool operator==(const PassExpr&) const = default;

 private:
  Kind kind_ = Kind::Pass;
  std::string input_;
  CtlExpr ctl_;
  std::vector<PassExpr> terms_;
};

/// Puts `more` in series after `e`: every Pass leaf gains it as an extra
/// conjunct, Sum structure is kept.
PassExpr series(const PassExpr& e, const CtlExpr& more);

/// Throws Error(UnboundVariable) when a variable is missing from the maps.
Signal eval_expr(const PassExpr& e, const std::map<std::string, bool>& ctl_assign,
                 const std::map<std::string, Signal>& pass_assign);

/// Canonical sum of passes: a flat Sum whose leaves carry a single literal or
/// a conjunction of distinct literals, disjunctions distributed out, leaves
/// sorted by (input, literals), duplicates and literal-superset leaves for
/// the same input removed.
PassExpr normalize(const PassExpr& e);

/// Lowers `e` (normalized first) to a netlist: a series chain of one
/// transistor per literal for each leaf, all chains meeting at `output`.
/// Control variables become dual-rail control inputs (`x`, `x_n`); other
/// variables become pass inputs.
Netlist compile_expr(const PassExpr& e, const NodeId& output);

std::set<std::string> control_variables(const PassExpr& e);
std::set<std::string> pass_variables(const PassExpr& e);
std::size_t literal_count(const PassExpr& e);

// Text syntax: leaf `y<x1&x2|~x3>`, sums with `+`, parentheses both in
// conditions and around sums; `(a<x> + b<y>)<z>` is series composition,
// `1` is the always-true condition. `&` binds tighter than `|`.
PassExpr parse_pass_expr(std::string_view text);  // throws Error(Parse)
std::string to_string(const CtlExpr& c);
std::string to_string(const PassExpr& e);

}  // namespace ptrev
