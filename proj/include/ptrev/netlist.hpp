#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ptrev {

using NodeId = std::string;

/// Name of the complementary rail for a dual-rail signal.
std::string complement_name(std::string_view node);

/// An NMOS pass transistor. Source and drain are interchangeable; the
/// channel conducts in both directions while the gate is 1.
struct Transistor {
  NodeId gate;
  NodeId source;
  NodeId drain;

  bool operator==(const Transistor&) const = default;
};

enum class PortKind { PassInput, ControlInput, Output };

struct Port {
  NodeId node;
  PortKind kind;

  bool operator==(const Port&) const = default;
};

struct RailPair {
  NodeId positive;
  NodeId negative;

  bool operator==(const RailPair&) const = default;
};

class NetlistBuilder;

/// Immutable switch-level netlist: named nodes, pass transistors, ordered
/// ports and dual-rail declarations. Instances are only produced by
/// NetlistBuilder, so every value satisfies the structural invariants.
class Netlist {
 public:
  Netlist() = default;

  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool has_node(std::string_view name) const;
  // Throws Error(UnknownNode).
  std::size_t node_index(std::string_view name) const;

  const std::vector<Transistor>& transistors() const { return transistors_; }
  std::size_t transistor_count() const { return transistors_.size(); }

  // Dense form of transistors(): {gate, source, drain} node indices.
  struct Terminals {
    std::size_t gate, source, drain;
  };
  const std::vector<Terminals>& terminals() const { return terminals_; }

  const std::vector<Port>& ports() const { return ports_; }
  std::vector<NodeId> pass_inputs() const;
  std::vector<NodeId> control_inputs() const;
  /// Pass and control inputs in declaration order.
  std::vector<NodeId> inputs() const;
  std::vector<NodeId> outputs() const;
  bool is_input(std::string_view name) const;
  bool is_output(std::string_view name) const;

  const std::vector<RailPair>& rail_pairs() const { return rails_; }
  std::optional<NodeId> rail_partner(std::string_view name) const;

  /// Inputs tied to a fixed logic level, in declaration order.
  const std::vector<std::pair<NodeId, bool>>& constants() const { return constants_; }
  std::optional<bool> constant_value(std::string_view name) const;

  /// Inputs that are enumerated by truth-table extraction: declaration
  /// order, excluding constants and any input whose rail partner was
  /// declared as an input earlier.
  std::vector<NodeId> primary_inputs() const;
  /// Outputs in declaration order, excluding any output whose rail partner
  /// was declared as an output earlier.
  std::vector<NodeId> primary_outputs() const;

  bool operator==(const Netlist& other) const;

 private:
  friend class NetlistBuilder;

  std::vector<NodeId> nodes_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<Transistor> transistors_;
  std::vector<Terminals> terminals_;
  std::vector<Port> ports_;
  std::vector<RailPair> rails_;
  std::unordered_map<NodeId, NodeId> partner_;
  std::vector<std::pair<NodeId, bool>> constants_;
};

/// Incremental, validating construction of a Netlist. Every mutator checks
/// its preconditions immediately and throws ptrev::Error on violation.
class NetlistBuilder {
 public:
  NetlistBuilder() = default;
  explicit NetlistBuilder(Netlist base) : net_(std::move(base)) {}

  NetlistBuilder& node(const NodeId& name);
  /// Declares `name` unless it already exists.
  NetlistBuilder& ensure_node(const NodeId& name);
  /// Declares `name` and its complement and pairs them as rails.
  NetlistBuilder& rail_nodes(const NodeId& name);

  NetlistBuilder& pass_input(const NodeId& name);
  NetlistBuilder& control_input(const NodeId& name);
  NetlistBuilder& output(const NodeId& name);
  NetlistBuilder& port(const NodeId& name, PortKind kind);
  /// Ties an already-declared input to a constant level.
  NetlistBuilder& constant(const NodeId& name, bool value);
  NetlistBuilder& rail(const NodeId& positive, const NodeId& negative);
  NetlistBuilder& transistor(const NodeId& gate, const NodeId& source, const NodeId& drain);

  const Netlist& peek() const { return net_; }
  Netlist build() const& { return net_; }
  Netlist build() && { return std::move(net_); }

 private:
  Netlist net_;
};

/// Returns `n` with one more transistor; `n` itself is untouched.
Netlist add_transistor(const Netlist& n, const NodeId& gate, const NodeId& source,
                       const NodeId& drain);

inline std::size_t transistor_count(const Netlist& n) { return n.transistor_count(); }

/// Embeds `child` into `parent`. `binding` maps every child port node to a
/// parent node; bound parent nodes that do not exist yet are declared.
/// Non-port child nodes are renamed `<instance>.<name>`; with an empty
/// `instance` a fresh prefix is chosen. Rail pairs among child nodes are
/// carried over under the mapping. Child ports do not become parent ports.
Netlist instantiate(const Netlist& parent, const Netlist& child,
                    const std::map<NodeId, NodeId>& binding, std::string_view instance = {});

}  // namespace ptrev
