#include "ptrev/netlist.hpp"

#include <algorithm>
#include <set>

#include "ptrev/error.hpp"

namespace ptrev {

namespace {

void check_name(const NodeId& name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "node name must be non-empty");
  for (char c : name) {
    if (c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw Error(ErrorKind::InvalidArgument, "node name '" + name + "' contains whitespace or '#'");
    }
  }
}

std::vector<NodeId> collect(const std::vector<Port>& ports, auto pred) {
  std::vector<NodeId> out;
  for (const auto& p : ports) {
    if (pred(p.kind)) out.push_back(p.node);
  }
  return out;
}

bool is_input_kind(PortKind k) { return k == PortKind::PassInput || k == PortKind::ControlInput; }

}  // namespace

std::string complement_name(std::string_view node) {
  std::string out(node);
  out += "_n";
  return out;
}

bool Netlist::has_node(std::string_view name) const {
  return index_.find(NodeId(name)) != index_.end();
}

std::size_t Netlist::node_index(std::string_view name) const {
  auto it = index_.find(NodeId(name));
  if (it == index_.end()) throw Error(ErrorKind::UnknownNode, "unknown node '" + std::string(name) + "'");
  return it->second;
}

std::vector<NodeId> Netlist::pass_inputs() const {
  return collect(ports_, [](PortKind k) { return k == PortKind::PassInput; });
}

std::vector<NodeId> Netlist::control_inputs() const {
  return collect(ports_, [](PortKind k) { return k == PortKind::ControlInput; });
}

std::vector<NodeId> Netlist::inputs() const { return collect(ports_, is_input_kind); }

std::vector<NodeId> Netlist::outputs() const {
  return collect(ports_, [](PortKind k) { return k == PortKind::Output; });
}

bool Netlist::is_input(std::string_view name) const {
  return std::any_of(ports_.begin(), ports_.end(),
                     [&](const Port& p) { return is_input_kind(p.kind) && p.node == name; });
}

bool Netlist::is_output(std::string_view name) const {
  return std::any_of(ports_.begin(), ports_.end(),
                     [&](const Port& p) { return p.kind == PortKind::Output && p.node == name; });
}

std::optional<NodeId> Netlist::rail_partner(std::string_view name) const {
  auto it = partner_.find(NodeId(name));
  if (it == partner_.end()) return std::nullopt;
  return it->second;
}

std::optional<bool> Netlist::constant_value(std::string_view name) const {
  for (const auto& [node, value] : constants_) {
    if (node == name) return value;
  }
  return std::nullopt;
}

namespace {

std::vector<NodeId> primary_of(const Netlist& n, const std::vector<NodeId>& ports, bool skip_constants) {
  std::vector<NodeId> out;
  std::set<NodeId> seen;
  for (const auto& node : ports) {
    seen.insert(node);
    if (skip_constants && n.constant_value(node)) continue;
    if (auto partner = n.rail_partner(node); partner && seen.count(*partner)) continue;
    out.push_back(node);
  }
  return out;
}

}  // namespace

std::vector<NodeId> Netlist::primary_inputs() const { return primary_of(*this, inputs(), true); }

std::vector<NodeId> Netlist::primary_outputs() const { return primary_of(*this, outputs(), false); }

bool Netlist::operator==(const Netlist& other) const {
  return nodes_ == other.nodes_ && transistors_ == other.transistors_ && ports_ == other.ports_ &&
         rails_ == other.rails_ && constants_ == other.constants_;
}

NetlistBuilder& NetlistBuilder::node(const NodeId& name) {
  check_name(name);
  if (net_.has_node(name)) throw Error(ErrorKind::DuplicateNode, "node '" + name + "' already declared");
  net_.index_.emplace(name, net_.nodes_.size());
  net_.nodes_.push_back(name);
  return *this;
}

NetlistBuilder& NetlistBuilder::ensure_node(const NodeId& name) {
  if (!net_.has_node(name)) node(name);
  return *this;
}

NetlistBuilder& NetlistBuilder::rail_nodes(const NodeId& name) {
  const auto neg = complement_name(name);
  node(name);
  node(neg);
  return rail(name, neg);
}

NetlistBuilder& NetlistBuilder::pass_input(const NodeId& name) { return port(name, PortKind::PassInput); }

NetlistBuilder& NetlistBuilder::control_input(const NodeId& name) {
  return port(name, PortKind::ControlInput);
}

NetlistBuilder& NetlistBuilder::output(const NodeId& name) { return port(name, PortKind::Output); }

NetlistBuilder& NetlistBuilder::port(const NodeId& name, PortKind kind) {
  net_.node_index(name);
  for (const auto& p : net_.ports_) {
    if (p.node != name) continue;
    if (p.kind == kind) throw Error(ErrorKind::PortConflict, "port '" + name + "' declared twice");
    // An output may alias an input (wire-through); the two input kinds are exclusive.
    if (is_input_kind(p.kind) && is_input_kind(kind)) {
      throw Error(ErrorKind::PortConflict, "node '" + name + "' is both a pass and a control input");
    }
  }
  net_.ports_.push_back({name, kind});
  return *this;
}

NetlistBuilder& NetlistBuilder::constant(const NodeId& name, bool value) {
  if (!net_.is_input(name)) {
    throw Error(ErrorKind::PortConflict, "constant '" + name + "' must be a declared input");
  }
  if (net_.constant_value(name)) throw Error(ErrorKind::PortConflict, "constant '" + name + "' set twice");
  net_.constants_.emplace_back(name, value);
  return *this;
}

NetlistBuilder& NetlistBuilder::rail(const NodeId& positive, const NodeId& negative) {
  net_.node_index(positive);
  net_.node_index(negative);
  if (positive == negative) throw Error(ErrorKind::InvalidRail, "rail pair '" + positive + "' is reflexive");
  for (const auto& n : {positive, negative}) {
    if (net_.partner_.count(n)) throw Error(ErrorKind::InvalidRail, "node '" + n + "' already has a rail partner");
  }
  net_.rails_.push_back({positive, negative});
  net_.partner_.emplace(positive, negative);
  net_.partner_.emplace(negative, positive);
  return *this;
}

NetlistBuilder& NetlistBuilder::transistor(const NodeId& gate, const NodeId& source, const NodeId& drain) {
  Netlist::Terminals t{net_.node_index(gate), net_.node_index(source), net_.node_index(drain)};
  if (t.source == t.drain) {
    throw Error(ErrorKind::SelfLoop, "transistor source and drain are both '" + source + "'");
  }
  net_.transistors_.push_back({gate, source, drain});
  net_.terminals_.push_back(t);
  return *this;
}

Netlist add_transistor(const Netlist& n, const NodeId& gate, const NodeId& source, const NodeId& drain) {
  return NetlistBuilder(n).transistor(gate, source, drain).build();
}

Netlist instantiate(const Netlist& parent, const Netlist& child, const std::map<NodeId, NodeId>& binding,
                    std::string_view instance) {
  std::set<NodeId> child_ports;
  for (const auto& p : child.ports()) child_ports.insert(p.node);
  for (const auto& node : child_ports) {
    if (!binding.count(node)) {
      throw Error(ErrorKind::IncompleteBinding, "child port '" + node + "' is not bound");
    }
  }
  for (const auto& [from, to] : binding) {
    if (!child_ports.count(from)) {
      throw Error(ErrorKind::InvalidArgument, "binding key '" + from + "' is not a child port");
    }
  }

  std::string prefix(instance);
  if (prefix.empty()) {
    auto used = [&](const std::string& pre) {
      return std::any_of(parent.nodes().begin(), parent.nodes().end(),
                         [&](const NodeId& n) { return n.rfind(pre + ".", 0) == 0; });
    };
    for (std::size_t k = 0;; ++k) {
      prefix = "u" + std::to_string(k);
      if (!used(prefix)) break;
    }
  }

  NetlistBuilder b(parent);
  std::unordered_map<NodeId, NodeId> rename;
  for (const auto& node : child.nodes()) {
    if (auto it = binding.find(node); it != binding.end()) {
      b.ensure_node(it->second);
      rename.emplace(node, it->second);
      continue;
    }
    NodeId fresh = prefix + "." + node;
    if (b.peek().has_node(fresh)) {
      throw Error(ErrorKind::Internal, "instance node '" + fresh + "' collides with a parent node");
    }
    b.node(fresh);
    rename.emplace(node, std::move(fresh));
  }

  for (const auto& r : child.rail_pairs()) {
    const auto& pos = rename.at(r.positive);
    const auto& neg = rename.at(r.negative);
    const auto existing = b.peek().rail_partner(pos);
    if (existing && *existing == neg) continue;
    b.rail(pos, neg);
  }

  for (const auto& t : child.transistors()) {
    b.transistor(rename.at(t.gate), rename.at(t.source), rename.at(t.drain));
  }
  return std::move(b).build();
}

}  // namespace ptrev
