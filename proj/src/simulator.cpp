#include "ptrev/simulator.hpp"

#include <string>

#include "ptrev/error.hpp"

namespace ptrev {

std::map<NodeId, Signal> SimulationResult::by_name(const Netlist& n) const {
  std::map<NodeId, Signal> out;
  for (std::size_t i = 0; i < n.node_count(); ++i) out.emplace(n.nodes()[i], values.at(i));
  return out;
}

Assignment complete_assignment(const Netlist& n, const Assignment& partial) {
  Assignment a = partial;
  for (const auto& [node, value] : n.constants()) a.try_emplace(node, from_bit(value));
  for (const auto& input : n.inputs()) {
    auto it = a.find(input);
    if (it == a.end()) continue;
    const auto partner = n.rail_partner(input);
    if (partner && n.is_input(*partner) && !partial.count(*partner)) a.try_emplace(*partner, complement(it->second));
  }
  return a;
}

SimulationResult simulate(const Netlist& n, const Assignment& a) { return simulate(n, a, {}); }

SimulationResult simulate(const Netlist& n, const Assignment& a,
                          const std::function<void(const std::vector<Signal>&)>& on_sweep) {
  SimulationResult r;
  r.values.assign(n.node_count(), Signal::Z);

  for (const auto& [node, value] : a) {
    if (!n.has_node(node) || !n.is_input(node)) {
      throw Error(ErrorKind::InvalidAssignment, "'" + node + "' is not an input of this netlist");
    }
    r.values[n.node_index(node)] = value;
  }
  for (const auto& p : n.ports()) {
    if (p.kind == PortKind::Output) continue;
    auto it = a.find(p.node);
    if (it == a.end()) throw Error(ErrorKind::InvalidAssignment, "input '" + p.node + "' is unbound");
    if (p.kind == PortKind::ControlInput && !is_driven(it->second)) {
      throw Error(ErrorKind::InvalidAssignment, "control input '" + p.node + "' must be 0 or 1");
    }
    if (auto c = n.constant_value(p.node); c && it->second != from_bit(*c)) {
      throw Error(ErrorKind::InvalidAssignment, "constant input '" + p.node + "' bound to the wrong level");
    }
  }

  // Each node can rise at most twice (Z -> driven -> X), so a change-free
  // sweep must come within 2|nodes| + 1 passes.
  const std::size_t limit = 2 * n.node_count() + 1;
  auto& v = r.values;
  for (bool changed = true; changed;) {
    if (r.sweeps == limit) throw Error(ErrorKind::Internal, "switch-level evaluation failed to converge");
    changed = false;
    ++r.sweeps;
    for (const auto& t : n.terminals()) {
      if (v[t.gate] != Signal::V1) continue;
      const Signal m = merge(v[t.source], v[t.drain]);
      if (v[t.source] != m || v[t.drain] != m) {
        v[t.source] = m;
        v[t.drain] = m;
        changed = true;
      }
    }
    if (on_sweep) on_sweep(v);
  }

  for (const auto& t : n.terminals()) {
    if (!is_driven(v[t.gate])) {
      throw Error(ErrorKind::FloatingGate, "gate node '" + n.nodes()[t.gate] + "' settles at " +
                                               std::string(1, to_char(v[t.gate])));
    }
  }
  return r;
}

std::vector<RailPair> rail_violations(const Netlist& n, const SimulationResult& r) {
  std::vector<RailPair> bad;
  for (const auto& rail : n.rail_pairs()) {
    const Signal p = r.at(n, rail.positive);
    const Signal q = r.at(n, rail.negative);
    if (!is_driven(p) || !is_driven(q) || p == q) bad.push_back(rail);
  }
  return bad;
}

namespace {

void check_inputs(const Netlist& n, const std::vector<NodeId>& primary_inputs, const std::vector<NodeId>& outputs) {
  if (primary_inputs.size() >= 32) throw Error(ErrorKind::InvalidArgument, "too many primary inputs to enumerate");
  for (const auto& in : primary_inputs) {
    if (!n.is_input(in)) throw Error(ErrorKind::InvalidArgument, "'" + in + "' is not an input");
  }
  for (const auto& out : outputs) n.node_index(out);
}

SimulationResult simulate_row(const Netlist& n, const std::vector<NodeId>& primary_inputs, std::uint64_t row) {
  const auto bits = to_bits(row, primary_inputs.size());
  Assignment partial;
  for (std::size_t i = 0; i < bits.size(); ++i) partial[primary_inputs[i]] = from_bit(bits[i]);
  return simulate(n, complete_assignment(n, partial));
}

}  // namespace

std::vector<std::vector<Signal>> signal_table(const Netlist& n, const std::vector<NodeId>& primary_inputs,
                                              const std::vector<NodeId>& outputs) {
  check_inputs(n, primary_inputs, outputs);
  std::vector<std::vector<Signal>> table;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << primary_inputs.size()); ++row) {
    const auto r = simulate_row(n, primary_inputs, row);
    auto& out = table.emplace_back();
    for (const auto& o : outputs) out.push_back(r.at(n, o));
  }
  return table;
}

TruthTable extract_truth_table(const Netlist& n, const std::vector<NodeId>& primary_inputs,
                               const std::vector<NodeId>& outputs) {
  const auto raw = signal_table(n, primary_inputs, outputs);
  std::vector<Bits> rows;
  rows.reserve(raw.size());
  for (std::size_t row = 0; row < raw.size(); ++row) {
    Bits bits;
    for (std::size_t j = 0; j < outputs.size(); ++j) {
      const Signal s = raw[row][j];
      if (s == Signal::Z || s == Signal::X) {
        const auto where = "output '" + outputs[j] + "' for inputs " +
                           bits_string(to_bits(row, primary_inputs.size()));
        if (s == Signal::Z) throw Error(ErrorKind::UndrivenOutput, where + " is undriven");
        throw Error(ErrorKind::OutputConflict, where + " is in conflict");
      }
      bits.push_back(s == Signal::V1 ? 1 : 0);
    }
    rows.push_back(std::move(bits));
  }
  return TruthTable(primary_inputs, outputs, std::move(rows));
}

TruthTable extract_truth_table(const Netlist& n) {
  return extract_truth_table(n, n.primary_inputs(), n.primary_outputs());
}

}  // namespace ptrev
