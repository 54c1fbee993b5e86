#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string_view>
#include <vector>

#include "ptrev/netlist.hpp"
#include "ptrev/signal.hpp"
#include "ptrev/truth_table.hpp"

namespace ptrev {

using Assignment = std::map<NodeId, Signal>;

struct SimulationResult {
  std::vector<Signal> values;  // indexed like Netlist::nodes()
  std::size_t sweeps = 0;      // passes over the transistor list, including the final quiet one

  Signal at(const Netlist& n, std::string_view node) const { return values.at(n.node_index(node)); }
  std::map<NodeId, Signal> by_name(const Netlist& n) const;
};

/// Fills in what a caller normally leaves implicit: constant inputs, and the
/// complement rail of every bound input whose partner is an unbound input.
Assignment complete_assignment(const Netlist& n, const Assignment& partial);

/// Switch-level evaluation. Non-input nodes start at Z; every transistor
/// whose gate is V1 merges the values at its two channel ends until nothing
/// changes. The assignment must bind every input (control inputs to V0/V1
/// only) and nothing else.
///
/// Throws Error(InvalidAssignment) for a bad assignment and
/// Error(FloatingGate) if some transistor gate is not V0/V1 at the fixed
/// point.
SimulationResult simulate(const Netlist& n, const Assignment& a);

/// As above; `on_sweep` sees the node values after every sweep.
SimulationResult simulate(const Netlist& n, const Assignment& a,
                          const std::function<void(const std::vector<Signal>&)>& on_sweep);

/// Rail pairs whose two nodes are not complementary driven values.
std::vector<RailPair> rail_violations(const Netlist& n, const SimulationResult& r);

/// Raw output signals for each of the 2^k assignments of `primary_inputs`
/// (complement rails and constants auto-filled). Z and X are reported, not
/// rejected.
std::vector<std::vector<Signal>> signal_table(const Netlist& n, const std::vector<NodeId>& primary_inputs,
                                              const std::vector<NodeId>& outputs);

/// Exhaustive binary table. Throws Error(UndrivenOutput) or
/// Error(OutputConflict) naming the first offending row.
TruthTable extract_truth_table(const Netlist& n, const std::vector<NodeId>& primary_inputs,
                               const std::vector<NodeId>& outputs);
TruthTable extract_truth_table(const Netlist& n);

}  // namespace ptrev
