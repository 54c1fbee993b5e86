#include "ptrev/gate_library.hpp"

#include <string>
#include <tuple>

#include "ptrev/error.hpp"
#include "ptrev/simulator.hpp"

namespace ptrev {

Bits gate_function(GateKind k, const Bits& in) {
  if (in.size() != gate_input_arity(k)) {
    throw Error(ErrorKind::ArityMismatch, std::string(gate_name(k)) + " takes " +
                                              std::to_string(gate_input_arity(k)) + " inputs, got " +
                                              std::to_string(in.size()));
  }
  const auto bit = [](bool b) -> std::uint8_t { return b ? 1 : 0; };
  switch (k) {
    case GateKind::Not:
      return {bit(!in[0])};
    case GateKind::Cnot:
      return {in[0], bit(in[0] != in[1])};
    case GateKind::Ccnot:
      return {in[0], in[1], bit((in[0] && in[1]) != bool(in[2]))};
    case GateKind::Fredkin:
      return in[0] ? Bits{in[0], in[2], in[1]} : Bits{in[0], in[1], in[2]};
    case GateKind::Npg:
      return {in[0], bit(in[0] || in[1])};
  }
  return {};
}

std::vector<std::string> gate_input_labels(GateKind k) {
  switch (gate_input_arity(k)) {
    case 1: return {"A"};
    case 2: return {"A", "B"};
    default: return {"A", "B", "C"};
  }
}

std::vector<std::string> gate_output_labels(GateKind k) {
  switch (gate_output_arity(k)) {
    case 1: return {"P"};
    case 2: return {"P", "Q"};
    default: return {"P", "Q", "R"};
  }
}

namespace {

std::string bar(const std::string& node) { return complement_name(node); }

Netlist build_not() {
  // Crossing the rails inverts; no devices.
  NetlistBuilder b;
  b.rail_nodes("A").pass_input("A").pass_input(bar("A"));
  b.output(bar("A")).output("A");
  return std::move(b).build();
}

Netlist build_cnot() {
  NetlistBuilder b;
  b.rail_nodes("A").rail_nodes("B").rail_nodes("Q");
  b.control_input("A").control_input(bar("A")).pass_input("B").pass_input(bar("B"));
  b.output("A").output(bar("A")).output("Q").output(bar("Q"));
  b.transistor(bar("A"), "B", "Q");
  b.transistor("A", bar("B"), "Q");
  b.transistor(bar("A"), bar("B"), bar("Q"));
  b.transistor("A", "B", bar("Q"));
  return std::move(b).build();
}

Netlist build_ccnot() {
  NetlistBuilder b;
  b.rail_nodes("A").rail_nodes("B").rail_nodes("C").rail_nodes("R");
  b.control_input("A").control_input(bar("A")).control_input("B").control_input(bar("B"));
  b.pass_input("C").pass_input(bar("C"));
  b.output("A").output(bar("A")).output("B").output(bar("B")).output("R").output(bar("R"));
  // R = C<~A> + C<A&~B> + C_n<A&B>; R_n mirrors it with the C rails swapped.
  using Mirror = std::tuple<std::string, std::string, std::string>;
  for (const auto& [o, keep, flip] : {Mirror{"R", "C", bar("C")}, Mirror{bar("R"), bar("C"), "C"}}) {
    b.node(o + ".keep").node(o + ".flip");
    b.transistor(bar("A"), keep, o);
    b.transistor("A", keep, o + ".keep");
    b.transistor(bar("B"), o + ".keep", o);
    b.transistor("A", flip, o + ".flip");
    b.transistor("B", o + ".flip", o);
  }
  return std::move(b).build();
}

Netlist build_fredkin() {
  NetlistBuilder b;
  b.rail_nodes("A").rail_nodes("B").rail_nodes("C").rail_nodes("Q").rail_nodes("R");
  b.control_input("A").control_input(bar("A"));
  b.pass_input("B").pass_input(bar("B")).pass_input("C").pass_input(bar("C"));
  b.output("A").output(bar("A")).output("Q").output(bar("Q")).output("R").output(bar("R"));
  for (const std::string suffix : {"", "_n"}) {
    const auto B = "B" + suffix, C = "C" + suffix, Q = "Q" + suffix, R = "R" + suffix;
    b.transistor(bar("A"), B, Q).transistor("A", C, Q);
    b.transistor(bar("A"), C, R).transistor("A", B, R);
  }
  return std::move(b).build();
}

Netlist build_npg() {
  NetlistBuilder b;
  b.rail_nodes("A").rail_nodes("B").rail_nodes("Q");
  b.control_input("A").control_input(bar("A")).pass_input("B").pass_input(bar("B"));
  b.output("A").output(bar("A")).output("Q").output(bar("Q"));
  // Q = A<A> + B<~A>
  b.transistor("A", "A", "Q").transistor(bar("A"), "B", "Q");
  b.transistor("A", bar("A"), bar("Q")).transistor(bar("A"), bar("B"), bar("Q"));
  return std::move(b).build();
}

}  // namespace

Netlist build_gate(GateKind k) {
  switch (k) {
    case GateKind::Not: return build_not();
    case GateKind::Cnot: return build_cnot();
    case GateKind::Ccnot: return build_ccnot();
    case GateKind::Fredkin: return build_fredkin();
    case GateKind::Npg: return build_npg();
  }
  throw Error(ErrorKind::UnknownGateKind, "unknown gate kind");
}

TruthTable reference_table(GateKind k) {
  return TruthTable::from_function(gate_input_labels(k), gate_output_labels(k),
                                   [k](const Bits& in) { return gate_function(k, in); });
}

TruthTable simulated_table(GateKind k) {
  return extract_truth_table(build_gate(k)).relabeled(gate_input_labels(k), gate_output_labels(k));
}

ReversibilityReport is_reversible(const TruthTable& t) {
  std::map<Bits, std::vector<Bits>> preimages;
  for (std::size_t r = 0; r < t.row_count(); ++r) preimages[t.output(r)].push_back(t.input(r));

  ReversibilityReport report;
  for (const auto& [out, ins] : preimages) {
    if (ins.size() > 1) report.collisions.push_back({out, ins});
  }
  report.injective = report.collisions.empty();
  if (report.injective) {
    for (const auto& [out, ins] : preimages) report.inverse.emplace(out, ins.front());
  }
  return report;
}

Bits reverse_evaluate(const TruthTable& t, const Bits& outputs) {
  const auto report = is_reversible(t);
  if (!report.injective) {
    throw Error(ErrorKind::NotInjective, "table is not injective; " + bits_tuple(report.collisions.front().output) +
                                             " has " + std::to_string(report.collisions.front().preimages.size()) +
                                             " preimages");
  }
  auto it = report.inverse.find(outputs);
  if (it == report.inverse.end()) {
    throw Error(ErrorKind::NotInImage, "output " + bits_tuple(outputs) + " is not produced by any input");
  }
  return it->second;
}

}  // namespace ptrev
