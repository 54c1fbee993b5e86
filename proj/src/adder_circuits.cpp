#include "ptrev/adder_circuits.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "ptrev/error.hpp"
#include "ptrev/gate_library.hpp"
#include "ptrev/simulator.hpp"

namespace ptrev {

namespace {

using PortMap = std::initializer_list<std::pair<const char*, std::string>>;

// Binds each listed child port and its complement rail.
std::map<NodeId, NodeId> dual_rail(PortMap ports) {
  std::map<NodeId, NodeId> b;
  for (const auto& [child, parent] : ports) {
    b.emplace(child, parent);
    b.emplace(complement_name(child), complement_name(parent));
  }
  return b;
}

void declare_rails(NetlistBuilder& b, std::initializer_list<std::string> names) {
  for (const auto& name : names) b.rail_nodes(name);
}

void control_rails(NetlistBuilder& b, const std::string& name) {
  b.control_input(name).control_input(complement_name(name));
}

void pass_rails(NetlistBuilder& b, const std::string& name) {
  b.pass_input(name).pass_input(complement_name(name));
}

void output_rails(NetlistBuilder& b, const std::string& name) {
  b.output(name).output(complement_name(name));
}

// A pass-input rail pair held at 0 / 1.
void grounded_rails(NetlistBuilder& b, const std::string& name, bool control = false) {
  b.rail_nodes(name);
  if (control) {
    control_rails(b, name);
  } else {
    pass_rails(b, name);
  }
  b.constant(name, false).constant(complement_name(name), true);
}

Netlist embed(const Netlist& parent, const Netlist& child, PortMap ports, const std::string& instance) {
  return instantiate(parent, child, dual_rail(ports), instance);
}

std::string idx(const char* stem, int i) { return stem + std::to_string(i); }

}  // namespace

FullAdderOutputs full_adder_function(bool a, bool b, bool ci, bool p) {
  const bool majority = (a && b) || (a && ci) || (b && ci);
  FullAdderOutputs o;
  o.s = (a != b) != ci;
  o.co = p != majority;
  o.g1 = a;
  o.g2 = a != b;
  return o;
}

TruthTable full_adder_reference_table() {
  return TruthTable::from_function({"A", "B", "Ci", "P"}, {"S", "Co", "G1", "G2"}, [](const Bits& in) {
    const auto o = full_adder_function(in[0], in[1], in[2], in[3]);
    return Bits{o.s, o.co, o.g1, o.g2};
  });
}

std::vector<GateKind> full_adder_gates() {
  return {GateKind::Ccnot, GateKind::Cnot, GateKind::Ccnot, GateKind::Cnot};
}

Netlist build_full_adder() {
  const auto ccnot = build_gate(GateKind::Ccnot);
  const auto cnot = build_gate(GateKind::Cnot);

  NetlistBuilder b;
  declare_rails(b, {"A", "B", "Ci", "P", "P1", "G2", "Co", "S"});
  control_rails(b, "A");
  control_rails(b, "B");
  control_rails(b, "Ci");
  pass_rails(b, "P");
  output_rails(b, "S");
  output_rails(b, "Co");
  output_rails(b, "A");
  output_rails(b, "G2");

  auto n = std::move(b).build();
  n = embed(n, ccnot, {{"A", "A"}, {"B", "B"}, {"C", "P"}, {"R", "P1"}}, "g0");
  n = embed(n, cnot, {{"A", "A"}, {"B", "B"}, {"Q", "G2"}}, "g1");
  n = embed(n, ccnot, {{"A", "G2"}, {"B", "Ci"}, {"C", "P1"}, {"R", "Co"}}, "g2");
  n = embed(n, cnot, {{"A", "G2"}, {"B", "Ci"}, {"Q", "S"}}, "g3");
  return n;
}

namespace {

// Shared by the ripple adder and the BCD adder: four full adders from
// a_i, b_i, carry chain c0 = cin .. c4 = cout, sums s_i, presets p_i = 0.
Netlist add_ripple_stage(NetlistBuilder b) {
  for (int i = 0; i < 4; ++i) {
    declare_rails(b, {idx("s", i), idx("g", i)});
    if (i > 0) declare_rails(b, {idx("c", i)});
    grounded_rails(b, idx("p", i));
  }
  declare_rails(b, {"cout"});

  const auto fa = build_full_adder();
  auto n = std::move(b).build();
  for (int i = 0; i < 4; ++i) {
    const std::string carry_in = i == 0 ? "cin" : idx("c", i);
    const std::string carry_out = i == 3 ? "cout" : idx("c", i + 1);
    n = embed(n,
              fa,
              {{"A", idx("a", i)},
               {"B", idx("b", i)},
               {"Ci", carry_in},
               {"P", idx("p", i)},
               {"S", idx("s", i)},
               {"Co", carry_out},
               {"G2", idx("g", i)}},
              idx("fa", i));
  }
  return n;
}

NetlistBuilder operand_inputs() {
  NetlistBuilder b;
  for (const char* stem : {"a", "b"}) {
    for (int i = 3; i >= 0; --i) {
      b.rail_nodes(idx(stem, i));
      control_rails(b, idx(stem, i));
    }
  }
  b.rail_nodes("cin");
  control_rails(b, "cin");
  return b;
}

}  // namespace

Netlist build_ripple4() {
  auto n = add_ripple_stage(operand_inputs());
  NetlistBuilder b(std::move(n));
  output_rails(b, "cout");
  for (int i = 3; i >= 0; --i) output_rails(b, idx("s", i));
  return std::move(b).build();
}

bool correction_flag(bool c_top, bool s3, bool s2, bool s1) { return c_top || (s3 && (s1 || s2)); }

Netlist build_correction_network() {
  NetlistBuilder b;
  declare_rails(b, {"c_top", "s3", "s2", "s1", "or12", "and3", "K"});
  for (const char* in : {"c_top", "s3", "s2", "s1"}) control_rails(b, in);
  grounded_rails(b, "k0");
  output_rails(b, "K");

  const auto npg = build_gate(GateKind::Npg);
  auto n = std::move(b).build();
  n = embed(n, npg, {{"A", "s1"}, {"B", "s2"}, {"Q", "or12"}}, "or");
  n = embed(n, build_gate(GateKind::Ccnot), {{"A", "s3"}, {"B", "or12"}, {"C", "k0"}, {"R", "and3"}}, "and");
  n = embed(n, npg, {{"A", "c_top"}, {"B", "and3"}, {"Q", "K"}}, "flag");
  return n;
}

Netlist build_bcd_adder() {
  auto n = add_ripple_stage(operand_inputs());

  NetlistBuilder b(std::move(n));
  declare_rails(b, {"K", "d3", "d2", "d1", "c5", "c6", "g5", "g6"});
  grounded_rails(b, "z1", true);
  grounded_rails(b, "z2");
  grounded_rails(b, "z3");
  grounded_rails(b, "k0");
  output_rails(b, "K");
  output_rails(b, "d3");
  output_rails(b, "d2");
  output_rails(b, "d1");
  output_rails(b, "s0");
  n = std::move(b).build();

  n = embed(n, build_correction_network(),
            {{"c_top", "cout"}, {"s3", "s3"}, {"s2", "s2"}, {"s1", "s1"}, {"k0", "k0"}, {"K", "K"}}, "flag");
  const auto fa = build_full_adder();
  n = embed(n, fa, {{"A", "s1"}, {"B", "K"}, {"Ci", "z1"}, {"P", "z2"}, {"S", "d1"}, {"Co", "c5"}, {"G2", "g5"}},
            "fix1");
  n = embed(n, fa, {{"A", "s2"}, {"B", "K"}, {"Ci", "c5"}, {"P", "z3"}, {"S", "d2"}, {"Co", "c6"}, {"G2", "g6"}},
            "fix2");
  n = embed(n, build_gate(GateKind::Cnot), {{"A", "c6"}, {"B", "s3"}, {"Q", "d3"}}, "fix3");
  return n;
}

std::vector<GateKind> bcd_adder_gates() {
  std::vector<GateKind> gates;
  const auto fa = full_adder_gates();
  for (int i = 0; i < 4; ++i) gates.insert(gates.end(), fa.begin(), fa.end());
  gates.insert(gates.end(), {GateKind::Npg, GateKind::Ccnot, GateKind::Npg});
  for (int i = 0; i < 2; ++i) gates.insert(gates.end(), fa.begin(), fa.end());
  gates.push_back(GateKind::Cnot);
  return gates;
}

int bcd_reference_decomposition_cost(Technology tech, const TechLibrary& lib) {
  const auto fa = full_adder_gates();
  const GateKind flag[] = {GateKind::Ccnot, GateKind::Npg, GateKind::Npg};
  return 2 * circuit_cost(fa, tech, lib) + circuit_cost(flag, tech, lib);
}

namespace {

std::vector<Signal> run_operands(const Netlist& n, int a, int b, bool cin, const std::vector<NodeId>& outputs) {
  Assignment partial;
  for (int i = 0; i < 4; ++i) {
    partial[idx("a", i)] = from_bit((a >> i) & 1);
    partial[idx("b", i)] = from_bit((b >> i) & 1);
  }
  partial["cin"] = from_bit(cin);
  const auto r = simulate(n, complete_assignment(n, partial));
  std::vector<Signal> out;
  for (const auto& o : outputs) {
    const Signal s = r.at(n, o);
    if (!is_driven(s)) {
      throw Error(s == Signal::Z ? ErrorKind::UndrivenOutput : ErrorKind::OutputConflict,
                  "output '" + o + "' settled at " + std::string(1, to_char(s)));
    }
    out.push_back(s);
  }
  return out;
}

int decode(const std::vector<Signal>& bits, std::size_t from) {
  int v = 0;
  for (std::size_t i = from; i < bits.size(); ++i) v = (v << 1) | (bits[i] == Signal::V1 ? 1 : 0);
  return v;
}

}  // namespace

BcdDigitResult bcd_add_digit(int a, int b, bool cin) {
  static const Netlist adder = build_bcd_adder();
  return bcd_add_digit(adder, a, b, cin);
}

BcdDigitResult bcd_add_digit(const Netlist& adder, int a, int b, bool cin) {
  if (a < 0 || a > 9 || b < 0 || b > 9) {
    throw Error(ErrorKind::OutOfRange, "BCD operands must be 0..9, got " + std::to_string(a) + " and " +
                                           std::to_string(b));
  }
  const std::vector<NodeId> outputs{"K", "d3", "d2", "d1", "s0"};
  const auto out = run_operands(adder, a, b, cin, outputs);
  return {decode(out, 1), out[0] == Signal::V1 ? 1 : 0};
}

RippleResult ripple_add(int a, int b, bool cin) {
  if (a < 0 || a > 15 || b < 0 || b > 15) {
    throw Error(ErrorKind::OutOfRange, "4-bit operands must be 0..15");
  }
  static const Netlist adder = build_ripple4();
  const auto out = run_operands(adder, a, b, cin, adder.primary_outputs());
  return {decode(out, 1), out[0] == Signal::V1 ? 1 : 0};
}

}  // namespace ptrev
