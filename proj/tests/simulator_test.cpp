#include "ptrev/simulator.hpp"

#include <gtest/gtest.h>

#include "ptrev/error.hpp"
#include "ptrev/gate_library.hpp"
#include "test_util.hpp"

using namespace ptrev;
using namespace ptrev::testing;
using ptrev::testing::channels_reversed;
using ptrev::testing::shipped_circuits;
using ptrev::testing::shuffled;

namespace {

Netlist single_switch() {
  return NetlistBuilder()
      .node("g").node("y").node("z")
      .control_input("g").pass_input("y").output("z")
      .transistor("g", "y", "z")
      .build();
}

// Two conducting switches drive one node from opposite sources.
Netlist fight() {
  return NetlistBuilder()
      .node("g").node("a").node("b").node("m")
      .control_input("g").pass_input("a").pass_input("b").output("m")
      .transistor("g", "a", "m")
      .transistor("g", "b", "m")
      .build();
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected ptrev::Error";
  return ErrorKind::Internal;
}

}  // namespace

TEST(Simulate, ConductingSwitchPassesValue) {
  const auto n = single_switch();
  const auto r = simulate(n, {{"g", Signal::V1}, {"y", Signal::V1}});
  EXPECT_EQ(r.at(n, "z"), Signal::V1);
}

TEST(Simulate, OpenSwitchLeavesOutputUndriven) {
  const auto n = single_switch();
  const auto r = simulate(n, {{"g", Signal::V0}, {"y", Signal::V1}});
  EXPECT_EQ(r.at(n, "z"), Signal::Z);
}

TEST(Simulate, OpposingDriversConflict) {
  // Hand trace, sweep by sweep:
  //   1: t1 merges (a=0, m=Z) -> a=m=0; t2 merges (b=1, m=0) -> b=m=X
  //   2: t1 merges (a=0, m=X) -> a=X
  //   3: quiet
  const auto n = fight();
  const auto r = simulate(n, {{"g", Signal::V1}, {"a", Signal::V0}, {"b", Signal::V1}});
  EXPECT_EQ(r.at(n, "m"), Signal::X);
  EXPECT_EQ(r.at(n, "a"), Signal::X);
  EXPECT_EQ(r.at(n, "b"), Signal::X);
  EXPECT_EQ(r.sweeps, 3u);
}

TEST(Simulate, SweepsOnlyRaiseNodeValues) {
  const auto n = fight();
  std::vector<Signal> previous;
  simulate(n, {{"g", Signal::V1}, {"a", Signal::V0}, {"b", Signal::V1}}, [&](const std::vector<Signal>& v) {
    if (!previous.empty()) {
      for (std::size_t i = 0; i < v.size(); ++i) EXPECT_TRUE(lattice_leq(previous[i], v[i]));
    }
    previous = v;
  });
  EXPECT_FALSE(previous.empty());
}

TEST(Simulate, FloatingGateIsAnError) {
  const auto n = NetlistBuilder()
                     .node("g").node("y").node("z")
                     .pass_input("y").output("z")
                     .transistor("g", "y", "z")
                     .build();
  EXPECT_EQ(kind_of([&] { simulate(n, {{"y", Signal::V1}}); }), ErrorKind::FloatingGate);
}

TEST(Simulate, ConflictingGateIsAnError) {
  // The fight node m gates a third switch.
  const auto n = NetlistBuilder(fight()).node("q").transistor("m", "a", "q").build();
  EXPECT_EQ(kind_of([&] { simulate(n, {{"g", Signal::V1}, {"a", Signal::V0}, {"b", Signal::V1}}); }),
            ErrorKind::FloatingGate);
}

TEST(Simulate, AssignmentValidation) {
  const auto n = single_switch();
  EXPECT_EQ(kind_of([&] { simulate(n, {{"g", Signal::V1}}); }), ErrorKind::InvalidAssignment);
  EXPECT_EQ(kind_of([&] { simulate(n, {{"g", Signal::Z}, {"y", Signal::V1}}); }), ErrorKind::InvalidAssignment);
  EXPECT_EQ(kind_of([&] { simulate(n, {{"g", Signal::V1}, {"y", Signal::V1}, {"z", Signal::V0}}); }),
            ErrorKind::InvalidAssignment);
  EXPECT_EQ(kind_of([&] { simulate(n, {{"g", Signal::V1}, {"y", Signal::V1}, {"nope", Signal::V0}}); }),
            ErrorKind::InvalidAssignment);
  // Pass inputs may float.
  EXPECT_EQ(simulate(n, {{"g", Signal::V1}, {"y", Signal::Z}}).at(n, "z"), Signal::Z);
}

TEST(Simulate, ConstantsAreEnforced) {
  const auto n = NetlistBuilder().node("k").pass_input("k").constant("k", true).build();
  EXPECT_EQ(complete_assignment(n, {}).at("k"), Signal::V1);
  EXPECT_EQ(kind_of([&] { simulate(n, {{"k", Signal::V0}}); }), ErrorKind::InvalidAssignment);
}

TEST(Simulate, CompleteAssignmentFillsComplements) {
  const auto n = build_gate(GateKind::Cnot);
  const auto a = complete_assignment(n, {{"A", Signal::V1}, {"B", Signal::V0}});
  EXPECT_EQ(a.at("A_n"), Signal::V0);
  EXPECT_EQ(a.at("B_n"), Signal::V1);
  // An explicit complement is kept as given.
  EXPECT_EQ(complete_assignment(n, {{"A", Signal::V1}, {"A_n", Signal::V1}}).at("A_n"), Signal::V1);
}

TEST(Simulate, CnotWalkthroughAOneBOne) {
  const auto n = build_gate(GateKind::Cnot);
  const auto r = simulate(n, complete_assignment(n, {{"A", Signal::V1}, {"B", Signal::V1}}));
  EXPECT_EQ(r.at(n, "A"), Signal::V1);
  EXPECT_EQ(r.at(n, "A_n"), Signal::V0);
  EXPECT_EQ(r.at(n, "Q"), Signal::V0);
  EXPECT_EQ(r.at(n, "Q_n"), Signal::V1);
}

TEST(Simulate, CnotRunsBackwardsAtSwitchLevel) {
  // Drive P and Q and read B back out through the same bidirectional switches.
  const auto forward = build_gate(GateKind::Cnot);
  NetlistBuilder b;
  for (const auto& node : forward.nodes()) b.node(node);
  for (const auto& r : forward.rail_pairs()) b.rail(r.positive, r.negative);
  b.control_input("A").control_input("A_n").pass_input("Q").pass_input("Q_n");
  b.output("A").output("A_n").output("B").output("B_n");
  for (const auto& t : forward.transistors()) b.transistor(t.gate, t.source, t.drain);
  const auto reverse = std::move(b).build();

  const auto fwd = extract_truth_table(forward);
  const auto back = extract_truth_table(reverse);
  EXPECT_EQ(back.input_labels(), (std::vector<NodeId>{"A", "Q"}));
  EXPECT_EQ(back.output_labels(), (std::vector<NodeId>{"A", "B"}));
  for (std::size_t r = 0; r < fwd.row_count(); ++r) EXPECT_EQ(back.output(fwd.output(r)), fwd.input(r));
}

TEST(TruthTable, CnotMatchesTableOne) {
  const auto t = extract_truth_table(build_gate(GateKind::Cnot));
  const std::vector<Bits> expected{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  EXPECT_EQ(t.rows(), expected);
  EXPECT_EQ(t.input_labels(), (std::vector<NodeId>{"A", "B"}));
  EXPECT_EQ(t.output_labels(), (std::vector<NodeId>{"A", "Q"}));
}

TEST(TruthTable, NotIsARailSwap) {
  const auto t = extract_truth_table(build_gate(GateKind::Not));
  EXPECT_EQ(t.rows(), (std::vector<Bits>{{1}, {0}}));
}

TEST(TruthTable, FredkinMatchesTableThree) {
  const auto t = extract_truth_table(build_gate(GateKind::Fredkin));
  const std::vector<Bits> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                   {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}};
  EXPECT_EQ(t.rows(), expected);
}

TEST(TruthTable, UndrivenAndConflictingOutputsAreRejected) {
  const auto open = single_switch();
  EXPECT_EQ(signal_table(open, {"g", "y"}, {"z"})[3][0], Signal::V1);
  EXPECT_EQ(signal_table(open, {"g", "y"}, {"z"})[0][0], Signal::Z);
  EXPECT_EQ(kind_of([&] { extract_truth_table(open); }), ErrorKind::UndrivenOutput);

  const auto always_on = NetlistBuilder(fight()).constant("g", true).build();
  EXPECT_EQ(always_on.primary_inputs(), (std::vector<NodeId>{"a", "b"}));
  EXPECT_EQ(signal_table(always_on, {"a", "b"}, {"m"})[1][0], Signal::X);
  EXPECT_EQ(kind_of([&] { extract_truth_table(always_on); }), ErrorKind::OutputConflict);
}

TEST(TruthTable, FormatsAlignedAndMachineRows) {
  const auto t = extract_truth_table(build_gate(GateKind::Cnot)).relabeled({"A", "B"}, {"P", "Q"});
  EXPECT_EQ(format_table(t), "A B | P Q\n0 0 | 0 0\n0 1 | 0 1\n1 0 | 1 1\n1 1 | 1 0\n");
  EXPECT_EQ(format_rows(t), "00 -> 00\n01 -> 01\n10 -> 11\n11 -> 10\n");
}

TEST(SimulatorProperties, ConfluentUnderTransistorShuffles) {
  std::mt19937 rng(2024);
  for (const auto& [name, n] : shipped_circuits()) {
    if (name == "bcdadder" || name == "ripple4") continue;  // covered by the acceptance suite
    const auto assignments = all_assignments(n);
    std::vector<std::vector<Signal>> baseline;
    for (const auto& a : assignments) baseline.push_back(simulate(n, a).values);
    for (int s = 0; s < 100; ++s) {
      const auto m = shuffled(n, rng);
      for (std::size_t i = 0; i < assignments.size(); ++i) {
        ASSERT_EQ(simulate(m, assignments[i]).values, baseline[i]) << name << " shuffle " << s;
      }
    }
  }
}

TEST(SimulatorProperties, ChannelDirectionIsIrrelevant) {
  for (const auto& [name, n] : shipped_circuits()) {
    const auto m = channels_reversed(n);
    for (const auto& a : all_assignments(n)) EXPECT_EQ(simulate(m, a).values, simulate(n, a).values) << name;
  }
}

TEST(SimulatorProperties, ShippedCircuitsStayClean) {
  for (const auto& [name, n] : shipped_circuits()) {
    for (const auto& a : all_assignments(n)) {
      const auto r = simulate(n, a);
      EXPECT_LE(r.sweeps, 3 * n.node_count()) << name;
      EXPECT_TRUE(rail_violations(n, r).empty()) << name;
      for (auto v : r.values) EXPECT_NE(v, Signal::X) << name;
      for (const auto& o : n.outputs()) EXPECT_TRUE(is_driven(r.at(n, o))) << name << " " << o;
    }
  }
}
