#include "ptrev/adder_circuits.hpp"

#include <gtest/gtest.h>

#include "ptrev/error.hpp"
#include "ptrev/gate_library.hpp"
#include "ptrev/simulator.hpp"

using namespace ptrev;

namespace {

// Published reversible full-adder table: A B Ci P | SUM CARRY G1 G2.
const int kTable5[16][8] = {
    {0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0},
    {0, 1, 0, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 1, 0, 1}, {0, 1, 1, 0, 1, 0, 0, 1}, {0, 1, 1, 1, 0, 0, 0, 1},
    {1, 0, 0, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 1, 1, 1, 1}, {1, 0, 1, 0, 1, 0, 1, 1}, {1, 0, 1, 1, 0, 0, 1, 1},
    {1, 1, 0, 0, 1, 0, 1, 0}, {1, 1, 0, 1, 0, 0, 1, 0}, {1, 1, 1, 0, 1, 1, 1, 0}, {1, 1, 1, 1, 0, 1, 1, 0},
};

}  // namespace

TEST(FullAdderFunction, Examples) {
  EXPECT_EQ(full_adder_function(0, 1, 1, 0), (FullAdderOutputs{0, 1, 0, 1}));
  EXPECT_EQ(full_adder_function(0, 0, 0, 0), (FullAdderOutputs{0, 0, 0, 0}));
  EXPECT_EQ(full_adder_function(1, 1, 1, 1), (FullAdderOutputs{1, 0, 1, 0}));
}

TEST(FullAdderFunction, PublishedTableWithSumAndCarryColumnsSwapped) {
  for (const auto& row : kTable5) {
    const auto o = full_adder_function(row[0], row[1], row[2], row[3]);
    EXPECT_EQ(o.co, row[4]);
    EXPECT_EQ(o.s, row[5]);
    EXPECT_EQ(o.g1, row[6]);
    EXPECT_EQ(o.g2, row[7]);
  }
}

TEST(FullAdder, TwentyEightTransistors) {
  EXPECT_EQ(transistor_count(build_full_adder()), 28u);
  EXPECT_EQ(circuit_cost(full_adder_gates(), Technology::Nmos), 28);
  EXPECT_EQ(circuit_cost(full_adder_gates(), Technology::Cmos), 48);
}

TEST(FullAdder, SimulationMatchesReference) {
  const auto n = build_full_adder();
  EXPECT_EQ(n.primary_inputs(), (std::vector<NodeId>{"A", "B", "Ci", "P"}));
  EXPECT_EQ(n.primary_outputs(), (std::vector<NodeId>{"S", "Co", "A", "G2"}));
  const auto t = extract_truth_table(n);
  EXPECT_TRUE(t.same_mapping(full_adder_reference_table()));
}

TEST(FullAdder, IsABijection) {
  const auto t = extract_truth_table(build_full_adder());
  const auto report = is_reversible(t);
  EXPECT_TRUE(report.injective);
  EXPECT_EQ(report.inverse.size(), 16u);
  for (std::size_t r = 0; r < 16; ++r) EXPECT_EQ(reverse_evaluate(t, t.output(r)), t.input(r));
}

TEST(FullAdder, GroundedPresetAddsIntegers) {
  const auto t = extract_truth_table(build_full_adder());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int ci = 0; ci < 2; ++ci) {
        const auto& out = t.output(Bits{std::uint8_t(a), std::uint8_t(b), std::uint8_t(ci), 0});
        EXPECT_EQ(out[0] + 2 * out[1], a + b + ci);
        EXPECT_EQ(out[2], a);
        EXPECT_EQ(out[3], a ^ b);
      }
    }
  }
}

TEST(Ripple4, Examples) {
  EXPECT_EQ(ripple_add(0, 0, false).sum, 0);
  EXPECT_EQ(ripple_add(0, 0, false).carry, 0);
  EXPECT_EQ(ripple_add(0b1111, 0b0001, false).sum, 0);
  EXPECT_EQ(ripple_add(0b1111, 0b0001, false).carry, 1);
  EXPECT_EQ(ripple_add(0b0101, 0b0011, true).sum, 0b1001);
  EXPECT_EQ(ripple_add(0b0101, 0b0011, true).carry, 0);
}

TEST(Ripple4, ExhaustiveAgainstIntegerAddition) {
  const auto n = build_ripple4();
  EXPECT_EQ(transistor_count(n), 112u);
  const auto t = extract_truth_table(n);
  ASSERT_EQ(t.row_count(), 512u);
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    const auto a = int(r >> 5) & 15, b = int(r >> 1) & 15, cin = int(r & 1);
    EXPECT_EQ(int(from_bits(t.output(r))), a + b + cin) << a << "+" << b << "+" << cin;
  }
}

TEST(Ripple4, RejectsWideOperands) { EXPECT_THROW(ripple_add(16, 0, false), Error); }

TEST(Correction, FlagExamples) {
  EXPECT_TRUE(correction_flag(0, 1, 0, 1));
  EXPECT_TRUE(correction_flag(1, 0, 0, 0));
  EXPECT_FALSE(correction_flag(0, 1, 0, 0));
}

TEST(Correction, FlagMeansAtLeastTen) {
  for (int v = 0; v < 32; ++v) {
    const bool c = v >> 4, s3 = (v >> 3) & 1, s2 = (v >> 2) & 1, s1 = (v >> 1) & 1;
    EXPECT_EQ(correction_flag(c, s3, s2, s1), v >= 10) << v;
  }
}

TEST(Correction, NetworkMatchesFlag) {
  const auto n = build_correction_network();
  EXPECT_EQ(transistor_count(n), 18u);
  EXPECT_EQ(n.primary_inputs(), (std::vector<NodeId>{"c_top", "s3", "s2", "s1"}));
  const auto t = extract_truth_table(n);
  for (std::size_t r = 0; r < 16; ++r) {
    const auto in = t.input(r);
    EXPECT_EQ(t.output(r), Bits{std::uint8_t(correction_flag(in[0], in[1], in[2], in[3]))});
  }
}

TEST(BcdAdder, Examples) {
  EXPECT_EQ(bcd_add_digit(9, 8, false), (BcdDigitResult{7, 1}));
  EXPECT_EQ(bcd_add_digit(4, 4, false), (BcdDigitResult{8, 0}));
  EXPECT_EQ(bcd_add_digit(9, 9, true), (BcdDigitResult{9, 1}));
  EXPECT_EQ(bcd_add_digit(0, 0, false), (BcdDigitResult{0, 0}));
  EXPECT_EQ(bcd_add_digit(7, 6, false), (BcdDigitResult{3, 1}));
}

TEST(BcdAdder, AllDigitPairs) {
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= 9; ++b) {
      for (int cin = 0; cin <= 1; ++cin) {
        const auto r = bcd_add_digit(a, b, cin);
        EXPECT_LE(r.digit, 9);
        EXPECT_EQ(r.digit + 10 * r.carry, a + b + cin) << a << "+" << b << "+" << cin;
      }
    }
  }
}

TEST(BcdAdder, OperandRange) {
  for (auto [a, b] : {std::pair{10, 0}, std::pair{0, 10}, std::pair{-1, 3}}) {
    try {
      bcd_add_digit(a, b, false);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
  }
}

TEST(BcdAdder, Costs) {
  EXPECT_EQ(bcd_reference_decomposition_cost(Technology::Nmos), 74);
  EXPECT_THROW(bcd_reference_decomposition_cost(Technology::Cmos), Error);
  const auto n = build_bcd_adder();
  EXPECT_EQ(int(transistor_count(n)), circuit_cost(bcd_adder_gates(), Technology::Nmos));
  EXPECT_EQ(transistor_count(n), 190u);
  EXPECT_EQ(n.primary_inputs().size(), 9u);
  EXPECT_EQ(n.primary_outputs(), (std::vector<NodeId>{"K", "d3", "d2", "d1", "s0"}));
}
