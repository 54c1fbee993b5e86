#pragma once

#include <cstdint>
#include <vector>

#include "ptrev/gate_kind.hpp"
#include "ptrev/netlist.hpp"
#include "ptrev/tech_library.hpp"
#include "ptrev/truth_table.hpp"

namespace ptrev {

struct FullAdderOutputs {
  std::uint8_t s = 0;   // sum
  std::uint8_t co = 0;  // carry out
  std::uint8_t g1 = 0;  // garbage, = a
  std::uint8_t g2 = 0;  // garbage, = a ^ b

  bool operator==(const FullAdderOutputs&) const = default;
};

/// Reversible full adder with preset input p. With p = 0, (co, s) is the
/// ordinary full adder; co is complemented when p = 1.
FullAdderOutputs full_adder_function(bool a, bool b, bool ci, bool p);

/// Reference table over (A, B, Ci, P) -> (S, Co, G1, G2).
TruthTable full_adder_reference_table();

/// Gate sequence of the reversible full adder, in cascade order.
std::vector<GateKind> full_adder_gates();

/// CCNOT(A,B,P) -> CNOT(A,B) -> CCNOT(A^B,Ci,P') -> CNOT(A^B,Ci).
/// Ports: inputs A B Ci (control) and P (pass); primary outputs S Co G1 G2,
/// where G1 is the A node itself. 28 transistors.
Netlist build_full_adder();

/// Four chained full adders with grounded presets. Primary inputs
/// a3..a0 b3..b0 cin, primary outputs cout s3..s0.
Netlist build_ripple4();

/// c_top | (s3 & (s1 | s2)): the sum needs a +6 correction.
bool correction_flag(bool c_top, bool s3, bool s2, bool s1);

/// NPG(s1,s2) -> CCNOT(s3, s1|s2, 0) -> NPG(c_top, ...). Primary inputs
/// c_top s3 s2 s1, primary output K.
Netlist build_correction_network();

/// Ripple adder, correction network, and a +0110 stage gated by K. Primary
/// inputs a3..a0 b3..b0 cin; primary outputs K d3 d2 d1 d0.
Netlist build_bcd_adder();

/// Gate list of the complete BCD netlist, top adder first.
std::vector<GateKind> bcd_adder_gates();

/// Two full adders, one CCNOT and two NPGs.
int bcd_reference_decomposition_cost(Technology tech, const TechLibrary& lib = TechLibrary::standard());

struct BcdDigitResult {
  int digit = 0;
  int carry = 0;

  bool operator==(const BcdDigitResult&) const = default;
};

/// Simulates build_bcd_adder on one digit pair. Throws Error(OutOfRange)
/// unless 0 <= a, b <= 9.
BcdDigitResult bcd_add_digit(int a, int b, bool cin);
/// Same, on any netlist with the BCD adder's port names.
BcdDigitResult bcd_add_digit(const Netlist& adder, int a, int b, bool cin);

struct RippleResult {
  int sum = 0;  // 0..15
  int carry = 0;
};

/// Simulates build_ripple4. Operands must be 0..15.
RippleResult ripple_add(int a, int b, bool cin);

}  // namespace ptrev
