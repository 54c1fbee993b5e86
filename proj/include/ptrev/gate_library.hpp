#pragma once

#include <map>
#include <vector>

#include "ptrev/gate_kind.hpp"
#include "ptrev/netlist.hpp"
#include "ptrev/truth_table.hpp"

namespace ptrev {

/// Logical behaviour of each gate, inputs and outputs MSB-first:
///   NOT     A       -> (!A)
///   CNOT    A B     -> (A, A^B)
///   CCNOT   A B C   -> (A, B, (A&B)^C)
///   FREDKIN A B C   -> (A, !A&B | A&C, !A&C | A&B)
///   NPG     A B     -> (A, A|B)
/// Throws Error(ArityMismatch) on a wrongly sized input.
Bits gate_function(GateKind k, const Bits& inputs);

std::vector<std::string> gate_input_labels(GateKind k);
std::vector<std::string> gate_output_labels(GateKind k);

/// Dual-rail NMOS pass-transistor realization. Inputs are named A, B, C with
/// complements A_n, ...; outputs that equal an input (P = A) reuse that
/// input's nodes, the others are Q, R. Primary ports line up with
/// gate_input_labels / gate_output_labels.
Netlist build_gate(GateKind k);

/// Table of gate_function, labelled like the textbook tables (A B | P Q).
TruthTable reference_table(GateKind k);
/// Table obtained by switch-level simulation of build_gate, same labels.
TruthTable simulated_table(GateKind k);

struct Collision {
  Bits output;
  std::vector<Bits> preimages;  // ascending
};

struct ReversibilityReport {
  bool injective = false;
  std::vector<Collision> collisions;  // ascending by output
  std::map<Bits, Bits> inverse;       // filled only when injective
};

ReversibilityReport is_reversible(const TruthTable& t);

/// Unique preimage of `outputs`. Throws Error(NotInjective) or
/// Error(NotInImage).
Bits reverse_evaluate(const TruthTable& t, const Bits& outputs);

}  // namespace ptrev
