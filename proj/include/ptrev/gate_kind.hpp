#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace ptrev {

enum class GateKind { Not, Cnot, Ccnot, Fredkin, Npg };

inline constexpr GateKind kAllGateKinds[] = {GateKind::Not, GateKind::Cnot, GateKind::Ccnot, GateKind::Fredkin,
                                             GateKind::Npg};

/// Lowercase CLI name: not, cnot, ccnot, fredkin, npg.
std::string_view gate_name(GateKind k);
/// Long display name used in cost reports.
std::string_view gate_title(GateKind k);
std::optional<GateKind> parse_gate_kind(std::string_view name);

std::size_t gate_input_arity(GateKind k);
std::size_t gate_output_arity(GateKind k);

}  // namespace ptrev
