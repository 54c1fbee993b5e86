#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "ptrev/gate_kind.hpp"

namespace ptrev {

enum class Technology { Nmos, Cmos };

std::string_view technology_name(Technology t);

/// Transistor cost per gate kind for each technology. A missing entry means
/// the gate has no realization in that technology.
class TechLibrary {
 public:
  /// NMOS pass-transistor gates against the CMOS transmission-gate baseline.
  static const TechLibrary& standard();

  TechLibrary() = default;
  TechLibrary& set(GateKind k, Technology t, int transistors);

  std::optional<int> count(GateKind k, Technology t) const;

 private:
  std::map<std::pair<GateKind, Technology>, int> counts_;
};

/// Sum of per-gate counts. Throws Error(UnknownGateKind) when some gate has
/// no entry for `tech`.
int circuit_cost(std::span<const GateKind> gates, Technology tech,
                 const TechLibrary& lib = TechLibrary::standard());

}  // namespace ptrev
