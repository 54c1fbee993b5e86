#include "ptrev/tech_library.hpp"

#include <string>

#include "ptrev/error.hpp"

namespace ptrev {

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::Not: return "not";
    case GateKind::Cnot: return "cnot";
    case GateKind::Ccnot: return "ccnot";
    case GateKind::Fredkin: return "fredkin";
    case GateKind::Npg: return "npg";
  }
  return "?";
}

std::string_view gate_title(GateKind k) {
  switch (k) {
    case GateKind::Not: return "NOT";
    case GateKind::Cnot: return "CONTROLLED NOT";
    case GateKind::Ccnot: return "CONTROLLED-CONTROLLED NOT";
    case GateKind::Fredkin: return "FREDKIN";
    case GateKind::Npg: return "NPG";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (auto k : kAllGateKinds) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

std::size_t gate_input_arity(GateKind k) {
  switch (k) {
    case GateKind::Not: return 1;
    case GateKind::Cnot:
    case GateKind::Npg: return 2;
    case GateKind::Ccnot:
    case GateKind::Fredkin: return 3;
  }
  return 0;
}

std::size_t gate_output_arity(GateKind k) { return gate_input_arity(k); }

std::string_view technology_name(Technology t) { return t == Technology::Nmos ? "NMOS" : "CMOS"; }

const TechLibrary& TechLibrary::standard() {
  static const TechLibrary lib = [] {
    TechLibrary l;
    l.set(GateKind::Not, Technology::Nmos, 0).set(GateKind::Not, Technology::Cmos, 0);
    l.set(GateKind::Cnot, Technology::Nmos, 4).set(GateKind::Cnot, Technology::Cmos, 8);
    l.set(GateKind::Ccnot, Technology::Nmos, 10).set(GateKind::Ccnot, Technology::Cmos, 16);
    l.set(GateKind::Fredkin, Technology::Nmos, 8).set(GateKind::Fredkin, Technology::Cmos, 16);
    // No CMOS baseline exists for NPG.
    l.set(GateKind::Npg, Technology::Nmos, 4);
    return l;
  }();
  return lib;
}

TechLibrary& TechLibrary::set(GateKind k, Technology t, int transistors) {
  if (transistors < 0) throw Error(ErrorKind::InvalidArgument, "transistor count must be non-negative");
  counts_[{k, t}] = transistors;
  return *this;
}

std::optional<int> TechLibrary::count(GateKind k, Technology t) const {
  auto it = counts_.find({k, t});
  if (it == counts_.end()) return std::nullopt;
  return it->second;
}

int circuit_cost(std::span<const GateKind> gates, Technology tech, const TechLibrary& lib) {
  int total = 0;
  for (auto g : gates) {
    auto c = lib.count(g, tech);
    if (!c) {
      throw Error(ErrorKind::UnknownGateKind, std::string(gate_name(g)) + " has no " +
                                                  std::string(technology_name(tech)) + " cost entry");
    }
    total += *c;
  }
  return total;
}

}  // namespace ptrev
