#include "ptrev/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptrev/error.hpp"

namespace ptrev {

char to_char(Signal s) noexcept {
  switch (s) {
    case Signal::V0: return '0';
    case Signal::V1: return '1';
    case Signal::Z: return 'Z';
    case Signal::X: return 'X';
  }
  return '?';
}

std::optional<Signal> parse_signal(std::string_view text) noexcept {
  if (text == "0") return Signal::V0;
  if (text == "1") return Signal::V1;
  if (text == "Z" || text == "z") return Signal::Z;
  if (text == "X" || text == "x") return Signal::X;
  return std::nullopt;
}

namespace {

void check_params(const InverterParams& p) {
  if (!(p.k > 0.0)) throw Error(ErrorKind::InvalidArgument, "inverter gain ratio k must be positive");
}

}  // namespace

double nmos_inverter_vi(const InverterParams& p) {
  check_params(p);
  return -p.k * p.vd + p.ve;
}

double cmos_inverter_vi(const InverterParams& p) {
  check_params(p);
  return (p.k * (p.vdd + p.vtp) + p.vtn) / (p.k + 1.0);
}

double landauer_bound(double kelvin) {
  if (!(kelvin >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "temperature must be non-negative, got " + std::to_string(kelvin));
  }
  return kBoltzmann * kelvin * std::numbers::ln2;
}

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnknownNode: return "unknown-node";
    case ErrorKind::DuplicateNode: return "duplicate-node";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::PortConflict: return "port-conflict";
    case ErrorKind::InvalidRail: return "invalid-rail";
    case ErrorKind::IncompleteBinding: return "incomplete-binding";
    case ErrorKind::UnknownGateKind: return "unknown-gate-kind";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::InvalidAssignment: return "invalid-assignment";
    case ErrorKind::FloatingGate: return "floating-gate";
    case ErrorKind::UndrivenOutput: return "undriven-output";
    case ErrorKind::OutputConflict: return "output-conflict";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::NotInjective: return "not-injective";
    case ErrorKind::NotInImage: return "not-in-image";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace ptrev
