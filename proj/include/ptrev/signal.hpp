#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace ptrev {

/// Switch-level logic value. Z (undriven) is the bottom of the join
/// semilattice, X (drive conflict) the top; V0 and V1 are incomparable.
enum class Signal : std::uint8_t { Z, V0, V1, X };

inline constexpr Signal kAllSignals[] = {Signal::Z, Signal::V0, Signal::V1, Signal::X};

constexpr Signal merge(Signal a, Signal b) noexcept {
  if (a == Signal::Z) return b;
  if (b == Signal::Z) return a;
  return a == b ? a : Signal::X;
}

/// A single pass transistor: the channel carries `y` while the control
/// bit is 1, and leaves the far side undriven otherwise.
constexpr Signal pass_through(Signal y, bool conducting) noexcept {
  return conducting ? y : Signal::Z;
}

constexpr bool is_driven(Signal s) noexcept { return s == Signal::V0 || s == Signal::V1; }

constexpr Signal from_bit(bool b) noexcept { return b ? Signal::V1 : Signal::V0; }

constexpr Signal complement(Signal s) noexcept {
  switch (s) {
    case Signal::V0: return Signal::V1;
    case Signal::V1: return Signal::V0;
    default: return s;
  }
}

/// Lattice order: a <= b iff merge(a, b) == b.
constexpr bool lattice_leq(Signal a, Signal b) noexcept { return merge(a, b) == b; }

char to_char(Signal s) noexcept;
std::optional<Signal> parse_signal(std::string_view text) noexcept;

/// Inverted threshold gate: 0 when level >= threshold, 1 below it.
constexpr int threshold_decision(double level, double threshold) noexcept {
  return level >= threshold ? 0 : 1;
}

struct InverterParams {
  double k = 1.0;    // gain ratio
  double vdd = 0.0;  // supply
  double vtp = 0.0;  // PMOS threshold
  double vtn = 0.0;  // NMOS threshold
  double vd = 0.0;   // NMOS-inverter coefficient terms
  double ve = 0.0;
};

// Inverting voltage of an NMOS inverter: -k*vd + ve.
double nmos_inverter_vi(const InverterParams& p);

// Inverting voltage of a CMOS inverter: (k*(vdd + vtp) + vtn) / (k + 1).
double cmos_inverter_vi(const InverterParams& p);

inline constexpr double kBoltzmann = 1.3806505e-23;  // J/K

/// Minimum energy in joules dissipated per irreversible bit operation at
/// `kelvin`. Throws Error(InvalidArgument) for negative temperatures.
double landauer_bound(double kelvin);

}  // namespace ptrev
