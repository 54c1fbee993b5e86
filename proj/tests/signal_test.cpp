#include "ptrev/signal.hpp"

#include <gtest/gtest.h>

#include "ptrev/error.hpp"

using namespace ptrev;

TEST(Signal, MergeExamples) {
  EXPECT_EQ(merge(Signal::Z, Signal::V1), Signal::V1);
  EXPECT_EQ(merge(Signal::V0, Signal::V0), Signal::V0);
  EXPECT_EQ(merge(Signal::V0, Signal::V1), Signal::X);
}

TEST(Signal, MergeIsASemilatticeJoin) {
  for (auto a : kAllSignals) {
    EXPECT_EQ(merge(a, a), a);
    EXPECT_EQ(merge(Signal::Z, a), a);
    EXPECT_EQ(merge(Signal::X, a), Signal::X);
    for (auto b : kAllSignals) {
      EXPECT_EQ(merge(a, b), merge(b, a));
      for (auto c : kAllSignals) EXPECT_EQ(merge(merge(a, b), c), merge(a, merge(b, c)));
    }
  }
  EXPECT_FALSE(lattice_leq(Signal::V0, Signal::V1));
  EXPECT_FALSE(lattice_leq(Signal::V1, Signal::V0));
}

TEST(Signal, PassThrough) {
  EXPECT_EQ(pass_through(Signal::V1, true), Signal::V1);
  EXPECT_EQ(pass_through(Signal::V1, false), Signal::Z);
  EXPECT_EQ(pass_through(Signal::Z, true), Signal::Z);
  for (auto y : kAllSignals) {
    EXPECT_EQ(pass_through(y, false), Signal::Z);
    EXPECT_EQ(pass_through(y, true), y);
  }
}

TEST(Signal, TextEncoding) {
  for (auto s : kAllSignals) EXPECT_EQ(parse_signal(std::string(1, to_char(s))), s);
  EXPECT_FALSE(parse_signal("2"));
  EXPECT_FALSE(parse_signal(""));
}

TEST(ThresholdGate, Decision) {
  EXPECT_EQ(threshold_decision(3, 2), 0);
  EXPECT_EQ(threshold_decision(1, 2), 1);
  EXPECT_EQ(threshold_decision(2, 2), 0);
}

TEST(ThresholdGate, AntitoneInLevel) {
  for (double t = -2; t <= 2; t += 0.5) {
    for (double y = -3; y <= 3; y += 0.25) {
      EXPECT_GE(threshold_decision(y, t), threshold_decision(y + 0.25, t));
    }
  }
}

TEST(Inverter, NmosFormula) {
  EXPECT_DOUBLE_EQ(nmos_inverter_vi({.k = 1, .vd = 1, .ve = 2}), 1.0);
  EXPECT_DOUBLE_EQ(nmos_inverter_vi({.k = 0.5, .vd = 2, .ve = 3}), 2.0);
  EXPECT_DOUBLE_EQ(nmos_inverter_vi({.k = 2, .vd = 0, .ve = 5}), 5.0);
}

TEST(Inverter, CmosFormula) {
  EXPECT_DOUBLE_EQ(cmos_inverter_vi({.k = 1, .vdd = 5, .vtp = -1, .vtn = 1}), 2.5);
  EXPECT_DOUBLE_EQ(cmos_inverter_vi({.k = 1, .vdd = 3, .vtp = 0, .vtn = 0}), 1.5);
  EXPECT_DOUBLE_EQ(cmos_inverter_vi({.k = 2, .vdd = 5, .vtp = -1, .vtn = 1}), 3.0);
}

TEST(Inverter, SymmetricCmosSwitchesAtHalfSupply) {
  for (double vdd : {1.0, 1.8, 3.3, 5.0}) {
    for (double vt : {0.0, 0.3, 0.7}) {
      EXPECT_DOUBLE_EQ(cmos_inverter_vi({.k = 1, .vdd = vdd, .vtp = -vt, .vtn = vt}), vdd / 2);
    }
  }
}

TEST(Inverter, RejectsNonPositiveGain) {
  EXPECT_THROW(cmos_inverter_vi({.k = 0, .vdd = 5}), Error);
  EXPECT_THROW(nmos_inverter_vi({.k = -1}), Error);
}

TEST(Landauer, Values) {
  // Oracle: 1.3806505e-23 * T * ln(2), evaluated in Python ahead of time.
  EXPECT_EQ(landauer_bound(0), 0.0);
  EXPECT_NEAR(landauer_bound(300), 2.8709820042410367e-21, 1e-30);
  EXPECT_NEAR(landauer_bound(1), 9.569940014136788e-24, 1e-33);
  EXPECT_NEAR(landauer_bound(300), 2.8718e-21, 1e-24);
  EXPECT_NEAR(landauer_bound(1), 9.5697e-24, 1e-27);
}

TEST(Landauer, LinearInTemperature) {
  for (double t : {0.5, 1.0, 77.0, 300.0, 4000.0}) EXPECT_DOUBLE_EQ(landauer_bound(2 * t), 2 * landauer_bound(t));
}

TEST(Landauer, RejectsNegativeTemperature) {
  try {
    landauer_bound(-1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}
