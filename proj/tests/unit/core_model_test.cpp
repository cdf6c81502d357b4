#include "hemforce/core_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/test_support.hpp"

namespace hemforce::core {
namespace {

using namespace hemforce::literals;
using hemforce::testing::Gen;
using hemforce::testing::rel_err;

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected hemforce::Error";
  return ErrorCode::Io;
}

TEST(GravityTest, IsFixedAt981) {
  EXPECT_EQ(gravitational_acceleration().si(), 9.81);
  EXPECT_EQ(rolling_resistance_flat(dimensionless(1), 1.0_kg).si(), 9.81);
}

TEST(RollingCoefficientTest, Examples) {
  EXPECT_EQ(rolling_coefficient_from_geometry(0.0_m, 0.020_m).si(), 0.0);
  EXPECT_NEAR(rolling_coefficient_from_geometry(0.002_m, 0.020_m).si(), 0.1, 1e-15);
}

TEST(RollingCoefficientTest, RejectsBadGeometry) {
  EXPECT_EQ(code_of([] { rolling_coefficient_from_geometry(0.020_m, 0.020_m); }),
            ErrorCode::OffsetExceedsRadius);
  EXPECT_EQ(code_of([] { rolling_coefficient_from_geometry(0.001_m, 0.0_m); }),
            ErrorCode::NonPositiveRadius);
  EXPECT_EQ(code_of([] { rolling_coefficient_from_geometry(meters(-0.001), 0.02_m); }),
            ErrorCode::NegativeOffset);
}

TEST(NormalForceTest, EqualsWeight) {
  EXPECT_EQ(normal_force(0.0_N).si(), 0.0);
  EXPECT_EQ(normal_force(19.62_N).si(), 19.62);
  EXPECT_NEAR(normal_force(weight_of(2.0_kg)).si(), 19.62, 1e-12);
  EXPECT_EQ(code_of([] { normal_force(newtons(-1)); }), ErrorCode::NegativeForce);
}

TEST(RollingResistanceTest, GeometricExamples) {
  EXPECT_EQ(rolling_resistance_geometric(0.0_m, 0.02_m, 50.0_N).si(), 0.0);
  EXPECT_NEAR(rolling_resistance_geometric(0.002_m, 0.020_m, 50.0_N).si(), 5.0, 1e-12);
}

TEST(RollingResistanceTest, FlatExamples) {
  EXPECT_EQ(rolling_resistance_flat(dimensionless(0.03), 0.0_kg).si(), 0.0);
  EXPECT_NEAR(rolling_resistance_flat(dimensionless(0.03), 2.0_kg).si(), 0.5886, 1e-12);
  EXPECT_EQ(code_of([] { rolling_resistance_flat(dimensionless(-0.1), 1.0_kg); }),
            ErrorCode::NegativeCoefficient);
  EXPECT_EQ(code_of([] { rolling_resistance_flat(dimensionless(0.1), kilograms(-1)); }),
            ErrorCode::NegativeMass);
}

TEST(RollingResistanceTest, GradedExamples) {
  const auto f = dimensionless(0.03);
  EXPECT_EQ(rolling_resistance_graded(f, 2.0_kg, 0.0_rad), rolling_resistance_flat(f, 2.0_kg));
  EXPECT_NEAR(rolling_resistance_graded(f, 2.0_kg, radians(std::numbers::pi / 3)).si(), 0.2943,
              1e-12);
  const double near_vertical = std::nextafter(std::numbers::pi / 2, 0.0);
  EXPECT_LT(rolling_resistance_graded(f, 2.0_kg, radians(near_vertical)).si(), 1e-15);
  EXPECT_EQ(code_of([] { rolling_resistance_graded(dimensionless(0.1), 1.0_kg, 90.0_deg); }),
            ErrorCode::GradientOutOfRange);
  EXPECT_EQ(code_of([] { rolling_resistance_graded(dimensionless(0.1), 1.0_kg, radians(-0.1)); }),
            ErrorCode::GradientOutOfRange);
}

TEST(HubPullForceTest, EqualsRollingResistance) {
  EXPECT_EQ(hub_pull_force(0.0_N).si(), 0.0);
  EXPECT_EQ(hub_pull_force(5.0_N).si(), 5.0);
  EXPECT_NEAR(hub_pull_force(rolling_resistance_flat(dimensionless(0.1), 5.0_kg)).si(), 4.905,
              1e-12);
  EXPECT_EQ(code_of([] { hub_pull_force(newtons(-0.5)); }), ErrorCode::NegativeForce);
}

TEST(DecompositionTest, Examples) {
  const auto zero = decompose_transmission_force(100.0_N, 0.0_rad);
  EXPECT_EQ(zero.tangential.si(), 100.0);
  EXPECT_EQ(zero.radial.si(), 0.0);
  EXPECT_EQ(zero.axial.si(), 0.0);

  // cos 20° = 0.9396926207859084, sin 20° = 0.3420201433256687
  const auto twenty = decompose_transmission_force(100.0_N, 20.0_deg);
  EXPECT_NEAR(twenty.tangential.si(), 93.96926207859084, 1e-12);
  EXPECT_NEAR(twenty.radial.si(), 34.20201433256687, 1e-12);
  EXPECT_EQ(twenty.axial.si(), 0.0);

  EXPECT_EQ(code_of([] { decompose_transmission_force(10.0_N, 90.0_deg); }),
            ErrorCode::PressureAngleOutOfRange);
}

TEST(DecompositionTest, TransmissionForInverse) {
  const Force fn = transmission_force_for_tangential(110.0_N, 20.0_deg);
  EXPECT_NEAR(decompose_transmission_force(fn, 20.0_deg).tangential.si(), 110.0, 1e-12);
}

TEST(TorqueTest, Examples) {
  EXPECT_NEAR(tangential_force_from_torque(2.2_Nm, 0.040_m).si(), 110.0, 1e-12);
  EXPECT_NEAR(tangential_force_from_torque(2.2_Nm, 40.0_mm).si(), 110.0, 1e-12);
  EXPECT_EQ(tangential_force_from_torque(0.0_Nm, 0.1_m).si(), 0.0);
  EXPECT_NEAR(tangential_force_from_torque(1.0_Nm, 0.050_m).si(), 40.0, 1e-12);
  EXPECT_EQ(code_of([] { tangential_force_from_torque(1.0_Nm, 0.0_m); }),
            ErrorCode::NonPositiveDiameter);
  EXPECT_EQ(code_of([] { tangential_force_from_torque(newton_meters(-1), 0.04_m); }),
            ErrorCode::NegativeTorque);
}

TEST(FeasibilityTest, Examples) {
  const MeasuredResistance measured(12.47_N, "experiment");
  const auto ok = check_feasibility(110.0_N, measured);
  EXPECT_TRUE(ok.feasible);
  EXPECT_NEAR(ok.margin.si(), 97.53, 1e-12);

  const auto short_by = check_feasibility(10.0_N, measured);
  EXPECT_FALSE(short_by.feasible);
  EXPECT_NEAR(short_by.margin.si(), -2.47, 1e-12);

  const auto equal = check_feasibility(12.47_N, measured);
  EXPECT_FALSE(equal.feasible);
  EXPECT_EQ(equal.margin.si(), 0.0);
}

TEST(DomainTypesTest, GearSpecInvariants) {
  EXPECT_NO_THROW(GearSpec(40.0_mm, 0.25_kg, 0.4_mm));
  EXPECT_EQ(GearSpec(40.0_mm, 0.25_kg, 0.4_mm).pressure_angle(), default_pressure_angle());
  EXPECT_EQ(GearSpec(40.0_mm, 0.25_kg, 0.4_mm).working_radius(), 20.0_mm);
  EXPECT_EQ(code_of([] { GearSpec(0.0_mm, 0.25_kg, 0.0_mm); }), ErrorCode::NonPositiveDiameter);
  EXPECT_EQ(code_of([] { GearSpec(40.0_mm, kilograms(-1), 0.0_mm); }), ErrorCode::NegativeMass);
  EXPECT_EQ(code_of([] { GearSpec(40.0_mm, 0.25_kg, 20.0_mm); }), ErrorCode::OffsetExceedsRadius);
  EXPECT_EQ(code_of([] { GearSpec(40.0_mm, 0.25_kg, 1.0_mm, 90.0_deg); }),
            ErrorCode::PressureAngleOutOfRange);
}

TEST(DomainTypesTest, FabricAndResistanceInvariants) {
  EXPECT_EQ(code_of([] { FabricSurface(dimensionless(-0.01), 0.0_rad, "x"); }),
            ErrorCode::NegativeCoefficient);
  EXPECT_EQ(code_of([] { FabricSurface(dimensionless(0.01), 95.0_deg, "x"); }),
            ErrorCode::GradientOutOfRange);
  EXPECT_EQ(code_of([] { MeasuredResistance(newtons(-1)); }), ErrorCode::NegativeForce);
  EXPECT_EQ(MeasuredResistance(1.0_N).provenance(), "manual");
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

TEST(CoreModelProperties, GeometricAndCoefficientPathsAgree) {
  Gen gen(1);
  for (int i = 0; i < 2000; ++i) {
    const Length r = meters(gen.log_uniform(1e-3, 1.0));
    const Length a = r * gen.uniform(0.0, 0.999);
    const Mass m = kilograms(gen.log_uniform(1e-3, 100.0));
    const double lhs = rolling_resistance_geometric(a, r, weight_of(m)).si();
    const double rhs = rolling_resistance_flat(a / r, m).si();
    ASSERT_LE(rel_err(lhs, rhs), 1e-12);
    ASSERT_EQ(rolling_resistance_graded(a / r, m, 0.0_rad).si(), rhs);
  }
}

TEST(CoreModelProperties, Monotonicity) {
  Gen gen(2);
  for (int i = 0; i < 500; ++i) {
    const double f = gen.uniform(0.001, 0.5);
    const double m = gen.uniform(0.01, 10.0);
    const double df = gen.uniform(1e-6, 0.1);
    const double dm = gen.uniform(1e-6, 1.0);
    EXPECT_LT(rolling_resistance_flat(dimensionless(f), kilograms(m)),
              rolling_resistance_flat(dimensionless(f + df), kilograms(m)));
    EXPECT_LT(rolling_resistance_flat(dimensionless(f), kilograms(m)),
              rolling_resistance_flat(dimensionless(f), kilograms(m + dm)));
    const double a1 = gen.uniform(0.01, 1.5);
    const double a2 = a1 + gen.uniform(1e-3, 1.5707 - a1);
    EXPECT_GT(rolling_resistance_graded(dimensionless(f), kilograms(m), radians(a1)),
              rolling_resistance_graded(dimensionless(f), kilograms(m), radians(a2)));
    const auto d1 = decompose_transmission_force(newtons(m * 10), radians(a1));
    const auto d2 = decompose_transmission_force(newtons(m * 10), radians(a2));
    EXPECT_GT(d1.tangential, d2.tangential);
    EXPECT_LT(d1.radial, d2.radial);
  }
}

TEST(CoreModelProperties, DecompositionPythagoras) {
  Gen gen(3);
  for (int i = 0; i < 2000; ++i) {
    const double fn = gen.log_uniform(1e-3, 1e4);
    const auto d = decompose_transmission_force(newtons(fn), radians(gen.uniform(0.0, 1.5707)));
    const double t = d.tangential.si();
    const double r = d.radial.si();
    ASSERT_LE(rel_err(t * t + r * r, fn * fn), 1e-12);
    ASSERT_EQ(d.axial.si(), 0.0);
  }
}

TEST(CoreModelProperties, TorqueLinearity) {
  Gen gen(4);
  for (int i = 0; i < 2000; ++i) {
    const Torque t = newton_meters(gen.log_uniform(1e-3, 100.0));
    const Length d = meters(gen.log_uniform(1e-3, 1.0));
    const double k = gen.uniform(0.0, 50.0);
    const double base = tangential_force_from_torque(t, d).si();
    ASSERT_LE(rel_err(tangential_force_from_torque(k * t, d).si(), k * base), 1e-12);
    ASSERT_LE(rel_err(tangential_force_from_torque(t, d / 2.0).si(), 2.0 * base), 1e-12);
  }
}

TEST(CoreModelProperties, VerdictIndependentOfBoundaryUnits) {
  Gen gen(5);
  for (int i = 0; i < 1000; ++i) {
    const double d_mm = static_cast<double>(gen.integer(5, 200));
    const double torque = gen.uniform(0.0, 5.0);
    const MeasuredResistance r(newtons(gen.uniform(0.0, 200.0)));
    const auto via_mm = check_feasibility(
        tangential_force_from_torque(newton_meters(torque), millimeters(d_mm)), r);
    const auto via_m = check_feasibility(
        tangential_force_from_torque(newton_meters(torque), meters(d_mm / 1000.0)), r);
    ASSERT_EQ(via_mm.feasible, via_m.feasible);
    ASSERT_EQ(via_mm.margin, via_m.margin);
  }
}

}  // namespace
}  // namespace hemforce::core
