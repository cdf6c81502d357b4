#include "hemforce/core_model.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hemforce::core {

namespace {

constexpr double kQuarterTurn = std::numbers::pi / 2.0;

void require_non_negative(Force f, const char* what) {
  if (f.si() < 0.0) throw Error(ErrorCode::NegativeForce, std::string(what) + " must be >= 0 N");
}

void require_non_negative(Mass m) {
  if (m.si() < 0.0) throw Error(ErrorCode::NegativeMass, "mass must be >= 0 kg");
}

void require_non_negative(Dimensionless f) {
  if (f.si() < 0.0)
    throw Error(ErrorCode::NegativeCoefficient, "rolling coefficient must be >= 0");
}

bool in_quarter_turn(Angle a) { return a.radians() >= 0.0 && a.radians() < kQuarterTurn; }

void require_gradient(Angle a) {
  if (!in_quarter_turn(a))
    throw Error(ErrorCode::GradientOutOfRange, "surface gradient must lie in [0, 90) degrees");
}

void require_pressure_angle(Angle a) {
  if (!in_quarter_turn(a))
    throw Error(ErrorCode::PressureAngleOutOfRange, "pressure angle must lie in [0, 90) degrees");
}

void require_diameter(Length d) {
  if (d.si() <= 0.0)
    throw Error(ErrorCode::NonPositiveDiameter, "reference diameter must be > 0");
}

}  // namespace

GearSpec::GearSpec(Length reference_diameter, Mass mass, Length contact_offset,
                   Angle pressure_angle)
    : diameter_(reference_diameter),
      mass_(mass),
      offset_(contact_offset),
      pressure_angle_(pressure_angle) {
  require_diameter(diameter_);
  require_non_negative(mass_);
  // Reuses the coefficient checks: 0 <= a < r_w.
  rolling_coefficient_from_geometry(offset_, working_radius());
  require_pressure_angle(pressure_angle_);
}

FabricSurface::FabricSurface(Dimensionless rolling_coefficient, Angle gradient, std::string label)
    : coefficient_(rolling_coefficient), gradient_(gradient), label_(std::move(label)) {
  require_non_negative(coefficient_);
  require_gradient(gradient_);
}

MeasuredResistance::MeasuredResistance(Force total, std::string provenance)
    : total_(total), provenance_(std::move(provenance)) {
  require_non_negative(total_, "measured resistance");
}

Dimensionless rolling_coefficient_from_geometry(Length contact_offset, Length working_radius) {
  if (working_radius.si() <= 0.0)
    throw Error(ErrorCode::NonPositiveRadius, "gear working radius must be > 0");
  if (contact_offset.si() < 0.0)
    throw Error(ErrorCode::NegativeOffset, "contact offset must be >= 0");
  if (contact_offset >= working_radius)
    throw Error(ErrorCode::OffsetExceedsRadius, "contact offset must be smaller than the gear radius");
  return contact_offset / working_radius;
}

Force normal_force(Force weight) {
  require_non_negative(weight, "weight");
  return weight;
}

Force weight_of(Mass mass) {
  require_non_negative(mass);
  return mass * gravitational_acceleration();
}

Force rolling_resistance_geometric(Length contact_offset, Length working_radius, Force weight) {
  const Dimensionless f = rolling_coefficient_from_geometry(contact_offset, working_radius);
  return f.si() * normal_force(weight);
}

Force rolling_resistance_flat(Dimensionless coefficient, Mass mass) {
  require_non_negative(coefficient);
  return coefficient.si() * weight_of(mass);
}

Force rolling_resistance_graded(Dimensionless coefficient, Mass mass, Angle gradient) {
  require_gradient(gradient);
  return rolling_resistance_flat(coefficient, mass) * cos(gradient);
}

Force hub_pull_force(Force rolling_resistance) {
  require_non_negative(rolling_resistance, "rolling resistance");
  return rolling_resistance;
}

ForceDecomposition decompose_transmission_force(Force transmission, Angle pressure_angle) {
  require_non_negative(transmission, "transmission force");
  require_pressure_angle(pressure_angle);
  return ForceDecomposition{
      .tangential = transmission * cos(pressure_angle),
      .radial = transmission * sin(pressure_angle),
      .axial = newtons(0.0),
  };
}

Force transmission_force_for_tangential(Force tangential, Angle pressure_angle) {
  require_non_negative(tangential, "tangential force");
  require_pressure_angle(pressure_angle);
  return tangential / cos(pressure_angle);
}

Force tangential_force_from_torque(Torque torque, Length reference_diameter) {
  require_diameter(reference_diameter);
  if (torque.si() < 0.0) throw Error(ErrorCode::NegativeTorque, "torque must be >= 0 N·m");
  return 2.0 * torque / reference_diameter;
}

FeasibilityReport check_feasibility(Force delivered, const MeasuredResistance& resistance) {
  require_non_negative(delivered, "delivered force");
  const Force margin = delivered - resistance.total();
  return FeasibilityReport{
      .delivered = delivered,
      .resistance = resistance.total(),
      .margin = margin,
      .feasible = margin.si() > 0.0,
  };
}

}  // namespace hemforce::core
