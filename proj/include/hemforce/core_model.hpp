#pragma once

// Closed-form statics of a fabric-pulling spur gear: rolling resistance on the
// fabric, spur-gear force decomposition, torque-to-force conversion and the
// drive feasibility verdict. Everything here is a pure function of immutable
// values.

#include <string>

#include "hemforce/quantity.hpp"

namespace hemforce::core {

/// Fixed at 9.81 m/s² so the worked numbers reproduce exactly.
constexpr Acceleration gravitational_acceleration() { return meters_per_second_squared(9.81); }

/// Pressure angle used when a configuration does not state one.
constexpr Angle default_pressure_angle() { return degrees(20.0); }

class GearSpec {
 public:
  /// Throws on d <= 0, negative mass, a outside [0, d/2) or α₁ outside [0, π/2).
  GearSpec(Length reference_diameter, Mass mass, Length contact_offset,
           Angle pressure_angle = default_pressure_angle());

  Length reference_diameter() const noexcept { return diameter_; }
  Length working_radius() const noexcept { return diameter_ / 2.0; }
  Mass mass() const noexcept { return mass_; }
  Length contact_offset() const noexcept { return offset_; }
  Angle pressure_angle() const noexcept { return pressure_angle_; }

 private:
  Length diameter_;
  Mass mass_;
  Length offset_;
  Angle pressure_angle_;
};

class FabricSurface {
 public:
  FabricSurface(Dimensionless rolling_coefficient, Angle gradient, std::string label);

  Dimensionless rolling_coefficient() const noexcept { return coefficient_; }
  Angle gradient() const noexcept { return gradient_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Dimensionless coefficient_;
  Angle gradient_;
  std::string label_;
};

/// Components of a tooth transmission force. Spur gears carry no axial load,
/// so `axial` is always exactly zero.
struct ForceDecomposition {
  Force tangential;
  Force radial;
  Force axial;
};

/// Lumped force opposing the drive gear (fabric rolling resistance plus the
/// driven gear's tangential reaction), as measured by a pull gauge.
class MeasuredResistance {
 public:
  MeasuredResistance(Force total, std::string provenance = "manual");

  Force total() const noexcept { return total_; }
  const std::string& provenance() const noexcept { return provenance_; }

 private:
  Force total_;
  std::string provenance_;
};

struct FeasibilityReport {
  Force delivered;
  Force resistance;
  Force margin;  // delivered - resistance, signed
  bool feasible = false;
};

Dimensionless rolling_coefficient_from_geometry(Length contact_offset, Length working_radius);

/// Vertical equilibrium: the fabric pushes back with the full weight.
Force normal_force(Force weight);

Force weight_of(Mass mass);

Force rolling_resistance_geometric(Length contact_offset, Length working_radius, Force weight);
Force rolling_resistance_flat(Dimensionless coefficient, Mass mass);
Force rolling_resistance_graded(Dimensionless coefficient, Mass mass, Angle gradient);

/// Horizontal equilibrium: the hub must push with exactly the rolling resistance.
Force hub_pull_force(Force rolling_resistance);

ForceDecomposition decompose_transmission_force(Force transmission, Angle pressure_angle);

/// Inverse of the tangential part of the decomposition: the tooth-normal force
/// whose tangential component equals `tangential`.
Force transmission_force_for_tangential(Force tangential, Angle pressure_angle);

/// W_t = 2T/d. The drive gear's delivered pulling force F_t1 equals W_t.
Force tangential_force_from_torque(Torque torque, Length reference_diameter);

/// Strict inequality: a zero margin is infeasible.
FeasibilityReport check_feasibility(Force delivered, const MeasuredResistance& resistance);

}  // namespace hemforce::core
