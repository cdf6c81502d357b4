#pragma once

// Motor/gear sizing against a required pulling force, plus the eyelet
// clearance check for the hem band the stitching has to pass.

#include <optional>
#include <vector>

#include "hemforce/quantity.hpp"

namespace hemforce::sizing {

struct SizingRequest {
  Force required_force;
  std::vector<Length> diameters;
  std::vector<Torque> torques;
  Force margin_floor = newtons(0.0);
};

struct SizingRow {
  Length diameter;
  Torque torque;
  Force delivered;
  Force margin;  // delivered - required_force
  bool feasible = false;  // margin > margin_floor
  friend bool operator==(const SizingRow&, const SizingRow&) = default;
};

struct MinTorque {
  Length diameter;
  Torque torque;
  friend bool operator==(const MinTorque&, const MinTorque&) = default;
};

struct SizingResult {
  Force required_force;
  Force margin_floor;
  std::vector<SizingRow> rows;         // by diameter, then torque, ascending
  std::vector<MinTorque> min_torques;  // one per distinct diameter, ascending
};

/// T = (d/2)·F. Because the feasibility inequality is strict, this torque is
/// the infimum: exactly this torque leaves zero margin.
Torque min_torque_for(Length reference_diameter, Force required_force);

/// Throws EmptyCandidates, NonPositiveDiameter, NegativeTorque or NegativeForce.
void validate(const SizingRequest& request);

SizingResult evaluate_grid(const SizingRequest& request);

struct EyeletLayout {
  Length eyelet_diameter;
  Length stitch_to_edge_band;
  Length placement_margin = meters(0.0);  // per side
};

struct EyeletVerdict {
  bool fits = false;
  Length slack;  // band - (diameter + 2·margin), signed
};

/// The largest eyelet the hem band has to accommodate.
constexpr Length max_eyelet_diameter() { return millimeters(13.0); }

EyeletVerdict eyelet_clearance_check(const EyeletLayout& layout);

}  // namespace hemforce::sizing
