#include "hemforce/sizing.hpp"

#include <algorithm>

#include "hemforce/core_model.hpp"

namespace hemforce::sizing {

Torque min_torque_for(Length reference_diameter, Force required_force) {
  if (reference_diameter.si() <= 0.0)
    throw Error(ErrorCode::NonPositiveDiameter, "reference diameter must be > 0");
  if (required_force.si() < 0.0)
    throw Error(ErrorCode::NegativeForce, "required force must be >= 0 N");
  return (reference_diameter / 2.0) * required_force;
}

void validate(const SizingRequest& request) {
  if (request.diameters.empty() || request.torques.empty())
    throw Error(ErrorCode::EmptyCandidates, "sizing needs at least one diameter and one torque");
  if (request.required_force.si() < 0.0)
    throw Error(ErrorCode::NegativeForce, "required force must be >= 0 N");
  if (request.margin_floor.si() < 0.0)
    throw Error(ErrorCode::NegativeForce, "margin floor must be >= 0 N");
  for (Length d : request.diameters)
    if (d.si() <= 0.0)
      throw Error(ErrorCode::NonPositiveDiameter, "candidate diameters must be > 0");
  for (Torque t : request.torques)
    if (t.si() < 0.0) throw Error(ErrorCode::NegativeTorque, "candidate torques must be >= 0 N·m");
}

SizingResult evaluate_grid(const SizingRequest& request) {
  validate(request);

  std::vector<Length> diameters = request.diameters;
  std::vector<Torque> torques = request.torques;
  std::stable_sort(diameters.begin(), diameters.end());
  std::stable_sort(torques.begin(), torques.end());

  SizingResult result{
      .required_force = request.required_force,
      .margin_floor = request.margin_floor,
      .rows = {},
      .min_torques = {},
  };
  result.rows.reserve(diameters.size() * torques.size());
  for (Length d : diameters) {
    for (Torque t : torques) {
      const Force delivered = core::tangential_force_from_torque(t, d);
      const Force margin = delivered - request.required_force;
      result.rows.push_back({d, t, delivered, margin, margin > request.margin_floor});
    }
  }

  const Force target = request.required_force + request.margin_floor;
  auto unique_end = std::unique(diameters.begin(), diameters.end());
  for (auto it = diameters.begin(); it != unique_end; ++it)
    result.min_torques.push_back({*it, min_torque_for(*it, target)});
  return result;
}

EyeletVerdict eyelet_clearance_check(const EyeletLayout& layout) {
  if (layout.eyelet_diameter.si() < 0.0 || layout.stitch_to_edge_band.si() < 0.0 ||
      layout.placement_margin.si() < 0.0)
    throw Error(ErrorCode::NegativeLength, "eyelet layout dimensions must be >= 0");
  const Length slack =
      layout.stitch_to_edge_band - (layout.eyelet_diameter + 2.0 * layout.placement_margin);
  return EyeletVerdict{.fits = slack.si() >= 0.0, .slack = slack};
}

}  // namespace hemforce::sizing
