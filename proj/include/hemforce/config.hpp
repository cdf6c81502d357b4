#pragma once

// JSON input documents. Lengths arrive in mm, angles in degrees, torques in
// N·m and forces in N; everything is converted to SI here and nowhere else.
// Unknown keys are rejected. Every error message starts with the JSON field
// path that caused it, e.g. "gear.reference_diameter_mm: must be > 0".

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hemforce/core_model.hpp"
#include "hemforce/feed_sim.hpp"
#include "hemforce/sizing.hpp"

namespace hemforce::config {

using Json = nlohmann::ordered_json;

struct ProjectConfig {
  core::GearSpec gear;
  core::FabricSurface fabric;
  bool coefficient_from_geometry = false;
  Torque motor_torque;
  core::MeasuredResistance resistance;
  double safety_factor = 1.5;
  std::size_t resample_n = 20;
  std::optional<std::filesystem::path> output_dir;
};

struct SizingInput {
  sizing::SizingRequest request;
  std::optional<sizing::EyeletLayout> eyelet;
};

/// Throws Error(Io) naming the path.
std::string read_text_file(const std::filesystem::path& path);

/// Throws Error(InvalidConfig) with the parser's position on malformed JSON.
Json parse_json(std::string_view text, std::string_view source);

/// `base_dir` resolves relative dataset paths (e.g. resistance.gauge_csv).
ProjectConfig load_project_config(const Json& doc, const std::filesystem::path& base_dir);
SizingInput load_sizing_input(const Json& doc);
feed::FeedScenario load_feed_scenario(const Json& doc, const std::filesystem::path& base_dir);

}  // namespace hemforce::config
