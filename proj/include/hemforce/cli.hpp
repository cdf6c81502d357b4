#pragma once

// Command-line orchestration. `run` is the whole program; tools/hemforce.cpp
// only forwards argv and the standard streams so tests can drive every
// subcommand in-process.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hemforce/config.hpp"
#include "hemforce/core_model.hpp"
#include "hemforce/feed_sim.hpp"
#include "hemforce/gauge_ingest.hpp"
#include "hemforce/sizing.hpp"

namespace hemforce::cli {

inline constexpr std::string_view kToolVersion = "hemforce 0.1.0";
inline constexpr std::string_view kOutDirEnv = "HEMFORCE_OUT_DIR";

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInfeasible = 3,
};

enum class Format { Json, Csv, Text };

struct Analysis {
  Dimensionless rolling_coefficient;
  bool coefficient_from_geometry = false;
  Force weight;
  Force normal;
  Force rolling_resistance;
  Force hub_pull;
  Force drive_force;  // F_t1 = 2T/d
  Force transmission;
  core::ForceDecomposition decomposition;
  core::FeasibilityReport feasibility;
  double safety_factor = 1.0;
  Force buffered_requirement;  // resistance × safety factor
  Force buffered_margin;
  bool meets_buffered_requirement = false;
  Torque min_torque_for_buffered;
};

Analysis analyze(const config::ProjectConfig& cfg);

config::Json analysis_json(const config::ProjectConfig& cfg, const Analysis& a);
std::string analysis_text(const config::ProjectConfig& cfg, const Analysis& a);
std::string analysis_csv(const Analysis& a);

struct Ingestion {
  std::string input_name;
  gauge::PullGaugeSeries original;
  gauge::PullGaugeSeries resampled;
  gauge::SeriesSummary original_summary;
  gauge::SeriesSummary resampled_summary;
  double safety_factor = 1.0;
  Force required_force;  // from the original peak, which bounds the resampled one
};

Ingestion ingest(const gauge::PullGaugeSeries& series, std::size_t n, double safety_factor,
                 std::string input_name);

config::Json ingestion_json(const Ingestion& in);
std::string ingestion_text(const Ingestion& in);

struct Sizing {
  sizing::SizingResult grid;
  std::optional<sizing::EyeletLayout> layout;
  std::optional<sizing::EyeletVerdict> eyelet;
};

Sizing size(const config::SizingInput& input);

config::Json sizing_json(const Sizing& s);
std::string sizing_csv(const Sizing& s);
std::string sizing_text(const Sizing& s);

config::Json feed_json(const feed::FeedScenario& scenario, const feed::FeedResult& result);
std::string feed_csv(const feed::FeedResult& result);
std::string feed_text(const feed::FeedScenario& scenario, const feed::FeedResult& result);

/// Returns one of the ExitCode values, never anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hemforce::cli
