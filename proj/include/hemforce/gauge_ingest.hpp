#pragma once

// Pull-gauge recordings: CSV reader/writer, equal-spacing resampler and the
// summary statistics that feed the drive-feasibility check.
//
// CSV format: header line exactly `t_s,force_N`, then `<decimal>,<decimal>`
// rows. LF or CRLF line endings. Times are stopwatch seconds.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hemforce/core_model.hpp"
#include "hemforce/quantity.hpp"

namespace hemforce::gauge {

inline constexpr std::string_view kCsvHeader = "t_s,force_N";
inline constexpr std::size_t kDefaultResampleCount = 20;
inline constexpr double kDefaultSafetyFactor = 1.5;

struct Sample {
  Time t;
  Force force;
  friend bool operator==(const Sample&, const Sample&) = default;
};

class PullGaugeSeries {
 public:
  /// Throws TooFewSamples, NonMonotoneTime or NegativeForce.
  PullGaugeSeries(std::vector<Sample> samples, std::string fabric_label = {},
                  std::string source = {});

  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  const std::string& fabric_label() const noexcept { return fabric_label_; }
  const std::string& source() const noexcept { return source_; }

  Time start() const noexcept { return samples_.front().t; }
  Time end() const noexcept { return samples_.back().t; }

 private:
  std::vector<Sample> samples_;
  std::string fabric_label_;
  std::string source_;
};

struct SeriesSummary {
  Force peak_force;
  Time peak_time;
  Force mean_force;  // time-weighted (trapezoidal)
  Force final_force;
  std::size_t sample_count = 0;
  std::string source;
};

PullGaugeSeries parse_series(std::string_view csv_text, std::string fabric_label = {},
                             std::string source = {});

/// Canonical CSV: LF line endings, no trailing newline, numbers in fixed
/// notation with at most six decimals and trailing zeros trimmed.
std::string serialize_series(const PullGaugeSeries& series);

/// `n` samples at t₀ + k·(t_end − t₀)/(n−1), linearly interpolated. The first
/// and last samples are carried over unchanged.
PullGaugeSeries resample_equally_spaced(const PullGaugeSeries& series, std::size_t n);

/// Peak ties resolve to the earliest sample.
SeriesSummary summarize(const PullGaugeSeries& series);

Force required_pull_force(const SeriesSummary& summary, Dimensionless safety_factor);

/// The lumped resistance is the peak, not the mean.
core::MeasuredResistance to_measured_resistance(const SeriesSummary& summary);

}  // namespace hemforce::gauge
