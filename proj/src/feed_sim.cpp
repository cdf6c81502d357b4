#include "hemforce/feed_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace hemforce::feed {

namespace {

class ResistanceSampler {
 public:
  explicit ResistanceSampler(const ResistanceModel& model) : model_(model) {
    if (const auto* noisy = std::get_if<NoisyResistance>(&model_)) engine_.seed(noisy->seed);
  }

  Force next(std::int64_t cycle) {
    return std::visit(
        [&](const auto& m) -> Force {
          using M = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<M, ConstantResistance>) {
            return m.level;
          } else if constexpr (std::is_same_v<M, SeriesResistance>) {
            return m.levels[static_cast<std::size_t>(cycle) % m.levels.size()];
          } else {
            const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
            const double r = m.base.si() + m.amplitude.si() * (2.0 * u - 1.0);
            return newtons(std::max(r, 0.0));
          }
        },
        model_);
  }

 private:
  const ResistanceModel& model_;
  std::mt19937_64 engine_;
};

void require_non_negative(Force f, const char* what) {
  if (f.si() < 0.0) throw Error(ErrorCode::NegativeForce, std::string(what) + " must be >= 0 N");
}

}  // namespace

SeriesResistance SeriesResistance::from_series(const gauge::PullGaugeSeries& series) {
  SeriesResistance out;
  out.levels.reserve(series.size());
  for (const auto& s : series.samples()) out.levels.push_back(s.force);
  return out;
}

void validate(const FeedScenario& scenario) {
  if (scenario.cycles < 1)
    throw Error(ErrorCode::BadCycleCount,
                "cycles must be >= 1, got " + std::to_string(scenario.cycles));
  if (scenario.nominal_advance.si() <= 0.0)
    throw Error(ErrorCode::BadAdvance, "nominal advance must be > 0");
  require_non_negative(scenario.drive_force, "drive force");
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, ConstantResistance>) {
          require_non_negative(m.level, "resistance");
        } else if constexpr (std::is_same_v<M, SeriesResistance>) {
          if (m.levels.empty()) throw Error(ErrorCode::SeriesEmpty, "resistance series is empty");
          for (Force f : m.levels) require_non_negative(f, "series resistance");
        } else {
          require_non_negative(m.base, "noise base");
          require_non_negative(m.amplitude, "noise amplitude");
        }
      },
      scenario.resistance);
}

FeedResult simulate_feed(const FeedScenario& scenario) {
  validate(scenario);

  const auto cycles = static_cast<std::size_t>(scenario.cycles);
  FeedResult result;
  result.advances.reserve(cycles);
  result.resistances.reserve(cycles);

  ResistanceSampler sampler(scenario.resistance);
  const Length none = meters(0.0);
  for (std::int64_t c = 0; c < scenario.cycles; ++c) {
    const Force r = sampler.next(c);
    result.resistances.push_back(r);
    if (scenario.drive_force > r) {
      result.advances.push_back(scenario.nominal_advance);
    } else {
      result.advances.push_back(none);
      ++result.slip_count;
    }
  }

  const auto n = static_cast<double>(scenario.cycles);
  const auto advanced = static_cast<double>(scenario.cycles - result.slip_count);
  result.slip_rate = static_cast<double>(result.slip_count) / n;
  const double mean = advanced * scenario.nominal_advance.si() / n;
  double sq = 0.0;
  for (Length a : result.advances) sq += (a.si() - mean) * (a.si() - mean);
  result.mean_advance = meters(mean);
  result.advance_std = meters(std::sqrt(sq / n));
  return result;
}

std::vector<FeedResult> sweep(const std::vector<FeedScenario>& scenarios) {
  if (scenarios.empty()) throw Error(ErrorCode::EmptyList, "sweep needs at least one scenario");
  std::vector<FeedResult> out;
  out.reserve(scenarios.size());
  for (const auto& s : scenarios) out.push_back(simulate_feed(s));
  return out;
}

}  // namespace hemforce::feed
