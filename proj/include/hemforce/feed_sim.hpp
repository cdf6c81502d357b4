#pragma once

// Stitch-cycle feed simulation. Each cycle samples a resistance and the
// fabric advances one nominal step only if the delivered tangential force
// strictly exceeds it; otherwise the cycle is a slip and advances nothing.

#include <cstdint>
#include <variant>
#include <vector>

#include "hemforce/gauge_ingest.hpp"
#include "hemforce/quantity.hpp"

namespace hemforce::feed {

struct ConstantResistance {
  Force level;
};

/// Cycles through `levels` in order, one level per stitch cycle, wrapping.
struct SeriesResistance {
  std::vector<Force> levels;

  static SeriesResistance from_series(const gauge::PullGaugeSeries& series);
};

/// base + U(−amplitude, +amplitude), floored at 0 N.
///
/// Frozen generator contract: std::mt19937_64 seeded with `seed`; each cycle
/// draws one 64-bit word x and maps it to u = (x >> 11) · 2⁻⁵³ ∈ [0, 1), then
/// r = base + amplitude · (2u − 1). The engine's output sequence is fixed by
/// the C++ standard and the mapping avoids std::uniform_real_distribution, so
/// a seed yields the same resistances on every platform.
struct NoisyResistance {
  Force base;
  Force amplitude;
  std::uint64_t seed = 0;
};

using ResistanceModel = std::variant<ConstantResistance, SeriesResistance, NoisyResistance>;

struct FeedScenario {
  Force drive_force;
  ResistanceModel resistance;
  std::int64_t cycles = 0;
  Length nominal_advance;
};

struct FeedResult {
  std::int64_t slip_count = 0;
  double slip_rate = 0.0;
  std::vector<Length> advances;
  std::vector<Force> resistances;  // sampled per cycle
  Length mean_advance;
  Length advance_std;  // population standard deviation

  friend bool operator==(const FeedResult&, const FeedResult&) = default;
};

/// Throws BadCycleCount, BadAdvance, NegativeForce or SeriesEmpty.
void validate(const FeedScenario& scenario);

FeedResult simulate_feed(const FeedScenario& scenario);

/// Element-wise simulate_feed; results keep input order. Throws EmptyList.
std::vector<FeedResult> sweep(const std::vector<FeedScenario>& scenarios);

}  // namespace hemforce::feed
