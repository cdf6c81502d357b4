#include "hemforce/gauge_ingest.hpp"

#include <algorithm>
#include <utility>

#include "hemforce/format.hpp"

namespace hemforce::gauge {

namespace {

std::string line_prefix(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  // Trailing line terminators are tolerated; interior blank lines are not.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

PullGaugeSeries::PullGaugeSeries(std::vector<Sample> samples, std::string fabric_label,
                                 std::string source)
    : samples_(std::move(samples)),
      fabric_label_(std::move(fabric_label)),
      source_(std::move(source)) {
  if (samples_.size() < 2)
    throw Error(ErrorCode::TooFewSamples, "a pull-gauge series needs at least 2 samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i].force.si() < 0.0)
      throw Error(ErrorCode::NegativeForce,
                  "sample " + std::to_string(i) + ": force must be >= 0 N");
    if (i > 0 && !(samples_[i - 1].t < samples_[i].t))
      throw Error(ErrorCode::NonMonotoneTime,
                  "sample " + std::to_string(i) + ": time must be strictly increasing");
  }
}

PullGaugeSeries parse_series(std::string_view csv_text, std::string fabric_label,
                             std::string source) {
  if (csv_text.size() >= 3 && csv_text.substr(0, 3) == "\xEF\xBB\xBF") csv_text.remove_prefix(3);
  const auto lines = split_lines(csv_text);
  if (lines.empty()) throw Error(ErrorCode::EmptyInput, "input is empty");
  if (lines.front() != kCsvHeader)
    throw Error(ErrorCode::MalformedRow,
                line_prefix(1) + "header must be exactly '" + std::string(kCsvHeader) + "'");

  std::vector<Sample> samples;
  samples.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view row = lines[i];
    const std::size_t comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      throw Error(ErrorCode::MalformedRow, line_prefix(line_no) + "expected 2 columns");
    const auto t = fmt::parse_decimal(row.substr(0, comma));
    const auto f = fmt::parse_decimal(row.substr(comma + 1));
    if (!t || !f) throw Error(ErrorCode::MalformedRow, line_prefix(line_no) + "non-numeric field");
    if (*f < 0.0)
      throw Error(ErrorCode::NegativeForce, line_prefix(line_no) + "force must be >= 0 N");
    if (!samples.empty() && !(samples.back().t.si() < *t))
      throw Error(ErrorCode::NonMonotoneTime,
                  line_prefix(line_no) + "time must be strictly increasing");
    samples.push_back({seconds(*t), newtons(*f)});
  }
  if (samples.size() < 2)
    throw Error(ErrorCode::TooFewSamples,
                "need at least 2 samples, found " + std::to_string(samples.size()));
  return PullGaugeSeries(std::move(samples), std::move(fabric_label), std::move(source));
}

std::string serialize_series(const PullGaugeSeries& series) {
  std::string out(kCsvHeader);
  for (const Sample& s : series.samples()) {
    out += '\n';
    out += fmt::fixed_trimmed(s.t.si());
    out += ',';
    out += fmt::fixed_trimmed(s.force.si());
  }
  return out;
}

PullGaugeSeries resample_equally_spaced(const PullGaugeSeries& series, std::size_t n) {
  if (n < 2)
    throw Error(ErrorCode::BadSampleCount, "resample count must be >= 2, got " + std::to_string(n));
  const auto& in = series.samples();
  const double t0 = series.start().si();
  const double span = series.end().si() - t0;

  std::vector<Sample> out;
  out.reserve(n);
  out.push_back(in.front());
  std::size_t seg = 0;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double t = t0 + static_cast<double>(k) * span / static_cast<double>(n - 1);
    while (seg + 2 < in.size() && in[seg + 1].t.si() <= t) ++seg;
    const Sample& lo = in[seg];
    const Sample& hi = in[seg + 1];
    const double w = (t - lo.t.si()) / (hi.t.si() - lo.t.si());
    const double a = lo.force.si();
    const double b = hi.force.si();
    // Clamp to the bracketing samples so rounding can never overshoot them.
    const double f = std::clamp(a + (b - a) * w, std::min(a, b), std::max(a, b));
    out.push_back({seconds(t), newtons(f)});
  }
  out.push_back(in.back());
  return PullGaugeSeries(std::move(out), series.fabric_label(), series.source());
}

SeriesSummary summarize(const PullGaugeSeries& series) {
  const auto& s = series.samples();
  std::size_t peak = 0;
  double area = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].force > s[peak].force) peak = i;
    area += 0.5 * (s[i - 1].force.si() + s[i].force.si()) * (s[i].t.si() - s[i - 1].t.si());
  }
  const double duration = series.end().si() - series.start().si();
  return SeriesSummary{
      .peak_force = s[peak].force,
      .peak_time = s[peak].t,
      .mean_force = newtons(area / duration),
      .final_force = s.back().force,
      .sample_count = s.size(),
      .source = series.source(),
  };
}

Force required_pull_force(const SeriesSummary& summary, Dimensionless safety_factor) {
  if (!(safety_factor.si() >= 1.0))
    throw Error(ErrorCode::SafetyFactorBelowOne, "safety factor must be >= 1");
  return summary.peak_force * safety_factor.si();
}

core::MeasuredResistance to_measured_resistance(const SeriesSummary& summary) {
  return core::MeasuredResistance(summary.peak_force,
                                  summary.source.empty() ? "manual" : summary.source);
}

}  // namespace hemforce::gauge
