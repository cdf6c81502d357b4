#include <cstdio>
#include <sstream>
#include <utility>

#include "hemforce/cli.hpp"
#include "hemforce/format.hpp"

namespace hemforce::cli {

using config::Json;

namespace {

double num(double v) { return fmt::round_significant(v, 12); }
double mm(Length l) { return num(to_millimeters(l)); }
double deg(Angle a) { return num(to_degrees(a)); }

std::string csv_num(double v) { return fmt::fixed_trimmed(v, 6); }

/// Two-column aligned plain text. Values are printed with 10 significant
/// digits so the human report never shows binary rounding noise.
class TextReport {
 public:
  explicit TextReport(std::string_view title) {
    out_ << kToolVersion << '\n' << title << '\n';
  }

  void section(std::string_view name) { out_ << '\n' << name << '\n'; }

  void row(std::string_view label, std::string value, std::string_view unit = {}) {
    std::string line = "  " + std::string(label);
    const std::size_t width = display_width(line);
    line.append(width < kLabelWidth ? kLabelWidth - width : 1, ' ');
    line += value;
    if (!unit.empty()) line += " " + std::string(unit);
    out_ << line << '\n';
  }

  void row(std::string_view label, double value, std::string_view unit = {}) {
    row(label, fmt::general(value, 10), unit);
  }

  std::string str() const { return out_.str(); }

 private:
  // Code points, not bytes: labels carry UTF-8 symbols such as '·'.
  static std::size_t display_width(std::string_view s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  }

  static constexpr std::size_t kLabelWidth = 34;
  std::ostringstream out_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json summary_json(const gauge::SeriesSummary& s) {
  Json j;
  j["sample_count"] = s.sample_count;
  j["peak_N"] = num(s.peak_force.si());
  j["peak_time_s"] = num(s.peak_time.si());
  j["mean_N"] = num(s.mean_force.si());
  j["final_N"] = num(s.final_force.si());
  return j;
}

void summary_rows(TextReport& t, const gauge::SeriesSummary& s) {
  t.row("samples", std::to_string(s.sample_count));
  t.row("peak force", s.peak_force.si(), "N");
  t.row("peak time", s.peak_time.si(), "s");
  t.row("mean force (time-weighted)", s.mean_force.si(), "N");
  t.row("final force", s.final_force.si(), "N");
}

}  // namespace

Analysis analyze(const config::ProjectConfig& cfg) {
  const core::GearSpec& gear = cfg.gear;
  Analysis a;
  a.rolling_coefficient = cfg.fabric.rolling_coefficient();
  a.coefficient_from_geometry = cfg.coefficient_from_geometry;
  a.weight = core::weight_of(gear.mass());
  a.normal = core::normal_force(a.weight);
  a.rolling_resistance =
      core::rolling_resistance_graded(a.rolling_coefficient, gear.mass(), cfg.fabric.gradient());
  a.hub_pull = core::hub_pull_force(a.rolling_resistance);
  a.drive_force = core::tangential_force_from_torque(cfg.motor_torque, gear.reference_diameter());
  a.transmission = core::transmission_force_for_tangential(a.drive_force, gear.pressure_angle());
  a.decomposition = core::decompose_transmission_force(a.transmission, gear.pressure_angle());
  a.feasibility = core::check_feasibility(a.drive_force, cfg.resistance);
  a.safety_factor = cfg.safety_factor;
  a.buffered_requirement = cfg.resistance.total() * cfg.safety_factor;
  a.buffered_margin = a.drive_force - a.buffered_requirement;
  a.meets_buffered_requirement = a.buffered_margin.si() > 0.0;
  a.min_torque_for_buffered = sizing::min_torque_for(gear.reference_diameter(), a.buffered_requirement);
  return a;
}

Json analysis_json(const config::ProjectConfig& cfg, const Analysis& a) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "analyze";

  Json& in = j["inputs"];
  in["gear"]["reference_diameter_mm"] = mm(cfg.gear.reference_diameter());
  in["gear"]["mass_kg"] = num(cfg.gear.mass().si());
  in["gear"]["contact_offset_mm"] = mm(cfg.gear.contact_offset());
  in["gear"]["pressure_angle_deg"] = deg(cfg.gear.pressure_angle());
  in["fabric"]["label"] = cfg.fabric.label();
  in["fabric"]["gradient_deg"] = deg(cfg.fabric.gradient());
  in["motor_torque_Nm"] = num(cfg.motor_torque.si());
  in["resistance"]["measured_N"] = num(cfg.resistance.total().si());
  in["resistance"]["provenance"] = cfg.resistance.provenance();

  Json& roll = j["rolling"];
  roll["coefficient"] = num(a.rolling_coefficient.si());
  roll["coefficient_source"] = a.coefficient_from_geometry ? "geometry" : "fabric";
  roll["weight_N"] = num(a.weight.si());
  roll["normal_force_N"] = num(a.normal.si());
  roll["rolling_resistance_N"] = num(a.rolling_resistance.si());
  roll["hub_pull_force_N"] = num(a.hub_pull.si());

  Json& drive = j["drive"];
  drive["tangential_force_N"] = num(a.drive_force.si());
  drive["transmission_force_N"] = num(a.transmission.si());
  drive["decomposition"]["tangential_N"] = num(a.decomposition.tangential.si());
  drive["decomposition"]["radial_N"] = num(a.decomposition.radial.si());
  drive["decomposition"]["axial_N"] = num(a.decomposition.axial.si());

  Json& feas = j["feasibility"];
  feas["delivered_N"] = num(a.feasibility.delivered.si());
  feas["resistance_N"] = num(a.feasibility.resistance.si());
  feas["margin_N"] = num(a.feasibility.margin.si());
  feas["feasible"] = a.feasibility.feasible;

  Json& buf = j["buffered"];
  buf["safety_factor"] = num(a.safety_factor);
  buf["required_force_N"] = num(a.buffered_requirement.si());
  buf["margin_N"] = num(a.buffered_margin.si());
  buf["meets_requirement"] = a.meets_buffered_requirement;
  buf["min_torque_Nm"] = num(a.min_torque_for_buffered.si());
  return j;
}

std::string analysis_text(const config::ProjectConfig& cfg, const Analysis& a) {
  TextReport t("analyze");
  t.section("inputs");
  t.row("reference diameter d", to_millimeters(cfg.gear.reference_diameter()), "mm");
  t.row("gear mass m", cfg.gear.mass().si(), "kg");
  t.row("contact offset a", to_millimeters(cfg.gear.contact_offset()), "mm");
  t.row("pressure angle", to_degrees(cfg.gear.pressure_angle()), "deg");
  t.row("fabric", cfg.fabric.label());
  t.row("surface gradient", to_degrees(cfg.fabric.gradient()), "deg");
  t.row("motor torque T", cfg.motor_torque.si(), "N·m");
  t.row("measured resistance", cfg.resistance.total().si(), "N");
  t.row("resistance provenance", cfg.resistance.provenance());

  t.section("rolling resistance");
  t.row("coefficient f", fmt::general(a.rolling_coefficient.si(), 10) +
                             (a.coefficient_from_geometry ? " (a/r_w)" : " (fabric)"));
  t.row("weight W = m·g", a.weight.si(), "N");
  t.row("normal force N", a.normal.si(), "N");
  t.row("rolling resistance F_rr", a.rolling_resistance.si(), "N");
  t.row("hub pull force F_p", a.hub_pull.si(), "N");

  t.section("drive");
  t.row("tangential force F_t1 = 2T/d", a.drive_force.si(), "N");
  t.row("transmission force F_n", a.transmission.si(), "N");
  t.row("tangential component F_t", a.decomposition.tangential.si(), "N");
  t.row("radial component F_r", a.decomposition.radial.si(), "N");
  t.row("axial component F_x", a.decomposition.axial.si(), "N");

  t.section("feasibility (F_t1 > resistance)");
  t.row("margin", a.feasibility.margin.si(), "N");
  t.row("verdict", a.feasibility.feasible ? "FEASIBLE" : "INFEASIBLE");

  t.section("buffered requirement");
  t.row("safety factor", a.safety_factor);
  t.row("required force", a.buffered_requirement.si(), "N");
  t.row("margin", a.buffered_margin.si(), "N");
  t.row("meets requirement", yes_no(a.meets_buffered_requirement));
  t.row("minimum torque at d", a.min_torque_for_buffered.si(), "N·m");
  return t.str();
}

std::string analysis_csv(const Analysis& a) {
  std::string out = "quantity,value,unit";
  auto line = [&](std::string_view q, double v, std::string_view unit) {
    out += "\n" + std::string(q) + "," + csv_num(v) + "," + std::string(unit);
  };
  line("rolling_coefficient", a.rolling_coefficient.si(), "1");
  line("weight", a.weight.si(), "N");
  line("normal_force", a.normal.si(), "N");
  line("rolling_resistance", a.rolling_resistance.si(), "N");
  line("hub_pull_force", a.hub_pull.si(), "N");
  line("tangential_force", a.drive_force.si(), "N");
  line("transmission_force", a.transmission.si(), "N");
  line("radial_force", a.decomposition.radial.si(), "N");
  line("axial_force", a.decomposition.axial.si(), "N");
  line("resistance", a.feasibility.resistance.si(), "N");
  line("margin", a.feasibility.margin.si(), "N");
  line("feasible", a.feasibility.feasible ? 1.0 : 0.0, "bool");
  line("safety_factor", a.safety_factor, "1");
  line("buffered_required_force", a.buffered_requirement.si(), "N");
  line("buffered_margin", a.buffered_margin.si(), "N");
  line("min_torque_for_buffered", a.min_torque_for_buffered.si(), "N·m");
  return out;
}

Ingestion ingest(const gauge::PullGaugeSeries& series, std::size_t n, double safety_factor,
                 std::string input_name) {
  auto resampled = gauge::resample_equally_spaced(series, n);
  auto original_summary = gauge::summarize(series);
  auto resampled_summary = gauge::summarize(resampled);
  const Force required = gauge::required_pull_force(original_summary, dimensionless(safety_factor));
  return Ingestion{
      .input_name = std::move(input_name),
      .original = series,
      .resampled = std::move(resampled),
      .original_summary = std::move(original_summary),
      .resampled_summary = std::move(resampled_summary),
      .safety_factor = safety_factor,
      .required_force = required,
  };
}

Json ingestion_json(const Ingestion& in) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "ingest";
  j["input"] = in.input_name;
  j["fabric_label"] = in.original.fabric_label();
  j["resample_n"] = in.resampled.size();
  j["resample_spacing_s"] =
      num((in.resampled.end().si() - in.resampled.start().si()) /
          static_cast<double>(in.resampled.size() - 1));
  j["original"] = summary_json(in.original_summary);
  j["resampled"] = summary_json(in.resampled_summary);
  j["measured_resistance_N"] = num(in.original_summary.peak_force.si());
  j["safety_factor"] = num(in.safety_factor);
  j["required_force_N"] = num(in.required_force.si());
  return j;
}

std::string ingestion_text(const Ingestion& in) {
  TextReport t("ingest");
  t.row("input", in.input_name);
  if (!in.original.fabric_label().empty()) t.row("fabric", in.original.fabric_label());
  t.section("original series");
  summary_rows(t, in.original_summary);
  t.section("resampled series");
  summary_rows(t, in.resampled_summary);
  t.section("requirement");
  t.row("measured resistance (peak)", in.original_summary.peak_force.si(), "N");
  t.row("safety factor", in.safety_factor);
  t.row("required pull force", in.required_force.si(), "N");
  return t.str();
}

Sizing size(const config::SizingInput& input) {
  Sizing s{.grid = sizing::evaluate_grid(input.request), .layout = input.eyelet, .eyelet = {}};
  if (input.eyelet) s.eyelet = sizing::eyelet_clearance_check(*input.eyelet);
  return s;
}

Json sizing_json(const Sizing& s) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "size";
  j["required_force_N"] = num(s.grid.required_force.si());
  j["margin_floor_N"] = num(s.grid.margin_floor.si());
  Json rows = Json::array();
  for (const auto& r : s.grid.rows) {
    Json row;
    row["d_mm"] = mm(r.diameter);
    row["T_Nm"] = num(r.torque.si());
    row["force_N"] = num(r.delivered.si());
    row["margin_N"] = num(r.margin.si());
    row["feasible"] = r.feasible;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json mins = Json::array();
  for (const auto& m : s.grid.min_torques) {
    Json row;
    row["d_mm"] = mm(m.diameter);
    row["min_torque_Nm"] = num(m.torque.si());
    mins.push_back(std::move(row));
  }
  j["min_torque"] = std::move(mins);
  if (s.eyelet) {
    Json& e = j["eyelet"];
    e["eyelet_diameter_mm"] = mm(s.layout->eyelet_diameter);
    e["band_mm"] = mm(s.layout->stitch_to_edge_band);
    e["placement_margin_mm"] = mm(s.layout->placement_margin);
    e["slack_mm"] = mm(s.eyelet->slack);
    e["fits"] = s.eyelet->fits;
  }
  return j;
}

std::string sizing_csv(const Sizing& s) {
  std::string out = "d_mm,T_Nm,force_N,margin_N,feasible";
  for (const auto& r : s.grid.rows) {
    out += "\n" + csv_num(to_millimeters(r.diameter)) + "," + csv_num(r.torque.si()) + "," +
           csv_num(r.delivered.si()) + "," + csv_num(r.margin.si()) + "," +
           (r.feasible ? "1" : "0");
  }
  return out;
}

std::string sizing_text(const Sizing& s) {
  TextReport t("size");
  t.row("required force", s.grid.required_force.si(), "N");
  t.row("margin floor", s.grid.margin_floor.si(), "N");
  t.section("grid (d, T -> force, margin)");
  for (const auto& r : s.grid.rows) {
    char label[64];
    std::snprintf(label, sizeof label, "d=%s mm T=%s N·m",
                  fmt::general(to_millimeters(r.diameter), 10).c_str(),
                  fmt::general(r.torque.si(), 10).c_str());
    t.row(label, fmt::general(r.delivered.si(), 10) + " N, margin " +
                     fmt::general(r.margin.si(), 10) + " N, " +
                     (r.feasible ? "feasible" : "infeasible"));
  }
  t.section("minimum torque per diameter");
  for (const auto& m : s.grid.min_torques)
    t.row("d=" + fmt::general(to_millimeters(m.diameter), 10) + " mm", m.torque.si(), "N·m");
  if (s.eyelet) {
    t.section("eyelet clearance");
    t.row("eyelet diameter", to_millimeters(s.layout->eyelet_diameter), "mm");
    t.row("stitch-to-edge band", to_millimeters(s.layout->stitch_to_edge_band), "mm");
    t.row("placement margin per side", to_millimeters(s.layout->placement_margin), "mm");
    t.row("slack", to_millimeters(s.eyelet->slack), "mm");
    t.row("fits", yes_no(s.eyelet->fits));
  }
  return t.str();
}

Json feed_json(const feed::FeedScenario& scenario, const feed::FeedResult& result) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = "simulate";
  j["drive_force_N"] = num(scenario.drive_force.si());
  j["cycles"] = scenario.cycles;
  j["nominal_advance_mm"] = mm(scenario.nominal_advance);
  j["resistance_model"] = std::visit(
      [](const auto& m) -> std::string {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, feed::ConstantResistance>) return "constant";
        else if constexpr (std::is_same_v<M, feed::SeriesResistance>) return "series";
        else return "constant_plus_noise";
      },
      scenario.resistance);
  j["slip_count"] = result.slip_count;
  j["slip_rate"] = num(result.slip_rate);
  j["mean_advance_mm"] = mm(result.mean_advance);
  j["advance_std_mm"] = mm(result.advance_std);
  j["total_advance_mm"] =
      num(to_millimeters(scenario.nominal_advance) *
          static_cast<double>(scenario.cycles - result.slip_count));
  return j;
}

std::string feed_csv(const feed::FeedResult& result) {
  std::string out = "cycle,advance_mm,slipped";
  for (std::size_t i = 0; i < result.advances.size(); ++i) {
    const bool slipped = result.advances[i].si() == 0.0;
    out += "\n" + std::to_string(i + 1) + "," + csv_num(to_millimeters(result.advances[i])) + "," +
           (slipped ? "1" : "0");
  }
  return out;
}

std::string feed_text(const feed::FeedScenario& scenario, const feed::FeedResult& result) {
  TextReport t("simulate");
  t.row("drive force F_t1", scenario.drive_force.si(), "N");
  t.row("cycles", std::to_string(scenario.cycles));
  t.row("nominal advance", to_millimeters(scenario.nominal_advance), "mm");
  t.section("result");
  t.row("slips", std::to_string(result.slip_count));
  t.row("slip rate", result.slip_rate);
  t.row("mean advance", to_millimeters(result.mean_advance), "mm");
  t.row("advance std", to_millimeters(result.advance_std), "mm");
  return t.str();
}

}  // namespace hemforce::cli
