#include "hemforce/config.hpp"

#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "hemforce/format.hpp"
#include "hemforce/gauge_ingest.hpp"

namespace hemforce::config {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message,
                       ErrorCode code = ErrorCode::InvalidConfig) {
  throw Error(code, path + ": " + message);
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

/// Read-only view of a JSON object that has already been checked against an
/// allow-list of keys.
class Object {
 public:
  Object(const Json& j, std::string path, std::initializer_list<std::string_view> allowed)
      : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected a JSON object");
    for (const auto& [key, _] : j_.items()) {
      bool known = false;
      for (auto a : allowed) known = known || key == a;
      if (!known) fail(join(path_, key), "unknown key");
    }
  }

  bool has(std::string_view key) const { return j_.contains(std::string(key)); }
  std::string path(std::string_view key) const { return join(path_, key); }

  const Json& at(std::string_view key) const {
    if (!has(key)) fail(path(key), "missing required key");
    return j_.at(std::string(key));
  }

  double number(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_number()) fail(path(key), "expected a number");
    const double d = v.get<double>();
    if (!detail::is_finite(d)) fail(path(key), "must be finite");
    return d;
  }

  std::optional<double> optional_number(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  std::int64_t integer(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_number_integer()) fail(path(key), "expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
      fail(path(key), "integer out of range");
    return v.get<std::int64_t>();
  }

  std::uint64_t unsigned_integer(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_number_integer()) fail(path(key), "expected an integer");
    if (!v.is_number_unsigned() && v.get<std::int64_t>() < 0) fail(path(key), "must be >= 0");
    return v.get<std::uint64_t>();
  }

  std::string string(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_string()) fail(path(key), "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> optional_string(std::string_view key) const {
    if (!has(key)) return std::nullopt;
    return string(key);
  }

  std::vector<double> number_array(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_array()) fail(path(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = path(key) + "[" + std::to_string(i) + "]";
      if (!v[i].is_number()) fail(p, "expected a number");
      const double d = v[i].get<double>();
      if (!detail::is_finite(d)) fail(p, "must be finite");
      out.push_back(d);
    }
    return out;
  }

 private:
  const Json& j_;
  std::string path_;
};

std::string show(double v) { return " (got " + fmt::general(v) + ")"; }

double positive(const Object& o, std::string_view key) {
  const double v = o.number(key);
  if (!(v > 0.0)) fail(o.path(key), "must be > 0" + show(v));
  return v;
}

double non_negative(const Object& o, std::string_view key) {
  const double v = o.number(key);
  if (v < 0.0) fail(o.path(key), "must be >= 0" + show(v));
  return v;
}

double quarter_turn_degrees(const Object& o, std::string_view key, double fallback) {
  const double v = o.optional_number(key).value_or(fallback);
  if (!(v >= 0.0 && v < 90.0)) fail(o.path(key), "must lie in [0, 90) degrees" + show(v));
  return v;
}

gauge::PullGaugeSeries load_gauge_csv(const Object& o, std::string_view key,
                                      const std::filesystem::path& base_dir,
                                      const std::string& fabric_label) {
  const std::filesystem::path rel = o.string(key);
  const std::filesystem::path full = rel.is_absolute() ? rel : base_dir / rel;
  try {
    return gauge::parse_series(read_text_file(full), fabric_label, rel.filename().string());
  } catch (const Error& e) {
    fail(o.path(key), full.string() + ": " + e.what(), e.code());
  }
}

std::size_t resample_count(const Object& o, std::string_view key) {
  if (!o.has(key)) return gauge::kDefaultResampleCount;
  const std::int64_t n = o.integer(key);
  if (n < 2) fail(o.path(key), "must be >= 2" + show(static_cast<double>(n)),
                  ErrorCode::BadSampleCount);
  return static_cast<std::size_t>(n);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, path.string() + ": read failed");
  return std::move(buf).str();
}

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidConfig, std::string(source) + ": " + e.what());
  }
}

ProjectConfig load_project_config(const Json& doc, const std::filesystem::path& base_dir) {
  const Object root(doc, "",
                    {"gear", "fabric", "motor", "resistance", "safety_factor", "resample_n",
                     "output_dir"});

  const Object gear(root.at("gear"), "gear",
                    {"reference_diameter_mm", "mass_kg", "contact_offset_mm",
                     "pressure_angle_deg"});
  const double d_mm = positive(gear, "reference_diameter_mm");
  const double mass = non_negative(gear, "mass_kg");
  const double a_mm = non_negative(gear, "contact_offset_mm");
  if (!(a_mm < d_mm / 2.0))
    fail(gear.path("contact_offset_mm"), "must be smaller than half the reference diameter" +
                                             show(a_mm), ErrorCode::OffsetExceedsRadius);
  const double alpha1 = quarter_turn_degrees(gear, "pressure_angle_deg", 20.0);
  core::GearSpec spec(millimeters(d_mm), kilograms(mass), millimeters(a_mm), degrees(alpha1));

  const Object fabric(root.at("fabric"), "fabric", {"label", "rolling_coefficient", "gradient_deg"});
  const std::string label = fabric.optional_string("label").value_or("unlabeled");
  const bool from_geometry = !fabric.has("rolling_coefficient");
  const Dimensionless f =
      from_geometry
          ? core::rolling_coefficient_from_geometry(spec.contact_offset(), spec.working_radius())
          : dimensionless(non_negative(fabric, "rolling_coefficient"));
  const double gradient = quarter_turn_degrees(fabric, "gradient_deg", 0.0);
  core::FabricSurface surface(f, degrees(gradient), label);

  const Object motor(root.at("motor"), "motor", {"torque_Nm"});
  const Torque torque = newton_meters(non_negative(motor, "torque_Nm"));

  const Object res(root.at("resistance"), "resistance", {"measured_N", "provenance", "gauge_csv"});
  if (res.has("measured_N") == res.has("gauge_csv"))
    fail("resistance", "exactly one of 'measured_N' or 'gauge_csv' is required");
  std::optional<core::MeasuredResistance> resistance;
  if (res.has("measured_N")) {
    resistance.emplace(newtons(non_negative(res, "measured_N")),
                       res.optional_string("provenance").value_or("manual"));
  } else {
    if (res.has("provenance")) fail(res.path("provenance"), "only valid with 'measured_N'");
    resistance.emplace(gauge::to_measured_resistance(
        gauge::summarize(load_gauge_csv(res, "gauge_csv", base_dir, label))));
  }

  double safety = gauge::kDefaultSafetyFactor;
  if (root.has("safety_factor")) {
    safety = root.number("safety_factor");
    if (!(safety >= 1.0))
      fail("safety_factor", "must be >= 1" + show(safety), ErrorCode::SafetyFactorBelowOne);
  }
  const std::size_t n = resample_count(root, "resample_n");

  std::optional<std::filesystem::path> out_dir;
  if (auto s = root.optional_string("output_dir")) out_dir = *s;

  return ProjectConfig{
      .gear = spec,
      .fabric = std::move(surface),
      .coefficient_from_geometry = from_geometry,
      .motor_torque = torque,
      .resistance = std::move(*resistance),
      .safety_factor = safety,
      .resample_n = n,
      .output_dir = std::move(out_dir),
  };
}

SizingInput load_sizing_input(const Json& doc) {
  const Object root(doc, "",
                    {"required_force_N", "diameters_mm", "torques_Nm", "margin_floor_N", "eyelet"});
  SizingInput input;
  input.request.required_force = newtons(non_negative(root, "required_force_N"));
  if (root.has("margin_floor_N"))
    input.request.margin_floor = newtons(non_negative(root, "margin_floor_N"));

  const auto diameters = root.number_array("diameters_mm");
  if (diameters.empty()) fail("diameters_mm", "must not be empty", ErrorCode::EmptyCandidates);
  for (std::size_t i = 0; i < diameters.size(); ++i) {
    if (!(diameters[i] > 0.0))
      fail("diameters_mm[" + std::to_string(i) + "]", "must be > 0" + show(diameters[i]),
           ErrorCode::NonPositiveDiameter);
    input.request.diameters.push_back(millimeters(diameters[i]));
  }
  const auto torques = root.number_array("torques_Nm");
  if (torques.empty()) fail("torques_Nm", "must not be empty", ErrorCode::EmptyCandidates);
  for (std::size_t i = 0; i < torques.size(); ++i) {
    if (torques[i] < 0.0)
      fail("torques_Nm[" + std::to_string(i) + "]", "must be >= 0" + show(torques[i]),
           ErrorCode::NegativeTorque);
    input.request.torques.push_back(newton_meters(torques[i]));
  }

  if (root.has("eyelet")) {
    const Object e(root.at("eyelet"), "eyelet",
                   {"eyelet_diameter_mm", "band_mm", "placement_margin_mm"});
    input.eyelet = sizing::EyeletLayout{
        .eyelet_diameter = millimeters(non_negative(e, "eyelet_diameter_mm")),
        .stitch_to_edge_band = millimeters(non_negative(e, "band_mm")),
        .placement_margin = millimeters(e.has("placement_margin_mm")
                                            ? non_negative(e, "placement_margin_mm")
                                            : 0.0),
    };
  }
  return input;
}

feed::FeedScenario load_feed_scenario(const Json& doc, const std::filesystem::path& base_dir) {
  const Object root(doc, "",
                    {"label", "drive_force_N", "drive", "cycles", "nominal_advance_mm",
                     "resistance"});
  feed::FeedScenario s;

  if (root.has("drive_force_N") == root.has("drive"))
    fail("<root>", "exactly one of 'drive_force_N' or 'drive' is required");
  if (root.has("drive_force_N")) {
    s.drive_force = newtons(non_negative(root, "drive_force_N"));
  } else {
    const Object drive(root.at("drive"), "drive", {"torque_Nm", "reference_diameter_mm"});
    const Torque t = newton_meters(non_negative(drive, "torque_Nm"));
    const Length d = millimeters(positive(drive, "reference_diameter_mm"));
    s.drive_force = core::tangential_force_from_torque(t, d);
  }

  s.cycles = root.integer("cycles");
  if (s.cycles < 1)
    fail("cycles", "must be >= 1" + show(static_cast<double>(s.cycles)), ErrorCode::BadCycleCount);
  s.nominal_advance = millimeters(positive(root, "nominal_advance_mm"));

  const Object probe(root.at("resistance"), "resistance",
                     {"model", "force_N", "forces_N", "gauge_csv", "resample_n", "base_N",
                      "amplitude_N", "seed"});
  const std::string model = probe.string("model");
  if (model == "constant") {
    const Object r(root.at("resistance"), "resistance", {"model", "force_N"});
    s.resistance = feed::ConstantResistance{newtons(non_negative(r, "force_N"))};
  } else if (model == "series") {
    const Object r(root.at("resistance"), "resistance",
                   {"model", "forces_N", "gauge_csv", "resample_n"});
    if (r.has("forces_N") == r.has("gauge_csv"))
      fail("resistance", "exactly one of 'forces_N' or 'gauge_csv' is required");
    feed::SeriesResistance series;
    if (r.has("forces_N")) {
      if (r.has("resample_n")) fail(r.path("resample_n"), "only valid with 'gauge_csv'");
      const auto forces = r.number_array("forces_N");
      if (forces.empty()) fail(r.path("forces_N"), "must not be empty", ErrorCode::SeriesEmpty);
      for (std::size_t i = 0; i < forces.size(); ++i) {
        if (forces[i] < 0.0)
          fail(r.path("forces_N") + "[" + std::to_string(i) + "]", "must be >= 0" + show(forces[i]),
               ErrorCode::NegativeForce);
        series.levels.push_back(newtons(forces[i]));
      }
    } else {
      auto raw = load_gauge_csv(r, "gauge_csv", base_dir, {});
      series = feed::SeriesResistance::from_series(
          gauge::resample_equally_spaced(raw, resample_count(r, "resample_n")));
    }
    s.resistance = std::move(series);
  } else if (model == "constant_plus_noise") {
    const Object r(root.at("resistance"), "resistance",
                   {"model", "base_N", "amplitude_N", "seed"});
    s.resistance = feed::NoisyResistance{
        .base = newtons(non_negative(r, "base_N")),
        .amplitude = newtons(non_negative(r, "amplitude_N")),
        .seed = r.unsigned_integer("seed"),
    };
  } else {
    fail(probe.path("model"),
         "must be one of 'constant', 'series', 'constant_plus_noise' (got '" + model + "')");
  }
  return s;
}

}  // namespace hemforce::config
