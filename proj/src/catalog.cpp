#include "hemforce/catalog.hpp"

#include <cmath>

#include "hemforce/cli.hpp"
#include "hemforce/config.hpp"
#include "hemforce/format.hpp"

namespace hemforce::catalog {

namespace fs = std::filesystem;
using config::Json;

namespace {

constexpr const char* kCatalogFile = "catalog.json";

[[noreturn]] void bad_catalog(const std::string& msg) {
  throw Error(ErrorCode::InvalidConfig, std::string(kCatalogFile) + ": " + msg);
}

std::string required_string(const Json& j, const char* key, std::size_t index) {
  if (!j.contains(key) || !j[key].is_string())
    bad_catalog("entries[" + std::to_string(index) + "]." + key + ": expected a string");
  return j[key].get<std::string>();
}

Json report_for(const CatalogEntry& e, const Json& params, const fs::path& data_dir) {
  const fs::path full = data_dir / e.path;
  if (e.kind == "analyze_config") {
    const auto cfg = config::load_project_config(
        config::parse_json(config::read_text_file(full), e.path.string()), full.parent_path());
    return cli::analysis_json(cfg, cli::analyze(cfg));
  }
  if (e.kind == "gauge_csv") {
    const auto n = params.value("n", static_cast<std::int64_t>(gauge::kDefaultResampleCount));
    const double sf = params.value("safety_factor", gauge::kDefaultSafetyFactor);
    const auto series = gauge::parse_series(config::read_text_file(full), params.value("label", ""),
                                            e.path.filename().string());
    return cli::ingestion_json(cli::ingest(series, static_cast<std::size_t>(n), sf,
                                            e.path.filename().string()));
  }
  if (e.kind == "sizing_request") {
    return cli::sizing_json(cli::size(config::load_sizing_input(
        config::parse_json(config::read_text_file(full), e.path.string()))));
  }
  if (e.kind == "feed_scenario") {
    const auto scenario = config::load_feed_scenario(
        config::parse_json(config::read_text_file(full), e.path.string()), full.parent_path());
    return cli::feed_json(scenario, feed::simulate_feed(scenario));
  }
  throw Error(ErrorCode::InvalidConfig, "unknown kind '" + e.kind + "'");
}

void check_figure(const Json& report, const Json& expect, EntryVerdict& v) {
  const std::string pointer = expect.value("pointer", "");
  Json::json_pointer ptr;
  try {
    ptr = Json::json_pointer(pointer);
  } catch (const std::exception&) {
    v.failures.push_back("bad pointer '" + pointer + "'");
    return;
  }
  if (!report.contains(ptr)) {
    v.failures.push_back(pointer + ": missing from report");
    return;
  }
  const Json& got = report.at(ptr);
  const Json& want = expect.at("value");
  if (want.is_number()) {
    const double tol = expect.value("tolerance", 0.0);
    if (!got.is_number() || !(std::abs(got.get<double>() - want.get<double>()) <= tol)) {
      v.failures.push_back(pointer + ": expected " + fmt::general(want.get<double>(), 12) +
                           " ± " + fmt::general(tol, 3) + ", got " + got.dump());
    }
  } else if (got != want) {
    v.failures.push_back(pointer + ": expected " + want.dump() + ", got " + got.dump());
  }
}

}  // namespace

bool CatalogVerdict::ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

std::vector<std::string> CatalogVerdict::failures() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    for (const auto& f : e.failures) out.push_back(e.name + ": " + f);
  return out;
}

std::vector<CatalogEntry> load_catalog(const fs::path& data_dir) {
  const Json doc =
      config::parse_json(config::read_text_file(data_dir / kCatalogFile), kCatalogFile);
  if (!doc.contains("entries") || !doc["entries"].is_array())
    bad_catalog("expected an 'entries' array");
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
    const Json& j = doc["entries"][i];
    out.push_back(CatalogEntry{
        .name = required_string(j, "name", i),
        .path = required_string(j, "path", i),
        .kind = required_string(j, "kind", i),
        .origin = required_string(j, "origin", i),
        .provenance = required_string(j, "provenance", i),
    });
  }
  return out;
}

CatalogVerdict validate_catalog(const fs::path& data_dir) {
  const auto entries = load_catalog(data_dir);
  const Json doc =
      config::parse_json(config::read_text_file(data_dir / kCatalogFile), kCatalogFile);

  CatalogVerdict verdict;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    const Json& raw = doc["entries"][i];
    EntryVerdict v{.name = e.name, .ok = true, .failures = {}};

    if (e.origin != "paper" && e.origin != "constructed" &&
        e.origin != "constructed, landmark-matched")
      v.failures.push_back("origin must state paper or constructed, got '" + e.origin + "'");
    if (!fs::exists(data_dir / e.path)) {
      v.failures.push_back(e.path.string() + ": file does not exist");
    } else {
      try {
        const Json report = report_for(e, raw.value("params", Json::object()), data_dir);
        for (const Json& figure : raw.value("expected", Json::array()))
          check_figure(report, figure, v);
      } catch (const Error& err) {
        v.failures.push_back(std::string(to_string(err.code())) + ": " + err.what());
      } catch (const std::exception& err) {
        v.failures.push_back(err.what());
      }
    }
    v.ok = v.failures.empty();
    verdict.entries.push_back(std::move(v));
  }
  return verdict;
}

}  // namespace hemforce::catalog
