#include "hemforce/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

namespace hemforce::cli {

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string input;
  std::string out_dir;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& o, std::string_view what) {
  cmd->add_option("-c,--config,-i,--input", o.input, std::string(what))->required();
  cmd->add_option("-o,--out-dir", o.out_dir,
                  "Directory for report files (default: $" + std::string(kOutDirEnv) + " or .)");
  cmd->add_option("-f,--format", o.format, "Report format written to stdout")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

fs::path resolve_out_dir(const CommonOptions& o, const std::optional<fs::path>& from_config,
                         const fs::path& config_dir) {
  if (!o.out_dir.empty()) return o.out_dir;
  if (from_config) return from_config->is_absolute() ? *from_config : config_dir / *from_config;
  if (const char* env = std::getenv(std::string(kOutDirEnv).c_str()); env && *env) return env;
  return ".";
}

void write_file(const fs::path& dir, std::string_view name, std::string_view content) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, dir.string() + ": cannot create directory: " + ec.message());
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, path.string() + ": cannot open for writing");
  out << content;
  if (!out) throw Error(ErrorCode::Io, path.string() + ": write failed");
}

std::string dump(const config::Json& j) { return j.dump(2) + "\n"; }

void emit(std::ostream& out, std::string_view content) {
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

fs::path parent_of(const std::string& input) {
  fs::path p = fs::path(input).parent_path();
  return p.empty() ? fs::path(".") : p;
}

config::Json load_json(const std::string& path) {
  return config::parse_json(config::read_text_file(path), path);
}

int cmd_analyze(const CommonOptions& o, std::ostream& out) {
  const auto cfg = config::load_project_config(load_json(o.input), parent_of(o.input));
  const Analysis a = analyze(cfg);
  const std::string json = dump(analysis_json(cfg, a));
  const std::string text = analysis_text(cfg, a);
  const std::string csv = analysis_csv(a);

  const fs::path dir = resolve_out_dir(o, cfg.output_dir, parent_of(o.input));
  write_file(dir, "analyze_report.json", json);
  write_file(dir, "analyze_report.txt", text);
  write_file(dir, "analyze_report.csv", csv);

  switch (parse_format(o.format)) {
    case Format::Json: emit(out, json); break;
    case Format::Csv: emit(out, csv); break;
    case Format::Text: emit(out, text); break;
  }
  return a.feasibility.feasible ? kExitOk : kExitInfeasible;
}

int cmd_ingest(const CommonOptions& o, std::int64_t n, double safety_factor,
               const std::string& label, std::ostream& out) {
  if (n < 2) throw Error(ErrorCode::BadSampleCount, "--n: must be >= 2");
  if (!(safety_factor >= 1.0))
    throw Error(ErrorCode::SafetyFactorBelowOne, "--safety-factor: must be >= 1");
  const std::string name = fs::path(o.input).filename().string();
  gauge::PullGaugeSeries series = [&] {
    try {
      return gauge::parse_series(config::read_text_file(o.input), label, name);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Io) throw;
      throw Error(e.code(), o.input + ": " + e.what());
    }
  }();
  const Ingestion in = ingest(series, static_cast<std::size_t>(n), safety_factor, name);
  const std::string json = dump(ingestion_json(in));
  const std::string text = ingestion_text(in);
  const std::string csv = gauge::serialize_series(in.resampled);

  const fs::path dir = resolve_out_dir(o, std::nullopt, {});
  write_file(dir, "ingest_resampled.csv", csv);
  write_file(dir, "ingest_summary.json", json);
  write_file(dir, "ingest_summary.txt", text);

  switch (parse_format(o.format)) {
    case Format::Json: emit(out, json); break;
    case Format::Csv: emit(out, csv); break;
    case Format::Text: emit(out, text); break;
  }
  return kExitOk;
}

int cmd_size(const CommonOptions& o, std::ostream& out) {
  const Sizing s = size(config::load_sizing_input(load_json(o.input)));
  const std::string json = dump(sizing_json(s));
  const std::string text = sizing_text(s);
  const std::string csv = sizing_csv(s);

  const fs::path dir = resolve_out_dir(o, std::nullopt, {});
  write_file(dir, "sizing_result.csv", csv);
  write_file(dir, "sizing_result.json", json);
  write_file(dir, "sizing_result.txt", text);

  switch (parse_format(o.format)) {
    case Format::Json: emit(out, json); break;
    case Format::Csv: emit(out, csv); break;
    case Format::Text: emit(out, text); break;
  }
  return kExitOk;
}

int cmd_simulate(const CommonOptions& o, std::ostream& out) {
  const feed::FeedScenario scenario =
      config::load_feed_scenario(load_json(o.input), parent_of(o.input));
  const feed::FeedResult result = feed::simulate_feed(scenario);
  const std::string json = dump(feed_json(scenario, result));
  const std::string text = feed_text(scenario, result);
  const std::string csv = feed_csv(result);

  const fs::path dir = resolve_out_dir(o, std::nullopt, {});
  write_file(dir, "feed_cycles.csv", csv);
  write_file(dir, "feed_summary.json", json);
  write_file(dir, "feed_summary.txt", text);

  switch (parse_format(o.format)) {
    case Format::Json: emit(out, json); break;
    case Format::Csv: emit(out, csv); break;
    case Format::Text: emit(out, text); break;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Force analysis and sizing for a fabric-pulling spur gear", "hemforce"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonOptions analyze_opts, ingest_opts, size_opts, simulate_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Force chain and drive feasibility for one configuration");
  add_common(analyze_cmd, analyze_opts, "Project configuration (JSON)");

  std::int64_t n = static_cast<std::int64_t>(gauge::kDefaultResampleCount);
  double safety_factor = gauge::kDefaultSafetyFactor;
  std::string label;
  auto* ingest_cmd = app.add_subcommand("ingest", "Resample and summarize a pull-gauge CSV recording");
  add_common(ingest_cmd, ingest_opts, "Pull-gauge CSV (t_s,force_N)");
  ingest_cmd->add_option("-n,--n", n, "Number of equally spaced samples")->capture_default_str();
  ingest_cmd->add_option("-s,--safety-factor", safety_factor, "Multiplier on the peak resistance")
      ->capture_default_str();
  ingest_cmd->add_option("-l,--label", label, "Fabric label recorded in the summary");

  auto* size_cmd = app.add_subcommand("size", "Evaluate a torque x diameter candidate grid");
  add_common(size_cmd, size_opts, "Sizing request (JSON)");

  auto* simulate_cmd = app.add_subcommand("simulate", "Stitch-cycle feed slip simulation");
  add_common(simulate_cmd, simulate_opts, "Feed scenario (JSON)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_opts, out);
    if (*ingest_cmd) return cmd_ingest(ingest_opts, n, safety_factor, label, out);
    if (*size_cmd) return cmd_size(size_opts, out);
    if (*simulate_cmd) return cmd_simulate(simulate_opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace hemforce::cli
