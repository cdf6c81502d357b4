#pragma once

// Bundled example datasets and the key figures each one is expected to
// reproduce. The catalog file (data/catalog.json) lists, per entry, the file,
// its kind, an origin note, and expected values addressed by JSON pointer into
// the report the owning module produces.

#include <filesystem>
#include <string>
#include <vector>

namespace hemforce::catalog {

struct CatalogEntry {
  std::string name;
  std::filesystem::path path;  // relative to the catalog directory
  std::string kind;            // analyze_config | gauge_csv | sizing_request | feed_scenario
  std::string origin;          // paper | constructed | constructed, landmark-matched
  std::string provenance;
};

struct EntryVerdict {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;
};

struct CatalogVerdict {
  std::vector<EntryVerdict> entries;
  bool ok() const;
  /// One line per failing check, "<entry>: <message>".
  std::vector<std::string> failures() const;
};

/// Reads catalog.json in `data_dir`. Throws Error(InvalidConfig) if the
/// catalog itself is malformed.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& data_dir);

/// Parses every entry with its owning module and compares key figures.
/// Entry-level problems are collected, never thrown.
CatalogVerdict validate_catalog(const std::filesystem::path& data_dir);

}  // namespace hemforce::catalog
