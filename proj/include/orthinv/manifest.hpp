#ifndef ORTHINV_MANIFEST_HPP
#define ORTHINV_MANIFEST_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "orthinv/families.hpp"

namespace orthinv {

inline constexpr const char* kToolName = "orthinv";
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckRecord {
  std::string id;
  nlohmann::ordered_json inputs;
  std::string expected;
  std::string observed;
  std::string status;  // pass | fail | skipped(out-of-range)
  double wall_ms = 0.0;
};

struct GridConfig {
  std::size_t ceiling = 16384;
  // true: run the built-in verification grid; false: run the per-family
  // check set for the listed instances only.
  bool default_checks = true;
  std::vector<FamilySpec> families;
};

// Reads a custom grid: {"ceiling": N, "families": [{"family":"g","n":2,"m":4}, ...]}.
GridConfig load_grid_config(const std::string& path);

// Applies the INVARIANT_CEILING environment override, if present.
void apply_ceiling_env(GridConfig& config);

// Runs every check of the grid; records come back sorted by id.
std::vector<CheckRecord> run_grid(const GridConfig& config);

bool all_records_pass(const std::vector<CheckRecord>& records);

// Manifest document: volatile data (timestamp, wall times) lives in the
// header block; everything below it is a deterministic function of the
// config.
nlohmann::ordered_json manifest_json(const std::vector<CheckRecord>& records,
                                     const GridConfig& config, const std::string& grid_name);

// The manifest with the header block removed; byte-identical across runs
// with the same config.
std::string manifest_stable_text(const nlohmann::ordered_json& manifest);

}  // namespace orthinv

#endif
