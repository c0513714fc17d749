#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sandwich/checks.hpp"
#include "sandwich/finite_maps.hpp"

namespace sandwich::cli {

/// Command-line misuse (bad arguments, unknown ids); mapped to exit code 2,
/// distinct from verification failures (exit code 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of one CLI command. The text, JSON and CSV renderings are all
/// produced from this one value; the JSON rendering round-trips.
struct Report {
  std::string command;
  nlohmann::json meta = nlohmann::json::object();
  std::vector<std::string> columns;
  nlohmann::json rows = nlohmann::json::array();  // array of arrays, aligned with columns
  nlohmann::json extra = nlohmann::json::object();
  bool ok = true;
  double seconds = 0.0;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string render_text() const;
  std::string render_csv() const;
  std::string render(const std::string& format) const;

  bool operator==(const Report&) const = default;
};

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = checks::kDefaultSeed;
  int cap = 0;  // 0 = per-command default (4 for table work, 5 for element sweeps)
  int jobs = 1;
};

struct VerifyBounds {
  int n = 0;
  int grid = 0;
  int samples = 0;
  std::uint64_t cases = 0;
};

Report cmd_idempotents_finite(Family family, int n, const std::string& element_literal,
                              const GlobalOptions& opts);
Report cmd_idempotents_bicyclic(const std::string& element_literal, int chain,
                                const GlobalOptions& opts);
Report cmd_classify(Family family, int n, const GlobalOptions& opts);
Report cmd_witness(Family family, int n, const std::string& a_literal,
                   const std::string& b_literal, bool full_check, const GlobalOptions& opts);
Report cmd_verify(const std::string& id, const VerifyBounds& bounds, const GlobalOptions& opts);
Report cmd_count(int n, const GlobalOptions& opts);

/// The theorem ids accepted by cmd_verify.
const std::vector<std::string>& verify_ids();

}  // namespace sandwich::cli
