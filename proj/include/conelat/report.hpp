#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "conelat/common.hpp"
#include "conelat/rng.hpp"

namespace conelat {

struct RunConfig {
  std::string subcommand;
  std::string field;  // empty = suite default (usually all of R, C, H)
  int n = 0;          // cap on random matrix sizes; 0 = suite default
  int trials = 0;     // 0 = suite default
  double tol = 0.0;   // 0 = suite default
  std::uint64_t seed = 20260815;
  std::string shape;  // verify-lattice shape selector; empty = whole corpus
  bool json = false;
  std::string out_path;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Report {
  std::string name;
  int trials = 0;
  int failures = 0;
  double max_residual = 0.0;
  double elapsed = 0.0;  // wall seconds; shown in human output, never serialized
  std::uint64_t seed = 0;
  nlohmann::json witness;  // optional payload, omitted when null

  bool passed() const { return failures == 0; }
};

// Structured serialization. elapsed is excluded so that identical configs
// produce bitwise-identical reports.
nlohmann::json to_json(const Report& r);
nlohmann::json run_record(const RunConfig& cfg, const std::vector<Report>& rs);
std::string human_text(const std::vector<Report>& rs);

struct TrialOutcome {
  bool ok = true;
  double residual = 0.0;
};

// Counter-based trial runner: trial i draws from Rng(derive_seed(seed,
// stream, i)), so chunked parallel execution and serial execution aggregate
// to the same counts and max residual. A trial that throws counts as a
// failure; the lowest-index error message is kept as the witness.
Report run_trials(const std::string& name, std::uint64_t seed,
                  std::uint64_t stream, int trials,
                  const std::function<TrialOutcome(Rng&, int)>& trial,
                  bool parallel = true);

}  // namespace conelat
