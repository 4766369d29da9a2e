#pragma once

// Scenario execution.  A scenario names an ambient algebra (builtin
// constructor, file reference, or inline presentation), optionally a shift
// frame, and an ordered task list.  Running one produces a schema-valid
// JSON report per task plus a summary whose human rendering is derived
// from the summary JSON alone.
//
// Determinism contract: with a fixed seed the reports are byte-identical
// across runs and across job counts.  Every task resolves its own inputs
// from the scenario JSON (nothing is shared between tasks), draws
// randomness only from seed + task index, and report assembly is ordered
// by task index.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hochlab/json_io.hpp"
#include "hochlab/structures.hpp"

namespace hochlab {

struct TaskSpec {
  std::string kind;            // one of the eight kinds in the scenario schema
  std::string expect = "pass";
  Json params = Json::object();
};

struct Scenario {
  std::string name;
  std::uint64_t seed = 0;
  Index budget_cols = kDefaultColumnBudget;
  Json algebra_spec = nullptr;  // see resolve_algebra for the accepted forms
  Json frame_spec = nullptr;    // {"k":..,"N":..,"spare":..}
  std::string base_dir = ".";   // anchor for {"file": ...} references
  std::vector<TaskSpec> tasks;
};

// Schema-checks against the scenario schema, then converts.  Parameter
// shapes inside tasks are validated by the task runners, which know the
// per-kind requirements.
Scenario scenario_from_json(const Json& j, std::string base_dir);

// Accepted algebra specs:
//   {"builtin": "matrix", "m": 2}
//   {"builtin": "square-zero", "dim": 3}
//   {"builtin": "scalars"}
//   {"builtin": "unitization", "of": <spec>}
//   {"file": "algebra.json"}          resolved against base_dir
//   {full inline presentation}        validated against the algebra schema
AlgebraPresentation resolve_algebra(const Json& spec, const std::string& base_dir);

ShiftFrame resolve_frame(const Json& spec);

struct RunOptions {
  int jobs = 1;
  bool dump_matrices = false;           // homology tasks attach differentials
  std::optional<Index> budget_cols;     // overrides the scenario value
  std::optional<std::uint64_t> seed;    // overrides the scenario value
};

struct TaskOutcome {
  Index index = 0;
  std::string kind;
  std::string expect = "pass";
  bool pass = false;       // the task's own verdict
  bool ok = false;         // verdict matches the expectation, and no error
  std::string error;       // empty when the task ran to a verdict
  std::string error_type;  // "parse" | "budget" | "invalid" | "internal"
  Json report;             // full envelope, valid against the task-report schema
};

struct RunResult {
  std::string scenario;
  std::uint64_t seed = 0;
  Index budget_cols = 0;
  std::vector<TaskOutcome> outcomes;  // index order
  Json summary;                       // valid against the summary schema
  int exit_code = 0;  // 0 all ok; 1 verdict mismatch; 2 parse error; 3 budget
};

RunResult run_scenario(const Scenario& s, const RunOptions& opts);

std::string report_filename(const std::string& scenario, Index index,
                            const std::string& kind);

// Human rendering of a summary JSON; computed from the JSON only.
std::string summary_text(const Json& summary);

// Writes each task report, the summary JSON, and its text rendering into
// output_dir (created if missing); returns the summary text.
std::string write_reports(const RunResult& r, const std::string& output_dir);

}  // namespace hochlab
