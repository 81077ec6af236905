// Sparse SDPA export, external-solver driver and rigorous bound reporting.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quadcode/blocks.hpp"

namespace quadcode {

using Json = nlohmann::ordered_json;

struct SolverConfig {
  std::string solver_path;
  std::vector<std::string> extra_args;
  double time_limit_s = 3600.0;
  double tolerance = 1e-6;  // must stay positive
};

/// Environment variable consulted when no solver path is given.
inline constexpr const char* kSolverEnvVar = "QUADCODE_SOLVER";

struct WriteOptions {
  // Entries above this magnitude trigger a diagonal power-of-two rescaling
  // pass (2^53: doubles stay exact).
  double magnitude_cap = 9007199254740992.0;
};

/// Writes the problem in the sparse SDPA format: maximization is encoded by
/// negating the objective; the constant matrix is emitted so that
/// sum_i y_i F_i - F0 equals the assembled affine block. Deterministic bytes.
/// Returns the problem manifest (parameters, variables, blocks, scaling).
Json write_sdpa(const SdpProblem& problem, std::ostream& out, const WriteOptions& opts = {});
Json write_sdpa_file(const SdpProblem& problem, const std::string& path,
                     const WriteOptions& opts = {});

/// Re-parsed sparse SDPA file (used for round-trip checks and diagnostics).
struct ParsedSdpa {
  int nvars = 0;
  std::vector<int> block_sizes;  // negative = diagonal block
  std::vector<std::string> objective;
  struct Entry {
    int mat = 0, block = 0, i = 0, j = 0;
    std::string value;
  };
  std::vector<Entry> entries;
};
ParsedSdpa parse_sdpa(std::istream& in);
/// Canonical re-rendering of a parsed file; write -> parse -> render is a
/// fixed point.
std::string render_sdpa(const ParsedSdpa& file);

struct SolverRun {
  enum class Status { ok, not_found, nonzero_exit, timeout };
  Status status = Status::ok;
  int exit_code = 0;
  std::string output;  // captured stdout+stderr (partial on timeout)
  double wall_s = 0.0;
};

/// Runs the solver as a subprocess on the given file, capturing the output
/// and enforcing the configured time limit.
SolverRun run_solver(const std::string& problem_file, const SolverConfig& config);

struct BoundReport {
  int q = 0, n = 0, d = 0;
  double objective = 0.0;  // upper-bounding side, in maximization sign
  double primal = 0.0, dual = 0.0;
  bool have_dual = false;
  double gap = 0.0;
  long long bound = 0;  // floor(objective + tolerance)
  std::string solver_status;
  bool trusted = false;
  double wall_s = 0.0;
  int variables = 0, blocks = 0, max_block = 0;
  std::string caveat;
};

/// Raised when the solver output carries no objective values; keeps the raw
/// text for diagnosis.
struct SolverOutputError : std::runtime_error {
  explicit SolverOutputError(const std::string& what, std::string raw_text)
      : std::runtime_error(what), raw(std::move(raw_text)) {}
  std::string raw;
};

/// Extracts objective values from the raw output (SDPA- and CSDP-style keys),
/// converts to the maximization sign, prefers the dual (upper-bounding) value
/// and floors with the configured tolerance.
BoundReport bound_report(const SolverRun& run, const SdpProblem& problem,
                         const SolverConfig& config);

Json to_json(const BoundReport& report);

}  // namespace quadcode
