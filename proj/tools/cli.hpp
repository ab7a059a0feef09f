#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqbench_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // bad flags, inadmissible pairing, memory gate
inline constexpr int kExitIo = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> benches;
  std::vector<std::string> impls;
  std::vector<std::uint64_t> ns;
  std::uint64_t seed = 1;
  std::uint32_t repeats = 5;
  std::vector<std::uint32_t> ks = {32};
  std::uint32_t block_capacity = 2048;
  std::uint64_t mem_limit_bytes = 4ull << 30;
  std::string out = "-";  // "-" writes to stdout
  std::optional<std::string> gnuplot_path;
};

// Parses the flag vector (no program name). Throws usage_error on unknown
// flags or bad values; SEQBENCH_MEM_LIMIT_GB is the fallback when
// --mem-limit-gb is absent.
RunConfig parse_args(const std::vector<std::string>& args);

struct ResultRow {
  std::string bench;
  std::string impl;
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t seed = 0;
  std::uint32_t repeats = 0;
  std::uint64_t min_ticks = 0;
  std::uint64_t checksum = 0;
  std::uint64_t model_bytes = 0;
};

// Checks every pairing for admissibility and every (impl, n) against the
// memory gate before anything runs; throws usage_error naming the offender.
void validate_config(const RunConfig& cfg);

// validate_config + all runs, rows sorted by (bench, impl, n, k).
std::vector<ResultRow> run_all(const RunConfig& cfg);

std::string format_csv(const std::vector<ResultRow>& rows);

// Reads the CSV back and writes a gnuplot script (inline data blocks, one
// ticks-vs-n curve per structure, log-scaled n axis). Throws io_error when
// the CSV is missing or has no data rows.
void emit_gnuplot(const std::string& csv_path, const std::string& script_path);

// Full driver; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace seqbench_cli
