#pragma once

#include <cstdint>
#include <stdexcept>

namespace seqbench {

// Payload type shared by every sequence: one machine word.
using Element = std::int64_t;

// Access outside the valid index range for the operation.
struct index_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Removal from an empty sequence.
struct underflow_error : std::underflow_error {
  using std::underflow_error::underflow_error;
};

// Invalid construction or run configuration value.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A (bench, structure, n) pairing the harness refuses to run.
struct inadmissible_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Per-instance instrumentation. Enabled by tests; benchmark runs leave it
// off, so the hot paths only ever see a predictable untaken branch.
struct Counters {
  std::uint64_t steps = 0;       // links or blocks walked while locating
  std::uint64_t elem_moves = 0;  // elements shifted/copied by insert or remove
  std::uint64_t slot_moves = 0;  // primary-table handles shifted (ArrayBlock)
  std::uint64_t grow_moves = 0;  // relocations done by capacity growth
  std::uint64_t splits = 0;
  std::uint64_t merges = 0;
  std::uint64_t cache_hits = 0;  // locates resolved with zero walking
};

}  // namespace seqbench
