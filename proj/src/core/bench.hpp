#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "prng.hpp"

namespace seqbench {

inline constexpr std::string_view kBenchIds[] = {
    "stroustrup", "stroustrup-binary", "fairbench", "fairbench-rand", "addlast", "addfirst",
};

bool is_bench_id(std::string_view id);

// NoCacheList is only run at small n; every locate is a bisected walk, so
// the benchmarks blow up long before the other structures do.
inline constexpr std::uint64_t kNoCacheListMaxN = 5000;

// Reason the pairing may not run, or nullopt when it is admissible.
// Throws config_error for unknown ids.
std::optional<std::string> admissibility_veto(std::string_view bench_id,
                                              std::string_view structure_id, std::uint64_t n);

// Worst-case modeled footprint of a structure holding n elements; the memory
// gate checks this before any run starts.
std::uint64_t model_peak_bytes(std::string_view structure_id, std::uint64_t n,
                               std::size_t block_capacity = 0);

struct BenchSpec {
  std::string bench_id;
  std::string structure_id;
  std::uint64_t n = 0;
  std::uint32_t k = 0;  // fairbench-rand increment bound; 0 elsewhere
  std::uint64_t seed = 1;
  std::uint32_t repeats = 1;
  std::size_t block_capacity = 0;  // 0 = ArrayBlock default
};

struct BenchResult {
  BenchSpec spec;
  std::uint64_t min_ticks = 0;  // monotonic nanoseconds, best repeat
  std::vector<std::uint64_t> ticks;
  std::uint64_t checksum = 0;
  std::uint64_t model_bytes = 0;  // footprint at peak size
};

// Validates the spec (ids, n >= 3, k in {32,64,128} for fairbench-rand,
// repeats >= 1, admissibility), then runs the bench `repeats` times from the
// same seed and keeps the minimum duration.
BenchResult run_bench(const BenchSpec& spec);

// ---- bench bodies -------------------------------------------------------
// Each phase is exposed on its own so tests can interleave checks; the
// _bench_ entry points compose them and report the checksum plus the
// modeled footprint at peak size.

struct BenchOutcome {
  std::uint64_t checksum = 0;
  std::uint64_t model_bytes = 0;
};

// First index whose element is >= val in an ascending sequence.
template <class S>
std::uint64_t lower_bound_index(const S& seq, Element val) {
  std::uint64_t lo = 0;
  std::uint64_t hi = seq.size();
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (seq.item(static_cast<std::size_t>(mid)) < val)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

// Insertion-sort filling: linear scan for the position of each random value.
template <class S>
void stroustrup_fill(S& seq, std::uint64_t count, SplitMix64& prng) {
  for (std::uint64_t i = 0; i < count; ++i) {
    const Element val = prng.value62();
    const std::size_t sz = seq.size();
    std::size_t idx = 0;
    while (idx < sz && seq.item(idx) < val) ++idx;
    seq.insert(idx, val);
  }
}

// Same process, but the position comes from a dichotomous search.
template <class S>
void stroustrup_fill_binary(S& seq, std::uint64_t count, SplitMix64& prng) {
  for (std::uint64_t i = 0; i < count; ++i) {
    const Element val = prng.value62();
    seq.insert(static_cast<std::size_t>(lower_bound_index(seq, val)), val);
  }
}

// Removal at random indices; the checksum accumulates the removed values.
template <class S>
std::uint64_t stroustrup_clear(S& seq, std::uint64_t count, SplitMix64& prng) {
  std::uint64_t checksum = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::size_t idx = static_cast<std::size_t>(prng.below(seq.size()));
    checksum += static_cast<std::uint64_t>(seq.remove(idx));
  }
  return checksum;
}

template <class S>
BenchOutcome bench_stroustrup(S& seq, std::uint64_t n, SplitMix64& prng) {
  BenchOutcome out;
  stroustrup_fill(seq, n, prng);
  out.model_bytes = seq.footprint_bytes();
  out.checksum = stroustrup_clear(seq, n, prng);
  return out;
}

template <class S>
BenchOutcome bench_stroustrup_binary(S& seq, std::uint64_t n, SplitMix64& prng) {
  BenchOutcome out;
  stroustrup_fill_binary(seq, n, prng);
  out.model_bytes = seq.footprint_bytes();
  out.checksum = stroustrup_clear(seq, n, prng);
  return out;
}

// someData(i) = i. k = 0 is the unit-increment mode; otherwise the index
// advances by a random amount in [1, k]. The insertion index wraps modulo
// size+1, the removal index modulo size.
template <class S>
void fairbench_fill(S& seq, std::uint64_t n, SplitMix64& prng, std::uint32_t k) {
  std::uint64_t idx = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (3 * i < n) {
      seq.add_last(static_cast<Element>(i));
    } else if (3 * i < 2 * n) {
      seq.add_first(static_cast<Element>(i));
    } else {
      const std::uint64_t incr = k == 0 ? 1 : 1 + prng.below(k);
      idx = (idx + incr) % (seq.size() + 1);
      seq.insert(static_cast<std::size_t>(idx), static_cast<Element>(i));
    }
  }
}

template <class S>
std::uint64_t sum_right_to_left(const S& seq) {
  std::uint64_t sum = 0;
  for (std::size_t i = seq.size(); i-- > 0;) sum += static_cast<std::uint64_t>(seq.item(i));
  return sum;
}

template <class S>
std::uint64_t sum_left_to_right(const S& seq) {
  std::uint64_t sum = 0;
  const std::size_t sz = seq.size();
  for (std::size_t i = 0; i < sz; ++i) sum += static_cast<std::uint64_t>(seq.item(i));
  return sum;
}

template <class S>
void fairbench_clear(S& seq, std::uint64_t n, SplitMix64& prng, std::uint32_t k) {
  std::uint64_t idx = n / 2;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (3 * i < n) {
      const std::uint64_t decr = k == 0 ? 1 : 1 + prng.below(k);
      const std::uint64_t sz = seq.size();
      long long t = static_cast<long long>(idx) - static_cast<long long>(decr);
      t %= static_cast<long long>(sz);
      if (t < 0) t += static_cast<long long>(sz);
      idx = static_cast<std::uint64_t>(t);
      seq.remove(static_cast<std::size_t>(idx));
    } else if (3 * i < 2 * n) {
      seq.remove_first();
    } else {
      seq.remove_last();
    }
  }
}

template <class S>
BenchOutcome bench_fairbench(S& seq, std::uint64_t n, SplitMix64& prng, std::uint32_t k) {
  BenchOutcome out;
  fairbench_fill(seq, n, prng, k);
  out.model_bytes = seq.footprint_bytes();
  out.checksum = sum_right_to_left(seq);
  fairbench_clear(seq, n, prng, k);
  return out;
}

template <class S>
BenchOutcome bench_addlast(S& seq, std::uint64_t n, SplitMix64& prng) {
  BenchOutcome out;
  for (std::uint64_t i = 0; i < n; ++i) seq.add_last(prng.value62());
  out.model_bytes = seq.footprint_bytes();
  out.checksum = sum_left_to_right(seq);
  for (std::uint64_t i = 0; i < n; ++i) seq.remove_last();
  return out;
}

template <class S>
BenchOutcome bench_addfirst(S& seq, std::uint64_t n, SplitMix64& prng) {
  BenchOutcome out;
  for (std::uint64_t i = 0; i < n; ++i) seq.add_first(prng.value62());
  out.model_bytes = seq.footprint_bytes();
  out.checksum = sum_left_to_right(seq);
  for (std::uint64_t i = 0; i < n; ++i) seq.remove_first();
  return out;
}

template <class S>
BenchOutcome run_bench_body(S& seq, const BenchSpec& spec, SplitMix64& prng) {
  if (spec.bench_id == "stroustrup") return bench_stroustrup(seq, spec.n, prng);
  if (spec.bench_id == "stroustrup-binary") return bench_stroustrup_binary(seq, spec.n, prng);
  if (spec.bench_id == "fairbench") return bench_fairbench(seq, spec.n, prng, 0);
  if (spec.bench_id == "fairbench-rand") return bench_fairbench(seq, spec.n, prng, spec.k);
  if (spec.bench_id == "addlast") return bench_addlast(seq, spec.n, prng);
  if (spec.bench_id == "addfirst") return bench_addfirst(seq, spec.n, prng);
  throw config_error("unknown bench id: " + spec.bench_id);
}

}  // namespace seqbench
