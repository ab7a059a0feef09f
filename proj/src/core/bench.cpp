#include "bench.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>

#include "dispatch.hpp"
#include "sequence.hpp"

namespace seqbench {

bool is_bench_id(std::string_view id) {
  for (const auto& b : kBenchIds)
    if (b == id) return true;
  return false;
}

std::optional<std::string> admissibility_veto(std::string_view bench_id,
                                              std::string_view structure_id, std::uint64_t n) {
  if (!is_bench_id(bench_id)) throw config_error("unknown bench id: " + std::string(bench_id));
  if (!is_structure_id(structure_id))
    throw config_error("unknown structure id: " + std::string(structure_id));
  if (structure_id == "singlelist" && bench_id == "addlast")
    return "singlelist/addlast: removeLast walks the whole chain, O(n) per removal";
  if (structure_id == "singlelist" && bench_id == "stroustrup-binary")
    return "singlelist/stroustrup-binary: dichotomous probes defeat a forward-only cache, "
           "O(n) per probe";
  if ((structure_id == "arraylist" || structure_id == "oracle") && bench_id == "addfirst")
    return std::string(structure_id) + "/addfirst: every addFirst shifts the whole array";
  if (structure_id == "nocachelist" && n > kNoCacheListMaxN)
    return "nocachelist: excluded above n=" + std::to_string(kNoCacheListMaxN) +
           " (every locate bisects from an end)";
  return std::nullopt;
}

std::uint64_t model_peak_bytes(std::string_view structure_id, std::uint64_t n,
                               std::size_t block_capacity) {
  const auto cap_pow2 = [](std::uint64_t want, std::uint64_t floor_cap) {
    if (want == 0) return std::uint64_t{0};
    return std::max<std::uint64_t>(floor_cap, std::bit_ceil(want));
  };
  if (structure_id == "nocachelist") return 3 * 8 + 24 * n;
  if (structure_id == "linkedlist") return 5 * 8 + 24 * n;
  if (structure_id == "singlelist") return 5 * 8 + 16 * n;
  if (structure_id == "arraylist") return 3 * 8 + 8 * cap_pow2(n, 16);
  if (structure_id == "arrayring") return 4 * 8 + 8 * cap_pow2(n, 16);
  if (structure_id == "oracle") return 3 * 8 + 8 * cap_pow2(n, 1);
  if (structure_id == "arrayblock") {
    const std::uint64_t bcap =
        block_capacity == 0 ? ArrayBlock::kDefaultBlockCapacity : block_capacity;
    // worst case: blocks half full (the pure-append steady state)
    const std::uint64_t blocks = n == 0 ? 0 : (n + bcap / 2 - 1) / (bcap / 2);
    return 9 * 8 + 8 * cap_pow2(blocks, 8) + blocks * (8 * bcap + 24);
  }
  throw config_error("unknown structure id: " + std::string(structure_id));
}

namespace {

void validate_spec(const BenchSpec& spec) {
  if (const auto veto = admissibility_veto(spec.bench_id, spec.structure_id, spec.n))
    throw inadmissible_error(*veto);
  if (spec.n < 3) throw config_error("bench n must be >= 3");
  if (spec.repeats < 1) throw config_error("bench repeats must be >= 1");
  if (spec.bench_id == "fairbench-rand") {
    if (spec.k != 32 && spec.k != 64 && spec.k != 128)
      throw config_error("fairbench-rand k must be one of 32, 64, 128");
  }
}

}  // namespace

BenchResult run_bench(const BenchSpec& spec) {
  validate_spec(spec);
  BenchResult result;
  result.spec = spec;
  return dispatch_structure(spec.structure_id, [&](auto tag) {
    using S = typename decltype(tag)::type;
    using clock = std::chrono::steady_clock;
    for (std::uint32_t rep = 0; rep < spec.repeats; ++rep) {
      SplitMix64 prng(spec.seed);
      const auto t0 = clock::now();
      S seq = make_structure<S>(spec.block_capacity);
      const BenchOutcome out = run_bench_body(seq, spec, prng);
      const auto t1 = clock::now();
      if (seq.size() != 0) throw std::logic_error("bench left a non-empty sequence");
      if (rep == 0) {
        result.checksum = out.checksum;
        result.model_bytes = out.model_bytes;
      } else if (result.checksum != out.checksum) {
        throw std::logic_error("bench checksum varied across repeats");
      }
      result.ticks.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
    result.min_ticks = *std::min_element(result.ticks.begin(), result.ticks.end());
    return result;
  });
}

}  // namespace seqbench
