#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "prng.hpp"

namespace seqbench {

enum class OpKind : std::uint8_t {
  kInsert,
  kRemove,
  kAddFirst,
  kAddLast,
  kRemoveFirst,
  kRemoveLast,
  kItem,
};

struct Op {
  OpKind kind;
  std::uint64_t idx;  // valid for the simulated list state at that step
  Element value;
};

struct Digest {
  std::uint64_t size = 0;
  std::uint64_t content_hash = 0;   // order-sensitive FNV-1a over final contents
  std::uint64_t item_checksum = 0;  // running sum of every item() result
  bool operator==(const Digest&) const = default;
};

// Deterministic mixed-operation script: indices are always valid for the
// list state at that step. The mix leans slightly toward insertion so the
// list drifts to a few thousand elements over 1e5 ops.
std::vector<Op> generate_script(std::uint64_t seed, std::size_t op_count);

template <class S>
Digest run_script(S& seq, std::span<const Op> ops) {
  Digest d;
  for (const Op& op : ops) {
    switch (op.kind) {
      case OpKind::kInsert:
        seq.insert(static_cast<std::size_t>(op.idx), op.value);
        break;
      case OpKind::kRemove:
        seq.remove(static_cast<std::size_t>(op.idx));
        break;
      case OpKind::kAddFirst:
        seq.add_first(op.value);
        break;
      case OpKind::kAddLast:
        seq.add_last(op.value);
        break;
      case OpKind::kRemoveFirst:
        seq.remove_first();
        break;
      case OpKind::kRemoveLast:
        seq.remove_last();
        break;
      case OpKind::kItem:
        d.item_checksum += static_cast<std::uint64_t>(seq.item(static_cast<std::size_t>(op.idx)));
        break;
    }
  }
  d.size = seq.size();
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    h ^= static_cast<std::uint64_t>(seq.item(i));
    h *= 1099511628211ull;
  }
  d.content_hash = h;
  return d;
}

// Generates the script for (seed, op_count) and runs it on a fresh structure.
Digest run_script_for(std::string_view structure_id, std::uint64_t seed, std::size_t op_count,
                      std::size_t block_capacity = 0);

}  // namespace seqbench
