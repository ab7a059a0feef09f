#include "script.hpp"

#include "dispatch.hpp"

namespace seqbench {

std::vector<Op> generate_script(std::uint64_t seed, std::size_t op_count) {
  std::vector<Op> ops;
  ops.reserve(op_count);
  SplitMix64 prng(seed);
  std::uint64_t sim_size = 0;
  for (std::size_t i = 0; i < op_count; ++i) {
    Op op{};
    if (sim_size == 0) {
      switch (prng.below(3)) {
        case 0: op.kind = OpKind::kInsert; break;
        case 1: op.kind = OpKind::kAddFirst; break;
        default: op.kind = OpKind::kAddLast; break;
      }
    } else {
      // weights out of 100: inserts 35, removes 32, reads 33
      const std::uint64_t w = prng.below(100);
      if (w < 15) op.kind = OpKind::kInsert;
      else if (w < 25) op.kind = OpKind::kAddFirst;
      else if (w < 35) op.kind = OpKind::kAddLast;
      else if (w < 47) op.kind = OpKind::kRemove;
      else if (w < 57) op.kind = OpKind::kRemoveFirst;
      else if (w < 67) op.kind = OpKind::kRemoveLast;
      else op.kind = OpKind::kItem;
    }
    switch (op.kind) {
      case OpKind::kInsert:
        op.idx = prng.below(sim_size + 1);
        op.value = prng.value62();
        ++sim_size;
        break;
      case OpKind::kAddFirst:
      case OpKind::kAddLast:
        op.value = prng.value62();
        ++sim_size;
        break;
      case OpKind::kRemove:
        op.idx = prng.below(sim_size);
        --sim_size;
        break;
      case OpKind::kRemoveFirst:
      case OpKind::kRemoveLast:
        --sim_size;
        break;
      case OpKind::kItem:
        op.idx = prng.below(sim_size);
        break;
    }
    ops.push_back(op);
  }
  return ops;
}

Digest run_script_for(std::string_view structure_id, std::uint64_t seed, std::size_t op_count,
                      std::size_t block_capacity) {
  const std::vector<Op> ops = generate_script(seed, op_count);
  return dispatch_structure(structure_id, [&](auto tag) {
    using S = typename decltype(tag)::type;
    S seq = make_structure<S>(block_capacity);
    return run_script(seq, ops);
  });
}

}  // namespace seqbench
