#include "sequence.hpp"

#include "dispatch.hpp"

namespace seqbench {

const std::vector<std::string_view>& structure_ids() {
  static const std::vector<std::string_view> ids = {
      NoCacheList::kId, LinkedList::kId, SingleList::kId, ArrayList::kId,
      ArrayRing::kId,   ArrayBlock::kId, OracleList::kId,
  };
  return ids;
}

bool is_structure_id(std::string_view id) {
  for (const auto& s : structure_ids())
    if (s == id) return true;
  return false;
}

std::unique_ptr<Sequence> make_sequence(std::string_view id, std::size_t block_capacity) {
  return dispatch_structure(id, [&](auto tag) -> std::unique_ptr<Sequence> {
    using S = typename decltype(tag)::type;
    if constexpr (std::is_same_v<S, ArrayBlock>) {
      return std::make_unique<SequenceAdapter<S>>(
          block_capacity == 0 ? ArrayBlock::kDefaultBlockCapacity : block_capacity);
    } else {
      return std::make_unique<SequenceAdapter<S>>();
    }
  });
}

}  // namespace seqbench
