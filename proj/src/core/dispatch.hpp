#pragma once

#include <string>
#include <string_view>
#include <type_traits>

#include "array_block.hpp"
#include "array_list.hpp"
#include "array_ring.hpp"
#include "common.hpp"
#include "linked_lists.hpp"
#include "oracle_list.hpp"

namespace seqbench {

// Calls f with a std::type_identity tag for the structure named by id, so
// callers can run code templated on the concrete class.
template <class F>
decltype(auto) dispatch_structure(std::string_view id, F&& f) {
  if (id == OracleList::kId) return f(std::type_identity<OracleList>{});
  if (id == NoCacheList::kId) return f(std::type_identity<NoCacheList>{});
  if (id == LinkedList::kId) return f(std::type_identity<LinkedList>{});
  if (id == SingleList::kId) return f(std::type_identity<SingleList>{});
  if (id == ArrayList::kId) return f(std::type_identity<ArrayList>{});
  if (id == ArrayRing::kId) return f(std::type_identity<ArrayRing>{});
  if (id == ArrayBlock::kId) return f(std::type_identity<ArrayBlock>{});
  throw config_error("unknown structure id: " + std::string(id));
}

// block_capacity of 0 selects the ArrayBlock default; other structures
// ignore it.
template <class S>
S make_structure(std::size_t block_capacity = 0) {
  if constexpr (std::is_same_v<S, ArrayBlock>) {
    return S(block_capacity == 0 ? ArrayBlock::kDefaultBlockCapacity : block_capacity);
  } else {
    return S();
  }
}

}  // namespace seqbench
