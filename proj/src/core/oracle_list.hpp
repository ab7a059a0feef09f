#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace seqbench {

// Reference structure: a growable contiguous array used naively, every
// insert/remove shifts. All other structures must be behaviorally
// indistinguishable from this one.
class OracleList {
public:
  static constexpr const char* kId = "oracle";

  std::size_t size() const { return data_.size(); }

  Element item(std::size_t idx) const {
    if (idx >= data_.size()) throw index_error("oracle: item index out of range");
    return data_[idx];
  }

  void insert(std::size_t idx, Element v) {
    if (idx > data_.size()) throw index_error("oracle: insert index out of range");
    data_.insert(data_.begin() + static_cast<std::ptrdiff_t>(idx), v);
  }

  Element remove(std::size_t idx) {
    if (idx >= data_.size()) throw index_error("oracle: remove index out of range");
    const Element v = data_[idx];
    data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(idx));
    return v;
  }

  void add_first(Element v) { insert(0, v); }
  void add_last(Element v) { data_.push_back(v); }

  Element remove_first() {
    if (data_.empty()) throw underflow_error("oracle: remove_first on empty");
    return remove(0);
  }

  Element remove_last() {
    if (data_.empty()) throw underflow_error("oracle: remove_last on empty");
    const Element v = data_.back();
    data_.pop_back();
    return v;
  }

  // Model: header (storage pointer, capacity, size) plus one word per slot.
  std::uint64_t footprint_bytes() const {
    return 3 * 8 + static_cast<std::uint64_t>(data_.capacity()) * 8;
  }

  void set_instrumented(bool on) { instr_ = on; }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }
  bool validate() const { return true; }

private:
  std::vector<Element> data_;
  Counters counters_;
  bool instr_ = false;
};

}  // namespace seqbench
