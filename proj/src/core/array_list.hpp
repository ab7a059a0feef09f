#pragma once

#include <cstdint>
#include <cstring>
#include <memory>

#include "common.hpp"

namespace seqbench {

// Contiguous storage with the used area left-aligned: user index == internal
// index. Capacity is a power of two, doubled when full; storage is allocated
// on first use and never shrinks.
class ArrayList {
public:
  static constexpr const char* kId = "arraylist";
  static constexpr std::size_t kMinCapacity = 16;

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }

  Element item(std::size_t idx) const {
    if (idx >= size_) throw index_error("arraylist: item index out of range");
    return storage_[idx];
  }

  void insert(std::size_t idx, Element v) {
    if (idx > size_) throw index_error("arraylist: insert index out of range");
    if (size_ == capacity_) grow();
    if (idx < size_) {
      std::memmove(storage_.get() + idx + 1, storage_.get() + idx,
                   (size_ - idx) * sizeof(Element));
      if (instr_) counters_.elem_moves += size_ - idx;
    }
    storage_[idx] = v;
    ++size_;
  }

  Element remove(std::size_t idx) {
    if (idx >= size_) throw index_error("arraylist: remove index out of range");
    const Element v = storage_[idx];
    if (idx + 1 < size_) {
      std::memmove(storage_.get() + idx, storage_.get() + idx + 1,
                   (size_ - idx - 1) * sizeof(Element));
      if (instr_) counters_.elem_moves += size_ - idx - 1;
    }
    --size_;
    return v;
  }

  void add_first(Element v) { insert(0, v); }

  void add_last(Element v) {
    if (size_ == capacity_) grow();
    storage_[size_++] = v;
  }

  Element remove_first() {
    if (size_ == 0) throw underflow_error("arraylist: remove_first on empty");
    return remove(0);
  }

  Element remove_last() {
    if (size_ == 0) throw underflow_error("arraylist: remove_last on empty");
    return storage_[--size_];
  }

  // Model: header (storage pointer, capacity, size) plus one word per slot.
  std::uint64_t footprint_bytes() const {
    return 3 * 8 + static_cast<std::uint64_t>(capacity_) * 8;
  }

  void set_instrumented(bool on) { instr_ = on; }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }

  bool validate() const {
    if (size_ > capacity_) return false;
    if (capacity_ != 0 && (capacity_ < kMinCapacity || (capacity_ & (capacity_ - 1)) != 0))
      return false;
    return true;
  }

private:
  void grow() {
    const std::size_t ncap = capacity_ == 0 ? kMinCapacity : capacity_ * 2;
    auto nstorage = std::make_unique<Element[]>(ncap);
    if (size_ > 0) {
      std::memcpy(nstorage.get(), storage_.get(), size_ * sizeof(Element));
      if (instr_) counters_.grow_moves += size_;
    }
    storage_ = std::move(nstorage);
    capacity_ = ncap;
  }

  std::unique_ptr<Element[]> storage_;
  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
  Counters counters_;
  bool instr_ = false;
};

}  // namespace seqbench
