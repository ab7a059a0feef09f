#pragma once

#include <cstdint>
#include <cstring>
#include <memory>

#include "circular.hpp"
#include "common.hpp"

namespace seqbench {

// Maps a user index to the internal slot of a circular buffer.
inline std::size_t ring_internal_index(std::size_t lower, std::size_t capacity,
                                       std::size_t user_index) {
  return (lower + user_index) & (capacity - 1);
}

// Circular storage: `lower` is the internal index of user index 0, slots wrap
// with a power-of-two mask. Inserts and removals shift whichever side is
// shorter, so end operations never move elements.
class ArrayRing {
public:
  static constexpr const char* kId = "arrayring";
  static constexpr std::size_t kMinCapacity = 16;

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t lower() const { return lower_; }

  Element item(std::size_t idx) const {
    if (idx >= size_) throw index_error("arrayring: item index out of range");
    return storage_[slot(idx)];
  }

  void insert(std::size_t idx, Element v) {
    if (idx > size_) throw index_error("arrayring: insert index out of range");
    if (size_ == capacity_) grow();
    if (idx == 0) {
      lower_ = (lower_ - 1) & mask_;
    } else if (idx < size_ - idx) {
      // shift user range [0, idx) one slot down and pull lower with it
      circ_shift_down(storage_.get(), mask_, lower_, idx);
      lower_ = (lower_ - 1) & mask_;
      if (instr_) counters_.elem_moves += idx;
    } else if (idx < size_) {
      circ_shift_up(storage_.get(), mask_, slot(idx), size_ - idx);
      if (instr_) counters_.elem_moves += size_ - idx;
    }
    storage_[slot(idx)] = v;
    ++size_;
  }

  Element remove(std::size_t idx) {
    if (idx >= size_) throw index_error("arrayring: remove index out of range");
    const Element v = storage_[slot(idx)];
    if (idx == 0) {
      lower_ = (lower_ + 1) & mask_;
    } else if (idx < size_ - 1 - idx) {
      // shift user range [0, idx) one slot up into the vacated position
      circ_shift_up(storage_.get(), mask_, lower_, idx);
      lower_ = (lower_ + 1) & mask_;
      if (instr_) counters_.elem_moves += idx;
    } else if (idx + 1 < size_) {
      circ_shift_down(storage_.get(), mask_, slot(idx + 1), size_ - 1 - idx);
      if (instr_) counters_.elem_moves += size_ - 1 - idx;
    }
    --size_;
    return v;
  }

  void add_first(Element v) { insert(0, v); }
  void add_last(Element v) { insert(size_, v); }

  Element remove_first() {
    if (size_ == 0) throw underflow_error("arrayring: remove_first on empty");
    return remove(0);
  }

  Element remove_last() {
    if (size_ == 0) throw underflow_error("arrayring: remove_last on empty");
    return remove(size_ - 1);
  }

  // Model: header (storage pointer, capacity, size, lower) plus the slots.
  std::uint64_t footprint_bytes() const {
    return 4 * 8 + static_cast<std::uint64_t>(capacity_) * 8;
  }

  void set_instrumented(bool on) { instr_ = on; }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }

  bool validate() const {
    if (size_ > capacity_) return false;
    if (capacity_ != 0 && (capacity_ < kMinCapacity || (capacity_ & (capacity_ - 1)) != 0))
      return false;
    if (capacity_ != 0 && lower_ >= capacity_) return false;
    return true;
  }

private:
  std::size_t slot(std::size_t idx) const { return (lower_ + idx) & mask_; }

  void grow() {
    const std::size_t ncap = capacity_ == 0 ? kMinCapacity : capacity_ * 2;
    auto nstorage = std::make_unique<Element[]>(ncap);
    if (size_ > 0) {
      // linearize while relocating so lower is 0 afterwards
      const std::size_t head = std::min(size_, capacity_ - lower_);
      std::memcpy(nstorage.get(), storage_.get() + lower_, head * sizeof(Element));
      if (head < size_)
        std::memcpy(nstorage.get() + head, storage_.get(), (size_ - head) * sizeof(Element));
      if (instr_) counters_.grow_moves += size_;
    }
    storage_ = std::move(nstorage);
    capacity_ = ncap;
    mask_ = ncap - 1;
    lower_ = 0;
  }

  std::unique_ptr<Element[]> storage_;
  std::size_t capacity_ = 0;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
  std::size_t lower_ = 0;
  Counters counters_;
  bool instr_ = false;
};

}  // namespace seqbench
