#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "circular.hpp"
#include "common.hpp"

namespace seqbench {

// Two-level circular storage: a resizable circular primary table of handles
// to fixed-capacity circular blocks, plus a block-granularity index cache
// (ordinal of the last accessed block and the user index of its first
// element). Inserts into a full block split it in half; removals merge a
// block with its neighbor once the pair fits in two thirds of a block, so
// blocks stay roughly one-third free and no operation ever moves more than
// half a block of elements plus half the primary table of handles.
class ArrayBlock {
public:
  static constexpr const char* kId = "arrayblock";
  static constexpr std::size_t kDefaultBlockCapacity = 2048;
  static constexpr std::size_t kMinPrimaryCapacity = 8;

  explicit ArrayBlock(std::size_t block_capacity = kDefaultBlockCapacity)
      : bcap_(block_capacity), bmask_(block_capacity - 1) {
    if (block_capacity < 4 || block_capacity > 65536 ||
        (block_capacity & (block_capacity - 1)) != 0)
      throw config_error("arrayblock: block capacity must be a power of two in [4, 65536]");
  }

  ArrayBlock(const ArrayBlock&) = delete;
  ArrayBlock& operator=(const ArrayBlock&) = delete;

  ~ArrayBlock() {
    for (std::size_t ord = 0; ord < block_count_; ++ord) delete slot(ord);
    for (Block* b : spare_blocks_) delete b;
  }

  std::size_t size() const { return size_; }
  std::size_t block_capacity() const { return bcap_; }
  std::size_t block_count() const { return block_count_; }
  std::size_t primary_capacity() const { return prim_cap_; }
  std::size_t merge_limit() const { return 2 * bcap_ / 3; }

  bool cache_set() const { return cache_ok_; }
  std::size_t cache_ordinal() const { return cache_ord_; }
  std::size_t cache_index() const { return cache_prefix_; }

  std::vector<std::size_t> block_counts() const {
    std::vector<std::size_t> out;
    out.reserve(block_count_);
    for (std::size_t ord = 0; ord < block_count_; ++ord) out.push_back(slot(ord)->count);
    return out;
  }

  Element item(std::size_t idx) const {
    if (idx >= size_) throw index_error("arrayblock: item index out of range");
    const Loc loc = locate(idx);
    const Block* b = slot(loc.ord);
    return b->slots[(b->lower + loc.off) & bmask_];
  }

  void insert(std::size_t idx, Element v) {
    if (idx > size_) throw index_error("arrayblock: insert index out of range");
    if (size_ == 0) {
      Block* b = take_block();
      b->lower = static_cast<std::uint32_t>(bcap_ / 3);
      b->count = 1;
      b->slots[b->lower] = v;
      primary_insert(0, b);
      size_ = 1;
      set_cache(0, 0);
      return;
    }
    std::size_t ord, off, prefix;
    if (idx == size_) {
      ord = block_count_ - 1;
      const Block* lb = slot(ord);
      prefix = size_ - lb->count;
      off = lb->count;
    } else {
      const Loc loc = locate(idx);
      ord = loc.ord;
      off = loc.off;
      prefix = loc.prefix;
    }
    Block* b = slot(ord);
    if (b->count < bcap_) {
      block_insert(b, off, v);
      set_cache(ord, prefix);
    } else {
      split_insert(ord, off, prefix, v);
    }
    ++size_;
  }

  Element remove(std::size_t idx) {
    if (idx >= size_) throw index_error("arrayblock: remove index out of range");
    const Loc loc = locate(idx);
    Block* b = slot(loc.ord);
    const Element v = b->slots[(b->lower + loc.off) & bmask_];
    if (b->count == 1) {
      primary_remove(loc.ord);
      give_block(b);
      --size_;
      if (block_count_ == 0) {
        cache_ok_ = false;
        cache_ord_ = cache_prefix_ = 0;
      } else if (loc.ord < block_count_) {
        set_cache(loc.ord, loc.prefix);  // successor slid into this ordinal
      } else {
        set_cache(loc.ord - 1, loc.prefix - slot(loc.ord - 1)->count);
      }
      return v;
    }
    block_remove(b, loc.off);
    --size_;
    set_cache(loc.ord, loc.prefix);
    maybe_merge(loc.ord, loc.prefix);
    return v;
  }

  void add_first(Element v) { insert(0, v); }
  void add_last(Element v) { insert(size_, v); }

  Element remove_first() {
    if (size_ == 0) throw underflow_error("arrayblock: remove_first on empty");
    return remove(0);
  }

  Element remove_last() {
    if (size_ == 0) throw underflow_error("arrayblock: remove_last on empty");
    return remove(size_ - 1);
  }

  // Model: header words, the primary slot area, and each block at its fixed
  // capacity plus a three-word block header.
  std::uint64_t footprint_bytes() const {
    return 9 * 8 + static_cast<std::uint64_t>(prim_cap_) * 8 +
           static_cast<std::uint64_t>(block_count_) * (static_cast<std::uint64_t>(bcap_) * 8 + 24);
  }

  void set_instrumented(bool on) { instr_ = on; }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }

  bool validate() const {
    if ((bcap_ & (bcap_ - 1)) != 0) return false;
    if (prim_cap_ != 0 &&
        (prim_cap_ < kMinPrimaryCapacity || (prim_cap_ & (prim_cap_ - 1)) != 0))
      return false;
    if (block_count_ > prim_cap_) return false;
    if (prim_cap_ != 0 && prim_lower_ >= prim_cap_) return false;
    if ((size_ == 0) != (block_count_ == 0)) return false;
    if (size_ == 0 && cache_ok_) return false;
    std::size_t sum = 0;
    for (std::size_t ord = 0; ord < block_count_; ++ord) {
      const Block* b = slot(ord);
      if (b == nullptr) return false;
      if (b->count == 0 || b->count > bcap_) return false;
      if (b->lower >= bcap_) return false;
      sum += b->count;
    }
    if (sum != size_) return false;
    if (cache_ok_) {
      if (cache_ord_ >= block_count_) return false;
      std::size_t prefix = 0;
      for (std::size_t ord = 0; ord < cache_ord_; ++ord) prefix += slot(ord)->count;
      if (prefix != cache_prefix_) return false;
    }
    return true;
  }

private:
  struct Block {
    std::unique_ptr<Element[]> slots;
    std::uint32_t lower = 0;
    std::uint32_t count = 0;
  };

  struct Loc {
    std::size_t ord;
    std::size_t off;
    std::size_t prefix;
  };

  static std::size_t absdiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

  Block*& slot(std::size_t ord) { return prim_[(prim_lower_ + ord) & pmask_]; }
  Block* slot(std::size_t ord) const { return prim_[(prim_lower_ + ord) & pmask_]; }

  void set_cache(std::size_t ord, std::size_t prefix) const {
    cache_ord_ = ord;
    cache_prefix_ = prefix;
    cache_ok_ = true;
  }

  // Walk block counts from whichever anchor (front, back, cached block) is
  // nearest in user-index distance.
  Loc locate(std::size_t idx) const {
    const std::size_t d_front = idx;
    const std::size_t d_back = size_ - idx;
    const std::size_t d_cache =
        cache_ok_ ? absdiff(idx, cache_prefix_) : static_cast<std::size_t>(-1);
    std::size_t ord, prefix;
    bool from_cache = false;
    if (d_cache <= d_front && d_cache <= d_back) {
      ord = cache_ord_;
      prefix = cache_prefix_;
      from_cache = true;
    } else if (d_front <= d_back) {
      ord = 0;
      prefix = 0;
    } else {
      ord = block_count_ - 1;
      prefix = size_ - slot(ord)->count;
    }
    std::size_t walked = 0;
    while (idx < prefix) {
      --ord;
      prefix -= slot(ord)->count;
      ++walked;
    }
    while (idx >= prefix + slot(ord)->count) {
      prefix += slot(ord)->count;
      ++ord;
      ++walked;
    }
    if (instr_) {
      counters_.steps += walked;
      if (from_cache && walked == 0) ++counters_.cache_hits;
    }
    set_cache(ord, prefix);
    return {ord, idx - prefix, prefix};
  }

  void block_insert(Block* b, std::size_t off, Element v) {
    if (off < b->count - off) {
      circ_shift_down(b->slots.get(), bmask_, b->lower, off);
      b->lower = static_cast<std::uint32_t>((b->lower - 1) & bmask_);
      if (instr_) counters_.elem_moves += off;
    } else if (off < b->count) {
      circ_shift_up(b->slots.get(), bmask_, (b->lower + off) & bmask_, b->count - off);
      if (instr_) counters_.elem_moves += b->count - off;
    }
    b->slots[(b->lower + off) & bmask_] = v;
    ++b->count;
  }

  void block_remove(Block* b, std::size_t off) {
    if (off < b->count - 1 - off) {
      circ_shift_up(b->slots.get(), bmask_, b->lower, off);
      b->lower = static_cast<std::uint32_t>((b->lower + 1) & bmask_);
      if (instr_) counters_.elem_moves += off;
    } else if (off + 1 < b->count) {
      circ_shift_down(b->slots.get(), bmask_, (b->lower + off + 1) & bmask_, b->count - 1 - off);
      if (instr_) counters_.elem_moves += b->count - 1 - off;
    }
    --b->count;
  }

  // Full block: split in half, routing the copy so the half that moves into
  // the fresh block carries the insertion gap with it. The fresh block lands
  // before or after the original depending on which half moved, keeping the
  // per-operation element moves at exactly half a block.
  void split_insert(std::size_t ord, std::size_t off, std::size_t prefix, Element v) {
    if (instr_) ++counters_.splits;
    Block* b = slot(ord);
    Block* nb = take_block();
    const std::size_t half = bcap_ / 2;
    nb->count = static_cast<std::uint32_t>(half + 1);
    nb->lower = static_cast<std::uint32_t>((bcap_ - nb->count) / 2);
    std::size_t d = nb->lower;
    if (off >= half) {
      for (std::size_t u = half; u < off; ++u)
        nb->slots[d++ & bmask_] = b->slots[(b->lower + u) & bmask_];
      nb->slots[d++ & bmask_] = v;
      for (std::size_t u = off; u < bcap_; ++u)
        nb->slots[d++ & bmask_] = b->slots[(b->lower + u) & bmask_];
      b->count = static_cast<std::uint32_t>(half);
      if (instr_) counters_.elem_moves += half;
      primary_insert(ord + 1, nb);
      set_cache(ord + 1, prefix + half);
    } else {
      for (std::size_t u = 0; u < off; ++u)
        nb->slots[d++ & bmask_] = b->slots[(b->lower + u) & bmask_];
      nb->slots[d++ & bmask_] = v;
      for (std::size_t u = off; u < half; ++u)
        nb->slots[d++ & bmask_] = b->slots[(b->lower + u) & bmask_];
      b->lower = static_cast<std::uint32_t>((b->lower + half) & bmask_);
      b->count = static_cast<std::uint32_t>(bcap_ - half);
      if (instr_) counters_.elem_moves += half;
      primary_insert(ord, nb);
      set_cache(ord, prefix);
    }
  }

  // Merge the block at `ord` (whose first element has user index `prefix`)
  // with its successor, or predecessor when it is the last block, once the
  // pair holds at most two thirds of a block. The smaller side is copied.
  void maybe_merge(std::size_t ord, std::size_t prefix) {
    if (block_count_ < 2) return;
    const std::size_t a_ord = (ord + 1 < block_count_) ? ord : ord - 1;
    Block* a = slot(a_ord);
    Block* c = slot(a_ord + 1);
    if (static_cast<std::size_t>(a->count) + c->count > merge_limit()) return;
    if (instr_) ++counters_.merges;
    const std::size_t a_prefix = (a_ord == ord) ? prefix : prefix - a->count;
    if (c->count <= a->count) {
      for (std::size_t u = 0; u < c->count; ++u)
        a->slots[(a->lower + a->count + u) & bmask_] = c->slots[(c->lower + u) & bmask_];
      if (instr_) counters_.elem_moves += c->count;
      a->count = static_cast<std::uint32_t>(a->count + c->count);
      primary_remove(a_ord + 1);
      give_block(c);
    } else {
      c->lower = static_cast<std::uint32_t>((c->lower - a->count) & bmask_);
      for (std::size_t u = 0; u < a->count; ++u)
        c->slots[(c->lower + u) & bmask_] = a->slots[(a->lower + u) & bmask_];
      if (instr_) counters_.elem_moves += a->count;
      c->count = static_cast<std::uint32_t>(c->count + a->count);
      primary_remove(a_ord);
      give_block(a);
    }
    set_cache(a_ord, a_prefix);
  }

  void primary_insert(std::size_t at_ord, Block* nb) {
    if (block_count_ == prim_cap_) primary_grow();
    if (at_ord == 0) {
      prim_lower_ = (prim_lower_ - 1) & pmask_;
    } else if (at_ord < block_count_ - at_ord) {
      circ_shift_down(prim_.get(), pmask_, prim_lower_, at_ord);
      prim_lower_ = (prim_lower_ - 1) & pmask_;
      if (instr_) counters_.slot_moves += at_ord;
    } else if (at_ord < block_count_) {
      circ_shift_up(prim_.get(), pmask_, (prim_lower_ + at_ord) & pmask_, block_count_ - at_ord);
      if (instr_) counters_.slot_moves += block_count_ - at_ord;
    }
    prim_[(prim_lower_ + at_ord) & pmask_] = nb;
    ++block_count_;
  }

  void primary_remove(std::size_t at_ord) {
    if (at_ord == 0) {
      prim_lower_ = (prim_lower_ + 1) & pmask_;
    } else if (at_ord < block_count_ - 1 - at_ord) {
      circ_shift_up(prim_.get(), pmask_, prim_lower_, at_ord);
      prim_lower_ = (prim_lower_ + 1) & pmask_;
      if (instr_) counters_.slot_moves += at_ord;
    } else if (at_ord + 1 < block_count_) {
      circ_shift_down(prim_.get(), pmask_, (prim_lower_ + at_ord + 1) & pmask_,
                      block_count_ - 1 - at_ord);
      if (instr_) counters_.slot_moves += block_count_ - 1 - at_ord;
    }
    --block_count_;
  }

  void primary_grow() {
    const std::size_t ncap = prim_cap_ == 0 ? kMinPrimaryCapacity : prim_cap_ * 2;
    auto nprim = std::make_unique<Block*[]>(ncap);
    for (std::size_t ord = 0; ord < block_count_; ++ord) nprim[ord] = slot(ord);
    if (instr_) counters_.grow_moves += block_count_;
    prim_ = std::move(nprim);
    prim_cap_ = ncap;
    pmask_ = ncap - 1;
    prim_lower_ = 0;
  }

  Block* take_block() {
    if (!spare_blocks_.empty()) {
      Block* b = spare_blocks_.back();
      spare_blocks_.pop_back();
      b->lower = 0;
      b->count = 0;
      return b;
    }
    Block* b = new Block;
    b->slots = std::make_unique<Element[]>(bcap_);
    return b;
  }

  void give_block(Block* b) { spare_blocks_.push_back(b); }

  std::size_t bcap_;
  std::size_t bmask_;
  std::unique_ptr<Block*[]> prim_;
  std::size_t prim_cap_ = 0;
  std::size_t pmask_ = 0;
  std::size_t prim_lower_ = 0;
  std::size_t block_count_ = 0;
  std::size_t size_ = 0;
  std::vector<Block*> spare_blocks_;
  mutable std::size_t cache_ord_ = 0;
  mutable std::size_t cache_prefix_ = 0;
  mutable bool cache_ok_ = false;
  mutable Counters counters_;
  bool instr_ = false;
};

}  // namespace seqbench
