#pragma once

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <vector>

#include "common.hpp"

namespace seqbench {

struct DoublyNode {
  Element value;
  DoublyNode* prev;
  DoublyNode* next;
};

struct SinglyNode {
  Element value;
  SinglyNode* next;
};

// Chunked arena with a free list threaded through `next`. Keeps nodes dense
// and makes allocation a pointer bump.
template <class Node>
class NodePool {
public:
  static constexpr std::size_t kChunk = 4096;

  Node* take() {
    if (free_ != nullptr) {
      Node* n = free_;
      free_ = n->next;
      return n;
    }
    if (used_ == kChunk || chunks_.empty()) {
      chunks_.push_back(std::make_unique<Node[]>(kChunk));
      used_ = 0;
    }
    return &chunks_.back()[used_++];
  }

  void give(Node* n) {
    n->next = free_;
    free_ = n;
  }

private:
  std::vector<std::unique_ptr<Node[]>> chunks_;
  std::size_t used_ = 0;
  Node* free_ = nullptr;
};

// Doubly linked list with head/tail pointers and a size cache, but no index
// cache: every locate bisects on size and walks from the nearer end.
class NoCacheList {
public:
  static constexpr const char* kId = "nocachelist";

  std::size_t size() const { return size_; }

  Element item(std::size_t idx) const { return locate(idx)->value; }

  void insert(std::size_t idx, Element v) {
    if (idx > size_) throw index_error("nocachelist: insert index out of range");
    DoublyNode* n = pool_.take();
    n->value = v;
    if (idx == size_) {
      link_tail(n);
    } else {
      link_before(locate(idx), n);
    }
    ++size_;
  }

  Element remove(std::size_t idx) {
    DoublyNode* n = locate(idx);
    const Element v = n->value;
    unlink(n);
    pool_.give(n);
    --size_;
    return v;
  }

  void add_first(Element v) { insert(0, v); }
  void add_last(Element v) { insert(size_, v); }

  Element remove_first() {
    if (size_ == 0) throw underflow_error("nocachelist: remove_first on empty");
    return remove(0);
  }

  Element remove_last() {
    if (size_ == 0) throw underflow_error("nocachelist: remove_last on empty");
    return remove(size_ - 1);
  }

  // Model: header (first link, last link, size) plus three words per cell.
  std::uint64_t footprint_bytes() const {
    return 3 * 8 + static_cast<std::uint64_t>(size_) * 24;
  }

  void set_instrumented(bool on) { instr_ = on; }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }

  bool validate() const {
    std::size_t n = 0;
    const DoublyNode* prev = nullptr;
    for (const DoublyNode* p = first_; p != nullptr; p = p->next) {
      if (p->prev != prev) return false;
      prev = p;
      if (++n > size_) return false;
    }
    if (n != size_ || prev != last_) return false;
    if ((size_ == 0) != (first_ == nullptr) || (size_ == 0) != (last_ == nullptr)) return false;
    return true;
  }

private:
  DoublyNode* locate(std::size_t idx) const {
    if (idx >= size_) throw index_error("nocachelist: item index out of range");
    DoublyNode* p;
    std::size_t walked;
    if (idx < size_ / 2) {
      p = first_;
      walked = idx;
      for (std::size_t i = 0; i < idx; ++i) p = p->next;
    } else {
      p = last_;
      walked = size_ - 1 - idx;
      for (std::size_t i = size_ - 1; i > idx; --i) p = p->prev;
    }
    if (instr_) counters_.steps += walked;
    return p;
  }

  void link_tail(DoublyNode* n) {
    n->prev = last_;
    n->next = nullptr;
    if (last_ != nullptr)
      last_->next = n;
    else
      first_ = n;
    last_ = n;
  }

  void link_before(DoublyNode* at, DoublyNode* n) {
    n->prev = at->prev;
    n->next = at;
    if (at->prev != nullptr)
      at->prev->next = n;
    else
      first_ = n;
    at->prev = n;
  }

  void unlink(DoublyNode* n) {
    if (n->prev != nullptr)
      n->prev->next = n->next;
    else
      first_ = n->next;
    if (n->next != nullptr)
      n->next->prev = n->prev;
    else
      last_ = n->prev;
  }

  NodePool<DoublyNode> pool_;
  DoublyNode* first_ = nullptr;
  DoublyNode* last_ = nullptr;
  std::size_t size_ = 0;
  mutable Counters counters_;
  bool instr_ = false;
};

// Doubly linked list with the same layout plus a last-visited-index cache.
// Locates walk from whichever of first, last or the cached link is nearest;
// the double linking lets the cache be walked in both directions.
class LinkedList {
public:
  static constexpr const char* kId = "linkedlist";

  std::size_t size() const { return size_; }

  bool cache_set() const { return cache_node_ != nullptr; }
  std::size_t cache_index() const { return cache_idx_; }

  Element item(std::size_t idx) const { return locate(idx)->value; }

  void insert(std::size_t idx, Element v) {
    if (idx > size_) throw index_error("linkedlist: insert index out of range");
    DoublyNode* n = pool_.take();
    n->value = v;
    if (idx == size_) {
      link_tail(n);
    } else {
      link_before(locate(idx), n);
    }
    ++size_;
    set_cache(idx, n);
  }

  Element remove(std::size_t idx) {
    DoublyNode* n = locate(idx);
    const Element v = n->value;
    reanchor_cache_for_remove(idx, n);
    unlink(n);
    pool_.give(n);
    --size_;
    return v;
  }

  void add_first(Element v) { insert(0, v); }
  void add_last(Element v) { insert(size_, v); }

  Element remove_first() {
    if (size_ == 0) throw underflow_error("linkedlist: remove_first on empty");
    return remove(0);
  }

  Element remove_last() {
    if (size_ == 0) throw underflow_error("linkedlist: remove_last on empty");
    return remove(size_ - 1);
  }

  // Model: header (first, last, size, cache link, cache index) + 3 words/cell.
  std::uint64_t footprint_bytes() const {
    return 5 * 8 + static_cast<std::uint64_t>(size_) * 24;
  }

  void set_instrumented(bool on) { instr_ = on; }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }

  bool validate() const {
    std::size_t n = 0;
    const DoublyNode* prev = nullptr;
    for (const DoublyNode* p = first_; p != nullptr; p = p->next) {
      if (p->prev != prev) return false;
      prev = p;
      if (++n > size_) return false;
    }
    if (n != size_ || prev != last_) return false;
    if (size_ == 0 && cache_node_ != nullptr) return false;
    if (cache_node_ != nullptr) {
      if (cache_idx_ >= size_) return false;
      const DoublyNode* p = first_;
      for (std::size_t i = 0; i < cache_idx_; ++i) p = p->next;
      if (p != cache_node_) return false;
    }
    return true;
  }

private:
  static std::size_t absdiff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

  DoublyNode* locate(std::size_t idx) const {
    if (idx >= size_) throw index_error("linkedlist: item index out of range");
    const std::size_t d_first = idx;
    const std::size_t d_last = size_ - 1 - idx;
    const std::size_t d_cache =
        cache_node_ != nullptr ? absdiff(idx, cache_idx_) : static_cast<std::size_t>(-1);
    DoublyNode* p;
    // tie order: cache, then first, then last
    if (d_cache <= d_first && d_cache <= d_last) {
      if (instr_ && d_cache == 0) ++counters_.cache_hits;
      p = cache_node_;
      if (idx >= cache_idx_) {
        for (std::size_t i = cache_idx_; i < idx; ++i) p = p->next;
      } else {
        for (std::size_t i = cache_idx_; i > idx; --i) p = p->prev;
      }
      if (instr_) counters_.steps += d_cache;
    } else if (d_first <= d_last) {
      p = first_;
      for (std::size_t i = 0; i < idx; ++i) p = p->next;
      if (instr_) counters_.steps += d_first;
    } else {
      p = last_;
      for (std::size_t i = size_ - 1; i > idx; --i) p = p->prev;
      if (instr_) counters_.steps += d_last;
    }
    cache_node_ = p;
    cache_idx_ = idx;
    return p;
  }

  void set_cache(std::size_t idx, DoublyNode* n) const {
    cache_node_ = n;
    cache_idx_ = idx;
  }

  // Remove replaces the cache wholesale: successor of the removed link
  // (which inherits its index), else predecessor, else cleared.
  void reanchor_cache_for_remove(std::size_t idx, DoublyNode* n) const {
    if (n->next != nullptr) {
      set_cache(idx, n->next);
    } else if (n->prev != nullptr) {
      set_cache(idx - 1, n->prev);
    } else {
      cache_node_ = nullptr;
      cache_idx_ = 0;
    }
  }

  void link_tail(DoublyNode* n) {
    n->prev = last_;
    n->next = nullptr;
    if (last_ != nullptr)
      last_->next = n;
    else
      first_ = n;
    last_ = n;
  }

  void link_before(DoublyNode* at, DoublyNode* n) {
    n->prev = at->prev;
    n->next = at;
    if (at->prev != nullptr)
      at->prev->next = n;
    else
      first_ = n;
    at->prev = n;
  }

  void unlink(DoublyNode* n) {
    if (n->prev != nullptr)
      n->prev->next = n->next;
    else
      first_ = n->next;
    if (n->next != nullptr)
      n->next->prev = n->prev;
    else
      last_ = n->prev;
  }

  NodePool<DoublyNode> pool_;
  DoublyNode* first_ = nullptr;
  DoublyNode* last_ = nullptr;
  std::size_t size_ = 0;
  mutable DoublyNode* cache_node_ = nullptr;
  mutable std::size_t cache_idx_ = 0;
  mutable Counters counters_;
  bool instr_ = false;
};

// One-way linked list with size and last-visited-index caches. The cache is
// only useful when moving rightward; anything to its left restarts from the
// head. A tail pointer keeps add_last constant.
class SingleList {
public:
  static constexpr const char* kId = "singlelist";

  std::size_t size() const { return size_; }

  bool cache_set() const { return cache_node_ != nullptr; }
  std::size_t cache_index() const { return cache_idx_; }

  Element item(std::size_t idx) const { return locate(idx)->value; }

  void insert(std::size_t idx, Element v) {
    if (idx > size_) throw index_error("singlelist: insert index out of range");
    SinglyNode* n = pool_.take();
    n->value = v;
    if (idx == 0) {
      n->next = first_;
      first_ = n;
      if (last_ == nullptr) last_ = n;
    } else if (idx == size_) {
      n->next = nullptr;
      last_->next = n;
      last_ = n;
    } else {
      SinglyNode* pred = locate(idx - 1);
      n->next = pred->next;
      pred->next = n;
    }
    ++size_;
    cache_node_ = n;
    cache_idx_ = idx;
  }

  Element remove(std::size_t idx) {
    if (idx >= size_) throw index_error("singlelist: remove index out of range");
    SinglyNode* target;
    SinglyNode* pred = nullptr;
    if (idx == 0) {
      target = first_;
      first_ = target->next;
      if (first_ == nullptr) last_ = nullptr;
    } else {
      pred = locate(idx - 1);
      target = pred->next;
      pred->next = target->next;
      if (target == last_) last_ = pred;
    }
    const Element v = target->value;
    if (target->next != nullptr) {
      cache_node_ = target->next;
      cache_idx_ = idx;
    } else if (pred != nullptr) {
      cache_node_ = pred;
      cache_idx_ = idx - 1;
    } else if (first_ != nullptr) {
      cache_node_ = first_;
      cache_idx_ = 0;
    } else {
      cache_node_ = nullptr;
      cache_idx_ = 0;
    }
    pool_.give(target);
    --size_;
    return v;
  }

  void add_first(Element v) { insert(0, v); }
  void add_last(Element v) { insert(size_, v); }

  Element remove_first() {
    if (size_ == 0) throw underflow_error("singlelist: remove_first on empty");
    return remove(0);
  }

  Element remove_last() {
    if (size_ == 0) throw underflow_error("singlelist: remove_last on empty");
    return remove(size_ - 1);
  }

  // Model: header (first, last, size, cache link, cache index) + 2 words/cell.
  std::uint64_t footprint_bytes() const {
    return 5 * 8 + static_cast<std::uint64_t>(size_) * 16;
  }

  void set_instrumented(bool on) { instr_ = on; }
  const Counters& counters() const { return counters_; }
  void reset_counters() { counters_ = Counters{}; }

  bool validate() const {
    std::size_t n = 0;
    const SinglyNode* prev = nullptr;
    for (const SinglyNode* p = first_; p != nullptr; p = p->next) {
      prev = p;
      if (++n > size_) return false;
    }
    if (n != size_ || prev != last_) return false;
    if (size_ == 0 && cache_node_ != nullptr) return false;
    if (cache_node_ != nullptr) {
      if (cache_idx_ >= size_) return false;
      const SinglyNode* p = first_;
      for (std::size_t i = 0; i < cache_idx_; ++i) p = p->next;
      if (p != cache_node_) return false;
    }
    return true;
  }

private:
  SinglyNode* locate(std::size_t idx) const {
    if (idx >= size_) throw index_error("singlelist: item index out of range");
    SinglyNode* p;
    std::size_t from;
    if (cache_node_ != nullptr && cache_idx_ <= idx) {
      p = cache_node_;
      from = cache_idx_;
      if (instr_ && idx == cache_idx_) ++counters_.cache_hits;
    } else {
      p = first_;
      from = 0;
    }
    if (instr_) counters_.steps += idx - from;
    for (std::size_t i = from; i < idx; ++i) p = p->next;
    cache_node_ = p;
    cache_idx_ = idx;
    return p;
  }

  NodePool<SinglyNode> pool_;
  SinglyNode* first_ = nullptr;
  SinglyNode* last_ = nullptr;
  std::size_t size_ = 0;
  mutable SinglyNode* cache_node_ = nullptr;
  mutable std::size_t cache_idx_ = 0;
  mutable Counters counters_;
  bool instr_ = false;
};

}  // namespace seqbench
