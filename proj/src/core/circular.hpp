#pragma once

#include <algorithm>
#include <cstddef>
#include <cstring>

namespace seqbench {

// Shift helpers for power-of-two circular buffers. A run of `len` occupied
// slots starting at internal index `start` (slot j of the run lives at
// (start + j) & mask) moves one position down or up. The destination slot
// just outside the run must be free; overlap inside a linear segment is
// left to memmove.

template <class T>
void circ_shift_down(T* buf, std::size_t mask, std::size_t start, std::size_t len) {
  const std::size_t cap = mask + 1;
  while (len > 0) {
    const std::size_t run = std::min(len, cap - start);
    if (start == 0) {
      buf[mask] = buf[0];
      if (run > 1) std::memmove(buf, buf + 1, (run - 1) * sizeof(T));
    } else {
      std::memmove(buf + start - 1, buf + start, run * sizeof(T));
    }
    start = (start + run) & mask;
    len -= run;
  }
}

template <class T>
void circ_shift_up(T* buf, std::size_t mask, std::size_t start, std::size_t len) {
  if (len == 0) return;
  const std::size_t cap = mask + 1;
  const std::size_t head_run = std::min(len, cap - start);
  const std::size_t tail_run = len - head_run;  // wrapped part occupying [0, tail_run)
  // The wrapped tail moves first so slot 0 is free for the head's last element.
  if (tail_run > 0) std::memmove(buf + 1, buf, tail_run * sizeof(T));
  if (start + head_run == cap) {
    buf[0] = buf[cap - 1];
    if (head_run > 1) std::memmove(buf + start + 1, buf + start, (head_run - 1) * sizeof(T));
  } else {
    std::memmove(buf + start + 1, buf + start, head_run * sizeof(T));
  }
}

}  // namespace seqbench
