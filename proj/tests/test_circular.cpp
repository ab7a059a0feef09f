#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "core/circular.hpp"
#include "core/prng.hpp"

using seqbench::circ_shift_down;
using seqbench::circ_shift_up;

namespace {

// elementwise reference shifts
std::vector<long> ref_down(std::vector<long> buf, std::size_t mask, std::size_t start,
                           std::size_t len) {
  std::vector<long> out = buf;
  for (std::size_t j = 0; j < len; ++j) {
    const std::size_t src = (start + j) & mask;
    out[(src - 1) & mask] = buf[src];
  }
  return out;
}

std::vector<long> ref_up(std::vector<long> buf, std::size_t mask, std::size_t start,
                         std::size_t len) {
  std::vector<long> out = buf;
  for (std::size_t j = 0; j < len; ++j) {
    const std::size_t src = (start + j) & mask;
    out[(src + 1) & mask] = buf[src];
  }
  return out;
}

}  // namespace

TEST_CASE("circular shifts match the elementwise reference") {
  seqbench::SplitMix64 prng(2024);
  for (int iter = 0; iter < 5000; ++iter) {
    const std::size_t cap = std::size_t{1} << (2 + prng.below(6));  // 4..128
    const std::size_t mask = cap - 1;
    std::vector<long> buf(cap);
    for (auto& x : buf) x = static_cast<long>(prng.next() % 1000);
    const std::size_t start = prng.below(cap);
    const std::size_t len = prng.below(cap);  // leaves at least one free slot

    std::vector<long> got = buf;
    circ_shift_down(got.data(), mask, start, len);
    // only slots written by the shift are compared; the vacated source slot
    // keeps its stale value in both versions
    CHECK(got == ref_down(buf, mask, start, len));

    got = buf;
    circ_shift_up(got.data(), mask, start, len);
    CHECK(got == ref_up(buf, mask, start, len));
  }
}

TEST_CASE("zero-length shift is a no-op") {
  std::vector<long> buf = {1, 2, 3, 4};
  auto copy = buf;
  circ_shift_down(buf.data(), 3, 2, 0);
  circ_shift_up(buf.data(), 3, 2, 0);
  CHECK(buf == copy);
}
