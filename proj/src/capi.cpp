#include "seqbench.h"

#include <memory>
#include <new>

#include "core/bench.hpp"
#include "core/script.hpp"
#include "core/sequence.hpp"

struct sb_sequence {
  std::unique_ptr<seqbench::Sequence> impl;
};

namespace {

template <class F>
sb_status guarded(F&& f) {
  try {
    f();
    return SB_OK;
  } catch (const seqbench::index_error&) {
    return SB_ERR_INDEX;
  } catch (const seqbench::underflow_error&) {
    return SB_ERR_UNDERFLOW;
  } catch (const seqbench::inadmissible_error&) {
    return SB_ERR_INADMISSIBLE;
  } catch (const seqbench::config_error&) {
    return SB_ERR_BAD_ARG;
  } catch (const std::bad_alloc&) {
    return SB_ERR_NOMEM;
  } catch (...) {
    return SB_ERR_BAD_ARG;
  }
}

}  // namespace

extern "C" {

const char* sb_status_str(sb_status s) {
  switch (s) {
    case SB_OK: return "ok";
    case SB_ERR_BAD_ARG: return "invalid argument";
    case SB_ERR_INDEX: return "index out of range";
    case SB_ERR_UNDERFLOW: return "removal from empty sequence";
    case SB_ERR_INADMISSIBLE: return "inadmissible bench/structure pairing";
    case SB_ERR_NOMEM: return "out of memory";
  }
  return "unknown status";
}

const char* sb_version(void) { return "1.0.0"; }

sb_status sb_sequence_create(const char* structure_id, uint32_t block_capacity,
                             sb_sequence** out) {
  if (structure_id == nullptr || out == nullptr) return SB_ERR_BAD_ARG;
  *out = nullptr;
  return guarded([&] {
    auto seq = seqbench::make_sequence(structure_id, block_capacity);
    *out = new sb_sequence{std::move(seq)};
  });
}

void sb_sequence_destroy(sb_sequence* seq) { delete seq; }

uint64_t sb_sequence_size(const sb_sequence* seq) {
  return seq == nullptr ? 0 : seq->impl->size();
}

sb_status sb_sequence_item(const sb_sequence* seq, uint64_t idx, int64_t* out) {
  if (seq == nullptr || out == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] { *out = seq->impl->item(static_cast<std::size_t>(idx)); });
}

sb_status sb_sequence_insert(sb_sequence* seq, uint64_t idx, int64_t value) {
  if (seq == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] { seq->impl->insert(static_cast<std::size_t>(idx), value); });
}

sb_status sb_sequence_remove(sb_sequence* seq, uint64_t idx, int64_t* removed) {
  if (seq == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] {
    const int64_t v = seq->impl->remove(static_cast<std::size_t>(idx));
    if (removed != nullptr) *removed = v;
  });
}

sb_status sb_sequence_add_first(sb_sequence* seq, int64_t value) {
  if (seq == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] { seq->impl->add_first(value); });
}

sb_status sb_sequence_add_last(sb_sequence* seq, int64_t value) {
  if (seq == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] { seq->impl->add_last(value); });
}

sb_status sb_sequence_remove_first(sb_sequence* seq, int64_t* removed) {
  if (seq == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] {
    const int64_t v = seq->impl->remove_first();
    if (removed != nullptr) *removed = v;
  });
}

sb_status sb_sequence_remove_last(sb_sequence* seq, int64_t* removed) {
  if (seq == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] {
    const int64_t v = seq->impl->remove_last();
    if (removed != nullptr) *removed = v;
  });
}

uint64_t sb_sequence_footprint_bytes(const sb_sequence* seq) {
  return seq == nullptr ? 0 : seq->impl->footprint_bytes();
}

sb_status sb_run_script(const char* structure_id, uint32_t block_capacity, uint64_t seed,
                        uint64_t op_count, sb_digest* out) {
  if (structure_id == nullptr || out == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] {
    const seqbench::Digest d = seqbench::run_script_for(
        structure_id, seed, static_cast<std::size_t>(op_count), block_capacity);
    out->size = d.size;
    out->content_hash = d.content_hash;
    out->item_checksum = d.item_checksum;
  });
}

sb_status sb_bench_run(const sb_bench_spec* spec, sb_bench_result* out) {
  if (spec == nullptr || out == nullptr || spec->bench_id == nullptr ||
      spec->structure_id == nullptr)
    return SB_ERR_BAD_ARG;
  return guarded([&] {
    seqbench::BenchSpec s;
    s.bench_id = spec->bench_id;
    s.structure_id = spec->structure_id;
    s.n = spec->n;
    s.k = spec->k;
    s.seed = spec->seed;
    s.repeats = spec->repeats;
    s.block_capacity = spec->block_capacity;
    const seqbench::BenchResult r = seqbench::run_bench(s);
    out->min_ticks = r.min_ticks;
    out->checksum = r.checksum;
    out->model_bytes = r.model_bytes;
  });
}

sb_status sb_bench_admissible(const char* bench_id, const char* structure_id, uint64_t n) {
  if (bench_id == nullptr || structure_id == nullptr) return SB_ERR_BAD_ARG;
  sb_status status = SB_OK;
  const sb_status guard = guarded([&] {
    if (seqbench::admissibility_veto(bench_id, structure_id, n)) status = SB_ERR_INADMISSIBLE;
  });
  return guard == SB_OK ? status : guard;
}

sb_status sb_model_peak_bytes(const char* structure_id, uint64_t n, uint32_t block_capacity,
                              uint64_t* out) {
  if (structure_id == nullptr || out == nullptr) return SB_ERR_BAD_ARG;
  return guarded([&] { *out = seqbench::model_peak_bytes(structure_id, n, block_capacity); });
}

}  // extern "C"
