/* seqbench — indexed-sequence structures and a deterministic benchmark
 * harness behind a plain C interface. All handles are opaque; every
 * fallible call returns an sb_status. */

#ifndef SEQBENCH_H
#define SEQBENCH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_BAD_ARG = 1,      /* unknown id, null pointer, invalid configuration */
  SB_ERR_INDEX = 2,        /* index outside the valid range */
  SB_ERR_UNDERFLOW = 3,    /* removal from an empty sequence */
  SB_ERR_INADMISSIBLE = 4, /* (bench, structure, n) pairing refused */
  SB_ERR_NOMEM = 5
} sb_status;

const char* sb_status_str(sb_status s);
const char* sb_version(void);

/* ---- sequences ----------------------------------------------------------
 * Structure ids: "nocachelist", "linkedlist", "singlelist", "arraylist",
 * "arrayring", "arrayblock", "oracle". block_capacity applies to arrayblock
 * only; pass 0 for the default (2048). */

typedef struct sb_sequence sb_sequence;

sb_status sb_sequence_create(const char* structure_id, uint32_t block_capacity,
                             sb_sequence** out);
void sb_sequence_destroy(sb_sequence* seq);

uint64_t sb_sequence_size(const sb_sequence* seq);
sb_status sb_sequence_item(const sb_sequence* seq, uint64_t idx, int64_t* out);
sb_status sb_sequence_insert(sb_sequence* seq, uint64_t idx, int64_t value);
/* removed may be null when the caller does not need the value */
sb_status sb_sequence_remove(sb_sequence* seq, uint64_t idx, int64_t* removed);
sb_status sb_sequence_add_first(sb_sequence* seq, int64_t value);
sb_status sb_sequence_add_last(sb_sequence* seq, int64_t value);
sb_status sb_sequence_remove_first(sb_sequence* seq, int64_t* removed);
sb_status sb_sequence_remove_last(sb_sequence* seq, int64_t* removed);
/* Modeled heap bytes (8-byte words, allocator metadata excluded). */
uint64_t sb_sequence_footprint_bytes(const sb_sequence* seq);

/* ---- deterministic operation scripts ----------------------------------- */

typedef struct sb_digest {
  uint64_t size;          /* final element count */
  uint64_t content_hash;  /* order-sensitive hash of the final contents */
  uint64_t item_checksum; /* running sum of every read performed */
} sb_digest;

/* Generates the (seed, op_count) script and applies it to a fresh structure.
 * Identical digests across structure ids certify equivalent behavior. */
sb_status sb_run_script(const char* structure_id, uint32_t block_capacity, uint64_t seed,
                        uint64_t op_count, sb_digest* out);

/* ---- benchmarks ---------------------------------------------------------
 * Bench ids: "stroustrup", "stroustrup-binary", "fairbench",
 * "fairbench-rand", "addlast", "addfirst". */

typedef struct sb_bench_spec {
  const char* bench_id;
  const char* structure_id;
  uint64_t n;
  uint32_t k;              /* fairbench-rand increment bound (32, 64 or 128) */
  uint64_t seed;
  uint32_t repeats;        /* >= 1; the minimum duration is kept */
  uint32_t block_capacity; /* 0 = default */
} sb_bench_spec;

typedef struct sb_bench_result {
  uint64_t min_ticks;   /* monotonic-clock nanoseconds, best repeat */
  uint64_t checksum;    /* identical across structures for the same inputs */
  uint64_t model_bytes; /* modeled footprint at peak size */
} sb_bench_result;

sb_status sb_bench_run(const sb_bench_spec* spec, sb_bench_result* out);

/* SB_OK when the pairing may run at this n, SB_ERR_INADMISSIBLE otherwise. */
sb_status sb_bench_admissible(const char* bench_id, const char* structure_id, uint64_t n);

/* Worst-case modeled footprint of the structure holding n elements; used as
 * the memory gate before a run is allowed to start. */
sb_status sb_model_peak_bytes(const char* structure_id, uint64_t n, uint32_t block_capacity,
                              uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* SEQBENCH_H */
