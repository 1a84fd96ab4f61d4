// Copyright 2026 The ipsumm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the ipsumm IPv4 summarizer.
 *
 * Objects are opaque handles created by *_create / *_load / *_build style
 * calls and released with the matching *_free. Every fallible call returns
 * an ipsumm_status; on failure ipsumm_last_error() describes the problem
 * for the calling thread until its next failing call. Strings returned
 * through char** are owned by the caller and released with
 * ipsumm_string_free().
 *
 * Addresses and prefix bits are host-order uint32_t values with bit 31 the
 * leftmost bit of the dotted quad.
 */
#ifndef IPSUMM_IPSUMM_H
#define IPSUMM_IPSUMM_H

#include <stddef.h>
#include <stdint.h>

#if defined(IPSUMM_BUILDING_LIBRARY)
#define IPSUMM_API __attribute__((visibility("default")))
#else
#define IPSUMM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ipsumm_status {
  IPSUMM_OK = 0,
  IPSUMM_E_INVALID_ARGUMENT = 1, /* null handle, bad index, small buffer */
  IPSUMM_E_PARSE = 2,            /* malformed address, prefix or file line */
  IPSUMM_E_IO = 3,               /* unreadable file */
  IPSUMM_E_CONFIG = 4,           /* out-of-range setting, bad registry list */
  IPSUMM_E_INTERNAL = 5
} ipsumm_status;

typedef enum ipsumm_format {
  IPSUMM_FORMAT_TABLE = 0,
  IPSUMM_FORMAT_JSON = 1,
  IPSUMM_FORMAT_CSV = 2
} ipsumm_format;

typedef enum ipsumm_mode {
  IPSUMM_MODE_DISTRIBUTED = 1,
  IPSUMM_MODE_SINGLE = 2,
  IPSUMM_MODE_BOTH = 3
} ipsumm_mode;

/* Summarization settings. Fill with one of the ipsumm_config_init* calls.
 * granularity is -1 when explicit thresholds are in use. */
typedef struct ipsumm_config {
  int granularity;
  int min_subnet_mask;
  int distance_threshold;
  double density_threshold;
} ipsumm_config;

typedef struct ipsumm_tree ipsumm_tree;
typedef struct ipsumm_summary ipsumm_summary;
typedef struct ipsumm_registries ipsumm_registries;
typedef struct ipsumm_simulation ipsumm_simulation;

IPSUMM_API const char* ipsumm_version(void);
IPSUMM_API const char* ipsumm_status_string(ipsumm_status status);
IPSUMM_API const char* ipsumm_last_error(void);
IPSUMM_API void ipsumm_string_free(char* str);

/* --- addresses and prefixes -------------------------------------------- */

IPSUMM_API ipsumm_status ipsumm_parse_address(const char* text, uint32_t* out);
IPSUMM_API ipsumm_status ipsumm_parse_prefix(const char* text, uint32_t* bits,
                                             int* mask_len);
/* buf needs at least 16 bytes for an address, 19 for a prefix. */
IPSUMM_API ipsumm_status ipsumm_format_address(uint32_t addr, char* buf,
                                               size_t cap);
IPSUMM_API ipsumm_status ipsumm_format_prefix(uint32_t bits, int mask_len,
                                              char* buf, size_t cap);
IPSUMM_API ipsumm_status ipsumm_prefix_contains(uint32_t outer_bits,
                                                int outer_mask,
                                                uint32_t inner_bits,
                                                int inner_mask, int* out);

/* --- configuration ----------------------------------------------------- */

IPSUMM_API ipsumm_status ipsumm_config_init(ipsumm_config* cfg, int granularity,
                                            int min_subnet_mask);
IPSUMM_API ipsumm_status ipsumm_config_init_thresholds(ipsumm_config* cfg,
                                                       int distance_threshold,
                                                       double density_threshold,
                                                       int min_subnet_mask);
IPSUMM_API ipsumm_status ipsumm_parse_format(const char* name,
                                             ipsumm_format* out);

/* --- trie -------------------------------------------------------------- */

IPSUMM_API ipsumm_status ipsumm_tree_create(ipsumm_tree** out);
IPSUMM_API ipsumm_status ipsumm_tree_build(const uint32_t* addrs, size_t count,
                                           ipsumm_tree** out);
/* Parse errors name the offending file:line. */
IPSUMM_API ipsumm_status ipsumm_tree_load_file(const char* path,
                                               ipsumm_tree** out);
/* *inserted (optional) is set to 0 when addr was already present. */
IPSUMM_API ipsumm_status ipsumm_tree_insert(ipsumm_tree* tree, uint32_t addr,
                                            int* inserted);
IPSUMM_API size_t ipsumm_tree_size(const ipsumm_tree* tree);
IPSUMM_API size_t ipsumm_tree_node_count(const ipsumm_tree* tree);
IPSUMM_API ipsumm_status ipsumm_tree_dump(const ipsumm_tree* tree, char** out);
IPSUMM_API void ipsumm_tree_free(ipsumm_tree* tree);

/* --- summaries --------------------------------------------------------- */

IPSUMM_API ipsumm_status ipsumm_summarize(const ipsumm_tree* tree,
                                          const ipsumm_config* cfg,
                                          ipsumm_summary** out);
IPSUMM_API size_t ipsumm_summary_original_size(const ipsumm_summary* s);
IPSUMM_API size_t ipsumm_summary_size(const ipsumm_summary* s);
/* NaN for an empty input. */
IPSUMM_API double ipsumm_summary_compression_rate(const ipsumm_summary* s);
IPSUMM_API ipsumm_status ipsumm_summary_prefix(const ipsumm_summary* s,
                                               size_t index, uint32_t* bits,
                                               int* mask_len);
IPSUMM_API void ipsumm_summary_free(ipsumm_summary* s);

/* Summarizes tree under each of cfgs and renders the statistics, one
 * column group (or JSON entry) per configuration. */
IPSUMM_API ipsumm_status ipsumm_render_summaries(const ipsumm_tree* tree,
                                                 const char* registry_name,
                                                 const ipsumm_config* cfgs,
                                                 size_t cfg_count,
                                                 ipsumm_format format,
                                                 char** out);

/* --- registries and simulation ----------------------------------------- */

IPSUMM_API ipsumm_status ipsumm_registries_create(ipsumm_registries** out);
IPSUMM_API ipsumm_status ipsumm_registries_add(ipsumm_registries* regs,
                                               const char* name,
                                               const uint32_t* addrs,
                                               size_t count);
/* Registry named after the file stem. */
IPSUMM_API ipsumm_status ipsumm_registries_add_file(ipsumm_registries* regs,
                                                    const char* path);
/* Appends every "name=path" entry of a manifest. */
IPSUMM_API ipsumm_status ipsumm_registries_load_manifest(ipsumm_registries* regs,
                                                         const char* path);
IPSUMM_API size_t ipsumm_registries_count(const ipsumm_registries* regs);
IPSUMM_API void ipsumm_registries_free(ipsumm_registries* regs);

/* Runs the requested modes once per configuration; jobs caps how many
 * registries are summarized concurrently (0 means 1). */
IPSUMM_API ipsumm_status ipsumm_simulate(const ipsumm_registries* regs,
                                         const ipsumm_config* cfgs,
                                         size_t cfg_count, ipsumm_mode mode,
                                         unsigned jobs,
                                         ipsumm_simulation** out);
IPSUMM_API size_t ipsumm_simulation_runs(const ipsumm_simulation* sim);
/* which is IPSUMM_MODE_DISTRIBUTED or IPSUMM_MODE_SINGLE. */
IPSUMM_API ipsumm_status ipsumm_simulation_merged_size(const ipsumm_simulation* sim,
                                                       size_t run,
                                                       ipsumm_mode which,
                                                       size_t* out);
/* NaN unless both modes ran. */
IPSUMM_API double ipsumm_simulation_decrease(const ipsumm_simulation* sim,
                                             size_t run);
IPSUMM_API ipsumm_status ipsumm_simulation_render(const ipsumm_simulation* sim,
                                                  ipsumm_format format,
                                                  char** out);
IPSUMM_API void ipsumm_simulation_free(ipsumm_simulation* sim);

#ifdef __cplusplus
}
#endif

#endif /* IPSUMM_IPSUMM_H */
