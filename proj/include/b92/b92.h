/* Copyright 2026 The b92sim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the B92 time-bin QKD simulator.
 *
 * Every function returns a b92_status. On failure a message is available
 * from b92_last_error() on the calling thread until the next failing call.
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** are heap allocated and
 * released with b92_string_free.
 */
#ifndef B92_B92_H_
#define B92_B92_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(B92_BUILDING_LIBRARY)
#define B92_API __declspec(dllexport)
#else
#define B92_API __declspec(dllimport)
#endif
#else
#define B92_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum b92_status {
  B92_OK = 0,
  B92_ERR_VALIDATION = 1,
  B92_ERR_IO = 2,
  B92_ERR_FIXTURE_MISMATCH = 3,
  B92_ERR_INVALID_ARGUMENT = 4,
  B92_ERR_INTERNAL = 5
} b92_status;

typedef struct b92_config b92_config;
typedef struct b92_session b92_session;
typedef struct b92_table b92_table;

typedef struct b92_stats {
  uint64_t sent;
  uint64_t clicks_t1;
  uint64_t clicks_t2;
  uint64_t clicks_t3;
  uint64_t double_clicks;
  uint64_t sifted_len;
  double sift_rate;
  int has_qber;
  double qber;
  int has_eve_known_fraction;
  double eve_known_fraction;
  double bob_click_rate_no_eve_ref;
} b92_stats;

B92_API const char* b92_last_error(void);
B92_API const char* b92_version(void);
B92_API void b92_string_free(char* s);

/* Configuration. */
B92_API b92_status b92_config_default(b92_config** out);
B92_API b92_status b92_config_from_json(const char* json, b92_config** out);
B92_API b92_status b92_config_load(const char* path, b92_config** out);
B92_API b92_status b92_config_to_json(const b92_config* cfg, char** out);
B92_API void b92_config_free(b92_config* cfg);
B92_API b92_status b92_config_get_seed(const b92_config* cfg, uint64_t* out);
B92_API b92_status b92_config_set_seed(b92_config* cfg, uint64_t seed);
/* Applies CLI flag > QKD_SIM_SEED environment variable > config value. */
B92_API b92_status b92_config_resolve_seed(b92_config* cfg, int has_cli_seed,
                                           uint64_t cli_seed);
B92_API b92_status b92_config_set_eve_enabled(b92_config* cfg, int enabled);

/* Single session. */
B92_API b92_status b92_session_run(const b92_config* cfg, b92_session** out);
B92_API void b92_session_free(b92_session* session);
B92_API b92_status b92_session_stats(const b92_session* session,
                                     b92_stats* out);
/* Header plus one row in the stats CSV schema. */
B92_API b92_status b92_session_stats_csv(const b92_session* session,
                                         char** out);
B92_API b92_status b92_session_records_csv(const b92_session* session,
                                           char** out);
B92_API b92_status b92_session_summary(const b92_session* session, char** out);
/* Sifted bits as a '0'/'1' string; party 0 is Alice, 1 is Bob. */
B92_API b92_status b92_session_key(const b92_session* session, int party,
                                   char** out);

/* Parameter sweep. axis is "length_km" or "mu". threads 0 = automatic. */
B92_API b92_status b92_sweep_run(const b92_config* base, const char* axis,
                                 const double* values, size_t n_values,
                                 uint32_t trials, unsigned threads,
                                 b92_table** out);
B92_API void b92_table_free(b92_table* table);
B92_API b92_status b92_table_size(const b92_table* table, size_t* out);
B92_API b92_status b92_table_row_stats(const b92_table* table, size_t row,
                                       b92_stats* out);
B92_API b92_status b92_table_csv(const b92_table* table, char** out);
B92_API b92_status b92_table_summary(const b92_table* table, char** out);

/* Replays the eight-pulse worked example in textbook mode. Writes the report
 * to *report and returns B92_ERR_FIXTURE_MISMATCH unless the key is 011. */
B92_API b92_status b92_table1_replay(char** report);

B92_API b92_status b92_write_file(const char* path, const char* text);

#ifdef __cplusplus
}
#endif

#endif /* B92_B92_H_ */
