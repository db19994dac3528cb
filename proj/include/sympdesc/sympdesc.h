/* SPDX-License-Identifier: MIT */
#ifndef SYMPDESC_H
#define SYMPDESC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SYMPDESC_BUILDING)
#define SYMPDESC_API __attribute__((visibility("default")))
#else
#define SYMPDESC_API
#endif

typedef enum sd_status {
  SD_OK = 0,
  SD_ERR_INVALID_ARGUMENT = 1,
  SD_ERR_PARSE = 2,
  SD_ERR_NOT_INVERTIBLE = 3,
  SD_ERR_SIZE_MISMATCH = 4,
  SD_ERR_NO_SPECIAL_ARRANGEMENT = 5,
  SD_ERR_ODD_MULTIPLICITY = 6,
  SD_ERR_ODD_TOTAL = 7,
  SD_ERR_LENGTH_MISMATCH = 8,
  SD_ERR_NOT_DOMINANT = 9,
  SD_ERR_RANK_MISMATCH = 10,
  SD_ERR_CASE_GAP = 11,
  SD_ERR_NOT_A_PARTITION = 12,
  SD_ERR_INVALID_SHAPE = 13,
  SD_ERR_BRANCHING = 14,
  SD_ERR_IO = 15,
  SD_ERR_INTERNAL = 16
} sd_status;

typedef enum sd_route {
  SD_ROUTE_DESCENT = 0,
  SD_ROUTE_SUPPORT = 1
} sd_route;

/* Opaque representation handle. */
typedef struct sd_rep sd_rep;

/* Message of the last failing call on this thread; never NULL. */
SYMPDESC_API const char* sd_last_error(void);
SYMPDESC_API const char* sd_status_name(sd_status status);

/* Strings returned through char** are owned by the caller. */
SYMPDESC_API void sd_string_free(char* s);

/* "a1,a2,...;b1,b2,..."; odd defect gives a unipotent rep, even a theta rep. */
SYMPDESC_API sd_status sd_rep_from_symbol(const char* text, sd_rep** out);
/* {"type":"unipotent"|"theta","symbol":{...}} or {"type":"case_a","entries":[...]} */
SYMPDESC_API sd_status sd_rep_from_json(const char* json, sd_rep** out);
SYMPDESC_API sd_status sd_rep_unipotent_cuspidal(int k, sd_rep** out);
SYMPDESC_API void sd_rep_free(sd_rep* rep);

SYMPDESC_API sd_status sd_rep_rank(const sd_rep* rep, int* out);
SYMPDESC_API sd_status sd_rep_json(const sd_rep* rep, char** out);

SYMPDESC_API sd_status sd_first_index(const sd_rep* rep, int* out);
SYMPDESC_API sd_status sd_descent_tree_json(const sd_rep* rep, char** out);
/* {"ell_hat":[...],"ell_hat_doubled":[...],"ell_tilde":[...]|null} */
SYMPDESC_API sd_status sd_descent_index_json(const sd_rep* rep, char** out);

SYMPDESC_API sd_status sd_wavefront_json(const sd_rep* rep, sd_route route, char** out);
/* agree is set to 1 when both routes give the same partition. */
SYMPDESC_API sd_status sd_check_consistency(const sd_rep* rep, int* agree, char** detail_json);

/* JSON array of {"top","bottom","rank","defect"}. */
SYMPDESC_API sd_status sd_enumerate_symbols_json(int rank, int defect, char** out);
/* Unipotent symbols and theta classes of this rank. */
SYMPDESC_API sd_status sd_enumerate_rep_symbols_json(int rank, char** out);
/* JSON array of shapes, or of rational orbits when rational != 0. */
SYMPDESC_API sd_status sd_enumerate_orbits_json(int n, int rational, char** out);

/* JSON-lines atlas, one record per line. */
SYMPDESC_API sd_status sd_atlas_jsonl(int max_rank, char** out);

/* suite: "consistency", "properties" or "all". passed is 1 iff every suite
   passed; report is a JSON array of suite reports. */
SYMPDESC_API sd_status sd_verify(int max_rank, const char* suite, int jobs,
                                 int* passed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
