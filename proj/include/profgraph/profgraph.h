/*
 * SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The profgraph Authors
 *
 * C interface to the profile modelling, single-source clustering and word
 * graph library. Every object is an opaque handle released with its matching
 * *_free function. Functions return a pg_status; on failure a description is
 * available from pg_last_error() on the calling thread. Strings returned
 * through char** outputs are heap allocated and released with
 * pg_string_free().
 */
#ifndef PROFGRAPH_PROFGRAPH_H
#define PROFGRAPH_PROFGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(PG_BUILDING_LIBRARY)
#define PG_API __attribute__((visibility("default")))
#else
#define PG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_INVALID_ARGUMENT,
  PG_ERR_IO,
  PG_ERR_PARSE,
  PG_ERR_EMPTY_DOCUMENT,
  PG_ERR_DEGENERATE_CORPUS,
  PG_ERR_DUPLICATE_PROFILE_ID,
  PG_ERR_UNKNOWN_PROFILE,
  PG_ERR_EMPTY_CANDIDATES,
  PG_ERR_QUERY_AMONG_CANDIDATES,
  PG_ERR_EXHAUSTED,
  PG_ERR_BAD_ORDER,
  PG_ERR_TRACE_INDEX_MISMATCH,
  PG_ERR_REPORT_TRACE_MISMATCH,
  PG_ERR_UNKNOWN_NODE,
  PG_ERR_NO_PATH,
  PG_ERR_INTERNAL
} pg_status;

typedef enum pg_kind { PG_KIND_USER = 0, PG_KIND_ARTICLE = 1, PG_KIND_BRAND = 2 } pg_kind;

typedef enum pg_cluster_mode { PG_MODE_DISTANCE = 0, PG_MODE_CHRONOLOGICAL = 1 } pg_cluster_mode;

typedef enum pg_input_kind {
  PG_INPUT_RAW_PROFILES = 0, /* JSON lines with "texts" */
  PG_INPUT_DOCUMENTS = 1,    /* JSON lines with "tokens" */
  PG_INPUT_INDEX = 2         /* persisted index object */
} pg_input_kind;

typedef struct pg_acronyms pg_acronyms;
typedef struct pg_documents pg_documents;
typedef struct pg_index pg_index;
typedef struct pg_trace pg_trace;
typedef struct pg_report pg_report;
typedef struct pg_graph pg_graph;

typedef struct pg_filter {
  const char* language;        /* exact tag, e.g. "en" */
  const char* const* domains;  /* domain_count labels; none means every domain */
  size_t domain_count;
  uint64_t min_tweets;
  uint64_t min_followers;
} pg_filter;

PG_API const char* pg_last_error(void);
PG_API const char* pg_status_name(pg_status status);
PG_API void pg_string_free(char* str);

/* Sniffs a file: an index is a single JSON object with "corpus_size"; JSON
 * lines are classified by their first record. */
PG_API pg_status pg_detect_input(const char* path, pg_input_kind* out);

/* ---- corpus ---------------------------------------------------------- */

PG_API pg_status pg_acronyms_default(pg_acronyms** out);
PG_API pg_status pg_acronyms_load(const char* path, pg_acronyms** out);
PG_API void pg_acronyms_free(pg_acronyms* dict);

/* Reads raw profiles, filters them and preprocesses each into a document.
 * `filtered_out` receives the number removed by the filter, `empty_dropped`
 * the number that had no tokens left (both optional). A NULL filter keeps
 * English profiles of any domain and size. Succeeds with an empty
 * set of documents when everything was dropped. */
PG_API pg_status pg_ingest_file(const char* raw_path, const pg_acronyms* dict,
                                const pg_filter* filter, pg_documents** out,
                                size_t* filtered_out, size_t* empty_dropped);
PG_API pg_status pg_documents_load(const char* path, pg_documents** out);
PG_API size_t pg_documents_count(const pg_documents* docs);
PG_API pg_status pg_documents_to_jsonl(const pg_documents* docs, char** out);
PG_API void pg_documents_free(pg_documents* docs);

/* ---- index ----------------------------------------------------------- */

PG_API pg_status pg_index_build(const pg_documents* docs, pg_index** out);
PG_API pg_status pg_index_load(const char* path, pg_index** out);
PG_API pg_status pg_index_from_json(const char* text, pg_index** out);
PG_API pg_status pg_index_to_json(const pg_index* index, char** out);
PG_API size_t pg_index_corpus_size(const pg_index* index);
PG_API pg_status pg_index_top_terms(const pg_index* index, const char* profile_id, size_t k,
                                    char** json_out);
PG_API void pg_index_free(pg_index* index);

/* ---- similarity ------------------------------------------------------ */

/* Ranked list as {"query","kind","entries":[{"id","distance"}]}. */
PG_API pg_status pg_suggest(const pg_index* index, const char* query_id, pg_kind kind,
                            size_t k, char** json_out);
PG_API pg_status pg_rank(const pg_index* index, const char* query_id,
                         const char* const* candidates, size_t candidate_count, size_t k,
                         char** json_out);

/* ---- clustering ------------------------------------------------------ */

/* `candidates` NULL means every other profile in the index. `order` is
 * required (and must be a permutation of the candidates) in chronological
 * mode and ignored otherwise. */
PG_API pg_status pg_cluster_run(const pg_index* index, const char* query_id,
                                const char* const* candidates, size_t candidate_count,
                                pg_cluster_mode mode, const char* const* order,
                                size_t order_count, pg_trace** out);
PG_API size_t pg_trace_step_count(const pg_trace* trace);
PG_API pg_status pg_trace_to_json(const pg_trace* trace, char** out);
/* The trace is replayed against `index`; a mismatch yields
 * PG_ERR_TRACE_INDEX_MISMATCH. The trace keeps a reference to `index`, which
 * must outlive it. */
PG_API pg_status pg_trace_from_json(const pg_index* index, const char* text, pg_trace** out);
PG_API pg_status pg_trace_load(const pg_index* index, const char* path, pg_trace** out);
PG_API void pg_trace_free(pg_trace* trace);

/* ---- influence ------------------------------------------------------- */

PG_API pg_status pg_report_build(const pg_index* index, const pg_trace* trace, size_t k,
                                 pg_report** out);
PG_API size_t pg_report_step_count(const pg_report* report);
/* Number of words per step the report treats as its top list. */
PG_API size_t pg_report_cut(const pg_report* report);
PG_API pg_status pg_report_to_json(const pg_report* report, char** out);
PG_API pg_status pg_report_from_json(const char* text, pg_report** out);
PG_API pg_status pg_report_load(const char* path, pg_report** out);
PG_API void pg_report_free(pg_report* report);

/* {"term","per_iteration":[...],"classification"} */
PG_API pg_status pg_report_trajectory(const pg_report* report, const char* term, size_t k,
                                      char** json_out);

/* ---- word graph ------------------------------------------------------ */

/* `trace` may be NULL; when given, the report is checked against it. */
PG_API pg_status pg_graph_build(const pg_trace* trace, const pg_report* report, size_t k,
                                pg_graph** out);
PG_API pg_status pg_graph_to_dot(const pg_graph* graph, char** out);
PG_API pg_status pg_graph_to_json(const pg_graph* graph, char** out);
PG_API pg_status pg_graph_from_json(const char* text, pg_graph** out);
/* {"from","to","hops":[...],"length"} */
PG_API pg_status pg_graph_word_path(const pg_graph* graph, const char* from, const char* to,
                                    char** json_out);
/* JSON array of node ids. */
PG_API pg_status pg_graph_profiles_of_word(const pg_graph* graph, const char* term,
                                           char** json_out);
PG_API void pg_graph_free(pg_graph* graph);

#ifdef __cplusplus
}
#endif

#endif /* PROFGRAPH_PROFGRAPH_H */
