// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/profgraph.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "profgraph/cluster.hpp"
#include "profgraph/corpus.hpp"
#include "profgraph/error.hpp"
#include "profgraph/influence.hpp"
#include "profgraph/serialize.hpp"
#include "profgraph/similarity.hpp"
#include "profgraph/tfidf_index.hpp"
#include "profgraph/wordgraph.hpp"

struct pg_acronyms {
  profgraph::AcronymDictionary dict;
};
struct pg_documents {
  std::vector<profgraph::ProfileDocument> docs;
};
struct pg_index {
  profgraph::TfidfIndex index;
};
struct pg_trace {
  profgraph::ClusterTrace trace;
  const profgraph::TfidfIndex* index;  // for term names when serializing
};
struct pg_report {
  profgraph::InfluenceReport report;
};
struct pg_graph {
  profgraph::WordGraph graph;
};

namespace {

using profgraph::Error;
using profgraph::ErrorCode;

thread_local std::string last_error;

pg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return PG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return PG_ERR_IO;
    case ErrorCode::Parse: return PG_ERR_PARSE;
    case ErrorCode::EmptyDocument: return PG_ERR_EMPTY_DOCUMENT;
    case ErrorCode::DegenerateCorpus: return PG_ERR_DEGENERATE_CORPUS;
    case ErrorCode::DuplicateProfileId: return PG_ERR_DUPLICATE_PROFILE_ID;
    case ErrorCode::UnknownProfile: return PG_ERR_UNKNOWN_PROFILE;
    case ErrorCode::EmptyCandidates: return PG_ERR_EMPTY_CANDIDATES;
    case ErrorCode::QueryAmongCandidates: return PG_ERR_QUERY_AMONG_CANDIDATES;
    case ErrorCode::Exhausted: return PG_ERR_EXHAUSTED;
    case ErrorCode::BadOrder: return PG_ERR_BAD_ORDER;
    case ErrorCode::TraceIndexMismatch: return PG_ERR_TRACE_INDEX_MISMATCH;
    case ErrorCode::ReportTraceMismatch: return PG_ERR_REPORT_TRACE_MISMATCH;
    case ErrorCode::UnknownNode: return PG_ERR_UNKNOWN_NODE;
    case ErrorCode::NoPath: return PG_ERR_NO_PATH;
  }
  return PG_ERR_INTERNAL;
}

// Runs `fn`, turning any exception into a status code and a thread-local
// message. Nothing may propagate across the C boundary.
template <typename Fn>
pg_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return PG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return PG_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, what);
}

char* to_c_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::vector<std::string> to_strings(const char* const* items, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    require(items[i] != nullptr, "null string in list");
    out.emplace_back(items[i]);
  }
  return out;
}

profgraph::DocumentKind to_kind(pg_kind kind) {
  switch (kind) {
    case PG_KIND_USER: return profgraph::DocumentKind::user;
    case PG_KIND_ARTICLE: return profgraph::DocumentKind::article;
    case PG_KIND_BRAND: return profgraph::DocumentKind::brand;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown document kind");
}

}  // namespace

extern "C" {

const char* pg_last_error(void) { return last_error.c_str(); }

const char* pg_status_name(pg_status status) {
  switch (status) {
    case PG_OK: return "OK";
    case PG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case PG_ERR_IO: return "IoError";
    case PG_ERR_PARSE: return "ParseError";
    case PG_ERR_EMPTY_DOCUMENT: return "EmptyDocument";
    case PG_ERR_DEGENERATE_CORPUS: return "DegenerateCorpus";
    case PG_ERR_DUPLICATE_PROFILE_ID: return "DuplicateProfileId";
    case PG_ERR_UNKNOWN_PROFILE: return "UnknownProfile";
    case PG_ERR_EMPTY_CANDIDATES: return "EmptyCandidates";
    case PG_ERR_QUERY_AMONG_CANDIDATES: return "QueryAmongCandidates";
    case PG_ERR_EXHAUSTED: return "Exhausted";
    case PG_ERR_BAD_ORDER: return "BadOrder";
    case PG_ERR_TRACE_INDEX_MISMATCH: return "TraceIndexMismatch";
    case PG_ERR_REPORT_TRACE_MISMATCH: return "ReportTraceMismatch";
    case PG_ERR_UNKNOWN_NODE: return "UnknownNode";
    case PG_ERR_NO_PATH: return "NoPath";
    case PG_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

void pg_string_free(char* str) { std::free(str); }

pg_status pg_detect_input(const char* path, pg_input_kind* out) {
  return guarded([&] {
    require(path && out, "pg_detect_input: null argument");
    const std::string text = profgraph::read_file(path);
    using nlohmann::json;
    auto classify = [&](const json& object) -> std::optional<pg_input_kind> {
      if (!object.is_object()) return std::nullopt;
      if (object.contains("corpus_size")) return PG_INPUT_INDEX;
      if (object.contains("tokens")) return PG_INPUT_DOCUMENTS;
      if (object.contains("texts")) return PG_INPUT_RAW_PROFILES;
      return std::nullopt;
    };
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) throw Error(ErrorCode::Parse, std::string(path) + ": empty file");
    std::size_t end = text.find('\n', begin);
    json first = json::parse(text.substr(begin, end == std::string::npos ? end : end - begin),
                             nullptr, false);
    if (first.is_discarded()) first = json::parse(text, nullptr, false);
    auto kind = classify(first);
    if (!kind) throw Error(ErrorCode::Parse, std::string(path) + ": unrecognised input format");
    *out = *kind;
  });
}

pg_status pg_acronyms_default(pg_acronyms** out) {
  return guarded([&] {
    require(out, "pg_acronyms_default: null output");
    *out = new pg_acronyms{profgraph::AcronymDictionary::defaults()};
  });
}

pg_status pg_acronyms_load(const char* path, pg_acronyms** out) {
  return guarded([&] {
    require(path && out, "pg_acronyms_load: null argument");
    *out = new pg_acronyms{profgraph::AcronymDictionary::load_tsv(path)};
  });
}

void pg_acronyms_free(pg_acronyms* dict) { delete dict; }

pg_status pg_ingest_file(const char* raw_path, const pg_acronyms* dict, const pg_filter* filter,
                         pg_documents** out, size_t* filtered_out, size_t* empty_dropped) {
  return guarded([&] {
    require(raw_path && out, "pg_ingest_file: null argument");
    profgraph::ProfileFilter f;
    if (filter) {
      f.language = filter->language ? filter->language : "";
      for (std::size_t i = 0; i < filter->domain_count; ++i) f.domains.insert(filter->domains[i]);
      f.min_tweets = filter->min_tweets;
      f.min_followers = filter->min_followers;
    }

    const auto raw = profgraph::parse_raw_profiles(profgraph::read_file(raw_path));
    const auto kept = profgraph::filter_profiles(raw, f);
    static const profgraph::AcronymDictionary no_acronyms;
    const auto& acronyms = dict ? dict->dict : no_acronyms;

    auto docs = std::make_unique<pg_documents>();
    std::size_t empty = 0;
    for (const auto& profile : kept) {
      try {
        docs->docs.push_back(profgraph::build_profile_document(profile, acronyms));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::EmptyDocument) throw;
        ++empty;
      }
    }
    if (filtered_out) *filtered_out = raw.size() - kept.size();
    if (empty_dropped) *empty_dropped = empty;
    *out = docs.release();
  });
}

pg_status pg_documents_load(const char* path, pg_documents** out) {
  return guarded([&] {
    require(path && out, "pg_documents_load: null argument");
    *out = new pg_documents{profgraph::parse_documents(profgraph::read_file(path))};
  });
}

size_t pg_documents_count(const pg_documents* docs) { return docs ? docs->docs.size() : 0; }

pg_status pg_documents_to_jsonl(const pg_documents* docs, char** out) {
  return guarded([&] {
    require(docs && out, "pg_documents_to_jsonl: null argument");
    *out = to_c_string(profgraph::documents_to_jsonl(docs->docs));
  });
}

void pg_documents_free(pg_documents* docs) { delete docs; }

pg_status pg_index_build(const pg_documents* docs, pg_index** out) {
  return guarded([&] {
    require(docs && out, "pg_index_build: null argument");
    *out = new pg_index{profgraph::build_index(docs->docs)};
  });
}

pg_status pg_index_load(const char* path, pg_index** out) {
  return guarded([&] {
    require(path && out, "pg_index_load: null argument");
    *out = new pg_index{profgraph::index_from_json(profgraph::read_file(path))};
  });
}

pg_status pg_index_from_json(const char* text, pg_index** out) {
  return guarded([&] {
    require(text && out, "pg_index_from_json: null argument");
    *out = new pg_index{profgraph::index_from_json(text)};
  });
}

pg_status pg_index_to_json(const pg_index* index, char** out) {
  return guarded([&] {
    require(index && out, "pg_index_to_json: null argument");
    *out = to_c_string(profgraph::index_to_json(index->index));
  });
}

size_t pg_index_corpus_size(const pg_index* index) { return index ? index->index.corpus_size() : 0; }

pg_status pg_index_top_terms(const pg_index* index, const char* profile_id, size_t k,
                             char** json_out) {
  return guarded([&] {
    require(index && profile_id && json_out, "pg_index_top_terms: null argument");
    auto terms = profgraph::top_terms(index->index, profile_id, k);
    *json_out = to_c_string(profgraph::top_terms_to_json(profile_id, terms));
  });
}

void pg_index_free(pg_index* index) { delete index; }

pg_status pg_suggest(const pg_index* index, const char* query_id, pg_kind kind, size_t k,
                     char** json_out) {
  return guarded([&] {
    require(index && query_id && json_out, "pg_suggest: null argument");
    auto list = profgraph::suggest(index->index, query_id, to_kind(kind), k);
    *json_out = to_c_string(profgraph::ranked_list_to_json(list));
  });
}

pg_status pg_rank(const pg_index* index, const char* query_id, const char* const* candidates,
                  size_t candidate_count, size_t k, char** json_out) {
  return guarded([&] {
    require(index && query_id && json_out, "pg_rank: null argument");
    require(candidates || candidate_count == 0, "pg_rank: null candidate list");
    auto ids = to_strings(candidates, candidate_count);
    auto list = profgraph::rank_candidates(index->index, query_id, ids, k);
    *json_out = to_c_string(profgraph::ranked_list_to_json(list));
  });
}

pg_status pg_cluster_run(const pg_index* index, const char* query_id,
                         const char* const* candidates, size_t candidate_count,
                         pg_cluster_mode mode, const char* const* order, size_t order_count,
                         pg_trace** out) {
  return guarded([&] {
    require(index && query_id && out, "pg_cluster_run: null argument");
    std::vector<std::string> ids;
    if (candidates == nullptr) {
      index->index.vector(query_id);
      for (const auto& vec : index->index.vectors()) {
        if (vec.profile_id != query_id) ids.push_back(vec.profile_id);
      }
    } else {
      ids = to_strings(candidates, candidate_count);
    }
    std::optional<std::vector<std::string>> entry_order;
    if (order != nullptr) entry_order = to_strings(order, order_count);
    require(mode == PG_MODE_DISTANCE || mode == PG_MODE_CHRONOLOGICAL,
            "pg_cluster_run: unknown mode");
    const auto cluster_mode = mode == PG_MODE_DISTANCE ? profgraph::ClusterMode::distance
                                                       : profgraph::ClusterMode::chronological;
    std::optional<std::span<const std::string>> order_span;
    if (entry_order) order_span = std::span<const std::string>(*entry_order);
    *out = new pg_trace{
        profgraph::run_clustering(index->index, query_id, ids, cluster_mode, order_span),
        &index->index};
  });
}

size_t pg_trace_step_count(const pg_trace* trace) { return trace ? trace->trace.steps.size() : 0; }

pg_status pg_trace_to_json(const pg_trace* trace, char** out) {
  return guarded([&] {
    require(trace && out, "pg_trace_to_json: null argument");
    *out = to_c_string(profgraph::trace_to_json(trace->trace, *trace->index));
  });
}

pg_status pg_trace_from_json(const pg_index* index, const char* text, pg_trace** out) {
  return guarded([&] {
    require(index && text && out, "pg_trace_from_json: null argument");
    *out = new pg_trace{profgraph::trace_from_json(text, index->index), &index->index};
  });
}

pg_status pg_trace_load(const pg_index* index, const char* path, pg_trace** out) {
  return guarded([&] {
    require(index && path && out, "pg_trace_load: null argument");
    *out = new pg_trace{profgraph::trace_from_json(profgraph::read_file(path), index->index),
                        &index->index};
  });
}

void pg_trace_free(pg_trace* trace) { delete trace; }

pg_status pg_report_build(const pg_index* index, const pg_trace* trace, size_t k,
                          pg_report** out) {
  return guarded([&] {
    require(index && trace && out, "pg_report_build: null argument");
    *out = new pg_report{profgraph::annotate_trace(trace->trace, index->index, k)};
  });
}

size_t pg_report_step_count(const pg_report* report) {
  return report ? report->report.steps.size() : 0;
}

size_t pg_report_cut(const pg_report* report) { return report ? report->report.k : 0; }

pg_status pg_report_to_json(const pg_report* report, char** out) {
  return guarded([&] {
    require(report && out, "pg_report_to_json: null argument");
    *out = to_c_string(profgraph::report_to_json(report->report));
  });
}

pg_status pg_report_from_json(const char* text, pg_report** out) {
  return guarded([&] {
    require(text && out, "pg_report_from_json: null argument");
    *out = new pg_report{profgraph::report_from_json(text)};
  });
}

pg_status pg_report_load(const char* path, pg_report** out) {
  return guarded([&] {
    require(path && out, "pg_report_load: null argument");
    *out = new pg_report{profgraph::report_from_json(profgraph::read_file(path))};
  });
}

void pg_report_free(pg_report* report) { delete report; }

pg_status pg_report_trajectory(const pg_report* report, const char* term, size_t k,
                               char** json_out) {
  return guarded([&] {
    require(report && term && json_out, "pg_report_trajectory: null argument");
    require(k >= 1, "pg_report_trajectory: k must be at least 1");
    auto trajectory = profgraph::classify_trajectory(report->report, term, k);
    *json_out = to_c_string(profgraph::trajectory_to_json(trajectory));
  });
}

pg_status pg_graph_build(const pg_trace* trace, const pg_report* report, size_t k,
                         pg_graph** out) {
  return guarded([&] {
    require(report && out, "pg_graph_build: null argument");
    *out = new pg_graph{trace ? profgraph::build_graph(trace->trace, report->report, k)
                              : profgraph::build_graph(report->report, k)};
  });
}

pg_status pg_graph_to_dot(const pg_graph* graph, char** out) {
  return guarded([&] {
    require(graph && out, "pg_graph_to_dot: null argument");
    *out = to_c_string(profgraph::emit_dot(graph->graph));
  });
}

pg_status pg_graph_to_json(const pg_graph* graph, char** out) {
  return guarded([&] {
    require(graph && out, "pg_graph_to_json: null argument");
    *out = to_c_string(profgraph::graph_to_json(graph->graph));
  });
}

pg_status pg_graph_from_json(const char* text, pg_graph** out) {
  return guarded([&] {
    require(text && out, "pg_graph_from_json: null argument");
    *out = new pg_graph{profgraph::graph_from_json(text)};
  });
}

pg_status pg_graph_word_path(const pg_graph* graph, const char* from, const char* to,
                             char** json_out) {
  return guarded([&] {
    require(graph && from && to && json_out, "pg_graph_word_path: null argument");
    *json_out = to_c_string(profgraph::word_path_to_json(profgraph::word_path(graph->graph, from, to)));
  });
}

pg_status pg_graph_profiles_of_word(const pg_graph* graph, const char* term, char** json_out) {
  return guarded([&] {
    require(graph && term && json_out, "pg_graph_profiles_of_word: null argument");
    nlohmann::json ids = profgraph::profiles_of_word(graph->graph, term);
    *json_out = to_c_string(ids.dump() + "\n");
  });
}

void pg_graph_free(pg_graph* graph) { delete graph; }

}  // extern "C"
