// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

// Exercises the shared library through its C header only.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "profgraph/profgraph.h"

namespace {

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using Acronyms = Handle<pg_acronyms, pg_acronyms_free>;
using Documents = Handle<pg_documents, pg_documents_free>;
using Index = Handle<pg_index, pg_index_free>;
using Trace = Handle<pg_trace, pg_trace_free>;
using Report = Handle<pg_report, pg_report_free>;
using Graph = Handle<pg_graph, pg_graph_free>;

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  pg_string_free(s);
  return out;
}

std::string data(const char* name) { return std::string(PROFGRAPH_TEST_DATA) + "/" + name; }

Index three_doc_index() {
  pg_acronyms* dict = nullptr;
  REQUIRE(pg_acronyms_default(&dict) == PG_OK);
  Acronyms owned_dict(dict);
  pg_documents* docs = nullptr;
  REQUIRE(pg_ingest_file(data("three_docs.jsonl").c_str(), dict, nullptr, &docs, nullptr,
                         nullptr) == PG_OK);
  Documents owned_docs(docs);
  pg_index* index = nullptr;
  REQUIRE(pg_index_build(docs, &index) == PG_OK);
  return Index(index);
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("status names and last error") {
  CHECK(std::string(pg_status_name(PG_OK)) == "OK");
  CHECK(std::string(pg_status_name(PG_ERR_NO_PATH)) == "NoPath");
  pg_index* index = nullptr;
  CHECK(pg_index_load("/nonexistent/index.json", &index) == PG_ERR_IO);
  CHECK(index == nullptr);
  CHECK(std::string(pg_last_error()).find("/nonexistent/index.json") != std::string::npos);
  CHECK(pg_index_from_json("{", &index) == PG_ERR_PARSE);
  CHECK(pg_index_from_json(nullptr, &index) == PG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("ingest with filters") {
  pg_acronyms* dict = nullptr;
  REQUIRE(pg_acronyms_default(&dict) == PG_OK);
  Acronyms owned_dict(dict);

  const char* domains[] = {"politics"};
  pg_filter filter{"en", domains, 1, 0, 5};
  pg_documents* docs = nullptr;
  size_t filtered = 0, empty = 0;
  REQUIRE(pg_ingest_file(data("mixed_raw.jsonl").c_str(), dict, &filter, &docs, &filtered,
                         &empty) == PG_OK);
  Documents owned(docs);
  // carol: wrong domain; dieter: wrong language; news: too few followers
  CHECK(filtered == 3);
  CHECK(empty == 1);
  CHECK(pg_documents_count(docs) == 2);

  char* text = nullptr;
  REQUIRE(pg_documents_to_jsonl(docs, &text) == PG_OK);
  auto jsonl = take(text);
  CHECK(jsonl.find("\"laughing\"") != std::string::npos);
  CHECK(jsonl.find("vote") != std::string::npos);
  CHECK(jsonl.find("#vote") == std::string::npos);

  pg_input_kind kind{};
  CHECK(pg_detect_input(data("mixed_raw.jsonl").c_str(), &kind) == PG_OK);
  CHECK(kind == PG_INPUT_RAW_PROFILES);
}

TEST_CASE("index, similarity and kinds") {
  pg_acronyms* dict = nullptr;
  REQUIRE(pg_acronyms_default(&dict) == PG_OK);
  Acronyms owned_dict(dict);
  pg_documents* docs = nullptr;
  REQUIRE(pg_ingest_file(data("mixed_raw.jsonl").c_str(), dict, nullptr, &docs, nullptr,
                         nullptr) == PG_OK);
  Documents owned_docs(docs);
  pg_index* raw_index = nullptr;
  REQUIRE(pg_index_build(docs, &raw_index) == PG_OK);
  Index index(raw_index);
  CHECK(pg_index_corpus_size(raw_index) == pg_documents_count(docs));

  char* out = nullptr;
  REQUIRE(pg_suggest(raw_index, "alice", PG_KIND_ARTICLE, 3, &out) == PG_OK);
  auto articles = nlohmann::json::parse(take(out));
  CHECK(articles["kind"] == "user-article");
  REQUIRE(articles["entries"].size() == 1);
  CHECK(articles["entries"][0]["id"] == "news");

  const char* cands[] = {"carol", "bob"};
  REQUIRE(pg_rank(raw_index, "alice", cands, 2, 2, &out) == PG_OK);
  auto ranked = nlohmann::json::parse(take(out));
  CHECK(ranked["entries"][0]["id"] == "bob");
  CHECK(ranked["entries"][1]["distance"] == 1.0);

  CHECK(pg_suggest(raw_index, "nobody", PG_KIND_USER, 3, &out) == PG_ERR_UNKNOWN_PROFILE);
  CHECK(pg_suggest(raw_index, "news", PG_KIND_BRAND, 3, &out) == PG_ERR_EMPTY_CANDIDATES);

  REQUIRE(pg_index_top_terms(raw_index, "alice", 2, &out) == PG_OK);
  auto terms = nlohmann::json::parse(take(out));
  CHECK(terms.dump().find("healthcare") != std::string::npos);

  REQUIRE(pg_index_to_json(raw_index, &out) == PG_OK);
  auto text = take(out);
  pg_index* back = nullptr;
  REQUIRE(pg_index_from_json(text.c_str(), &back) == PG_OK);
  Index owned_back(back);
  REQUIRE(pg_index_to_json(back, &out) == PG_OK);
  CHECK(take(out) == text);
}

TEST_CASE("cluster, report, graph") {
  Index index = three_doc_index();
  pg_trace* raw_trace = nullptr;
  REQUIRE(pg_cluster_run(index.get(), "doc3", nullptr, 0, PG_MODE_DISTANCE, nullptr, 0,
                         &raw_trace) == PG_OK);
  Trace trace(raw_trace);
  CHECK(pg_trace_step_count(raw_trace) == 2);

  char* out = nullptr;
  REQUIRE(pg_trace_to_json(raw_trace, &out) == PG_OK);
  auto trace_text = take(out);
  auto trace_json = nlohmann::json::parse(trace_text);
  CHECK(trace_json["steps"][0]["entrant"] == "doc1");

  pg_trace* reloaded = nullptr;
  REQUIRE(pg_trace_from_json(index.get(), trace_text.c_str(), &reloaded) == PG_OK);
  Trace owned_reloaded(reloaded);
  REQUIRE(pg_trace_to_json(reloaded, &out) == PG_OK);
  CHECK(take(out) == trace_text);

  pg_report* raw_report = nullptr;
  REQUIRE(pg_report_build(index.get(), raw_trace, 20, &raw_report) == PG_OK);
  Report report(raw_report);
  CHECK(pg_report_step_count(raw_report) == 2);
  CHECK(pg_report_cut(raw_report) == 20);
  REQUIRE(pg_report_to_json(raw_report, &out) == PG_OK);
  auto report_json = nlohmann::json::parse(take(out));
  CHECK(report_json["steps"][0]["words"][0]["term"] == "mining");

  REQUIRE(pg_report_trajectory(raw_report, "mining", 1, &out) == PG_OK);
  auto traj = nlohmann::json::parse(take(out));
  CHECK(traj["per_iteration"].size() == 2);

  pg_graph* raw_graph = nullptr;
  REQUIRE(pg_graph_build(raw_trace, raw_report, 1, &raw_graph) == PG_OK);
  Graph graph(raw_graph);
  REQUIRE(pg_graph_to_dot(raw_graph, &out) == PG_OK);
  auto dot = take(out);
  CHECK(dot.rfind("graph wordgraph {", 0) == 0);
  CHECK(dot.find("color=blue") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);

  REQUIRE(pg_graph_word_path(raw_graph, "doc3", "doc1", &out) == PG_OK);
  auto path = nlohmann::json::parse(take(out));
  CHECK(path["length"] == 2);
  CHECK(pg_graph_word_path(raw_graph, "doc3", "doc2", &out) == PG_ERR_NO_PATH);
  CHECK(pg_graph_word_path(raw_graph, "doc3", "nobody", &out) == PG_ERR_UNKNOWN_NODE);

  REQUIRE(pg_graph_profiles_of_word(raw_graph, "mining", &out) == PG_OK);
  CHECK(nlohmann::json::parse(take(out)) == nlohmann::json::array({"p:doc1", "p:doc3"}));

  REQUIRE(pg_graph_to_json(raw_graph, &out) == PG_OK);
  auto graph_text = take(out);
  pg_graph* back = nullptr;
  REQUIRE(pg_graph_from_json(graph_text.c_str(), &back) == PG_OK);
  Graph owned_back(back);
  REQUIRE(pg_graph_to_json(back, &out) == PG_OK);
  CHECK(take(out) == graph_text);

  pg_graph* too_wide = nullptr;
  CHECK(pg_graph_build(raw_trace, raw_report, 21, &too_wide) == PG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cluster errors") {
  Index index = three_doc_index();
  pg_trace* trace = nullptr;
  CHECK(pg_cluster_run(index.get(), "doc3", nullptr, 0, PG_MODE_CHRONOLOGICAL, nullptr, 0,
                       &trace) == PG_ERR_BAD_ORDER);
  const char* order[] = {"doc2", "doc1"};
  REQUIRE(pg_cluster_run(index.get(), "doc3", nullptr, 0, PG_MODE_CHRONOLOGICAL, order, 2,
                         &trace) == PG_OK);
  pg_trace_free(trace);
  const char* with_query[] = {"doc3", "doc1"};
  CHECK(pg_cluster_run(index.get(), "doc3", with_query, 2, PG_MODE_DISTANCE, nullptr, 0,
                       &trace) == PG_ERR_QUERY_AMONG_CANDIDATES);
  CHECK(pg_cluster_run(index.get(), "ghost", nullptr, 0, PG_MODE_DISTANCE, nullptr, 0, &trace) ==
        PG_ERR_UNKNOWN_PROFILE);
}

TEST_CASE("trace against a different index") {
  Index index = three_doc_index();
  pg_trace* trace = nullptr;
  REQUIRE(pg_cluster_run(index.get(), "doc3", nullptr, 0, PG_MODE_DISTANCE, nullptr, 0,
                         &trace) == PG_OK);
  Trace owned(trace);
  char* out = nullptr;
  REQUIRE(pg_trace_to_json(trace, &out) == PG_OK);
  auto text = take(out);

  pg_acronyms* dict = nullptr;
  REQUIRE(pg_acronyms_default(&dict) == PG_OK);
  Acronyms owned_dict(dict);
  pg_documents* docs = nullptr;
  REQUIRE(pg_ingest_file(data("mixed_raw.jsonl").c_str(), dict, nullptr, &docs, nullptr,
                         nullptr) == PG_OK);
  Documents owned_docs(docs);
  pg_index* other = nullptr;
  REQUIRE(pg_index_build(docs, &other) == PG_OK);
  Index owned_other(other);
  pg_trace* wrong = nullptr;
  CHECK(pg_trace_from_json(other, text.c_str(), &wrong) == PG_ERR_TRACE_INDEX_MISMATCH);
  CHECK(wrong == nullptr);
}

TEST_CASE("acronym file") {
  auto path = std::filesystem::temp_directory_path() / "profgraph_capi_acronyms.tsv";
  {
    std::ofstream f(path);
    f << "# comment\nbrb\tbe right back\n";
  }
  pg_acronyms* dict = nullptr;
  REQUIRE(pg_acronyms_load(path.c_str(), &dict) == PG_OK);
  pg_acronyms_free(dict);
  std::filesystem::remove(path);
  CHECK(pg_acronyms_load("/nonexistent.tsv", &dict) == PG_ERR_IO);
}

}  // TEST_SUITE
