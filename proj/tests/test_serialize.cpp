// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include <filesystem>

#include "doctest.h"
#include "json.hpp"
#include "profgraph/error.hpp"
#include "profgraph/serialize.hpp"
#include "support/fixtures.hpp"
#include "support/synthetic.hpp"

using namespace profgraph;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

struct Pipeline {
  std::vector<ProfileDocument> docs;
  TfidfIndex index;
  ClusterTrace trace;
  InfluenceReport report;
  WordGraph graph;
};

Pipeline pipeline(std::uint64_t seed) {
  Pipeline p;
  p.docs = synthetic::documents(seed, 9, 20, 3, 25);
  p.docs[2].kind = DocumentKind::article;
  p.index = build_index(p.docs);
  std::vector<ProfileId> cands;
  for (std::size_t i = 1; i < p.docs.size(); ++i) cands.push_back(p.docs[i].id);
  p.trace = run_clustering(p.index, p.docs[0].id, cands, ClusterMode::distance);
  p.report = annotate_trace(p.trace, p.index, 4);
  p.graph = build_graph(p.trace, p.report, 2);
  return p;
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("raw profiles") {
  auto raw = parse_raw_profiles(
      "{\"id\":\"a\",\"domain\":\"politics\",\"language\":\"en\",\"follower_count\":5,"
      "\"texts\":[\"hi there\"]}\n\n"
      "{\"id\":\"b\",\"domain\":\"news\",\"language\":\"en\",\"follower_count\":0,"
      "\"kind\":\"article\",\"texts\":[]}\n");
  REQUIRE(raw.size() == 2);
  CHECK(raw[0].follower_count == 5);
  CHECK(raw[0].kind == DocumentKind::user);
  CHECK(raw[1].kind == DocumentKind::article);

  CHECK(code_of([] { parse_raw_profiles("{\"id\":\"a\"}"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_raw_profiles("not json"); }) == ErrorCode::Parse);
  CHECK(code_of([] {
          parse_raw_profiles(
              "{\"id\":\"a\",\"domain\":\"d\",\"language\":\"en\",\"follower_count\":-1,"
              "\"texts\":[]}");
        }) == ErrorCode::Parse);
  const std::string line =
      "{\"id\":\"a\",\"domain\":\"d\",\"language\":\"en\",\"follower_count\":1,\"texts\":[]}\n";
  CHECK(code_of([&] { parse_raw_profiles(line + line); }) == ErrorCode::DuplicateProfileId);
}

TEST_CASE("documents round trip") {
  auto docs = fixtures::three_docs();
  docs[1].kind = DocumentKind::brand;
  docs[2].follower_count = 42;
  auto text = documents_to_jsonl(docs);
  auto back = parse_documents(text);
  CHECK(back == docs);
  CHECK(documents_to_jsonl(back) == text);
}

TEST_CASE("index round trip") {
  auto p = pipeline(3);
  auto text = index_to_json(p.index);
  auto back = index_from_json(text);
  CHECK(back == p.index);
  CHECK(index_to_json(back) == text);
  CHECK(text.back() == '\n');
  CHECK(code_of([] { index_from_json("{}"); }) == ErrorCode::Parse);
  CHECK(code_of([] { index_from_json("[1,2"); }) == ErrorCode::Parse);
}

TEST_CASE("ranked list round trip") {
  auto p = pipeline(4);
  auto list = suggest(p.index, p.docs[0].id, DocumentKind::user, 3);
  auto text = ranked_list_to_json(list);
  CHECK(ranked_list_from_json(text) == list);
  auto j = nlohmann::json::parse(text);
  CHECK(j["query"] == p.docs[0].id);
  CHECK(j["kind"] == "user-user");
}

TEST_CASE("trace round trip and index checks") {
  auto p = pipeline(5);
  auto text = trace_to_json(p.trace, p.index);
  CHECK(trace_from_json(text, p.index) == p.trace);
  CHECK(trace_to_json(trace_from_json(text, p.index), p.index) == text);

  auto other = build_index(synthetic::documents(99, 9, 20, 3, 25));
  CHECK(code_of([&] { trace_from_json(text, other); }) == ErrorCode::TraceIndexMismatch);

  // Same profiles, different contents.
  auto altered = p.docs;
  altered[1].tokens.push_back("zzzextra");
  CHECK(code_of([&] { trace_from_json(text, build_index(altered)); }) ==
        ErrorCode::TraceIndexMismatch);
  CHECK(code_of([&] { trace_from_json("{\"query\":1}", p.index); }) == ErrorCode::Parse);
}

TEST_CASE("report round trip") {
  auto p = pipeline(6);
  auto text = report_to_json(p.report);
  CHECK(report_from_json(text) == p.report);
  CHECK(report_to_json(report_from_json(text)) == text);
  auto j = nlohmann::json::parse(text);
  CHECK(j["k"] == 4);
  for (const auto& step : j["steps"]) {
    CHECK(step["words"].size() <= 4);
    for (const auto& w : step["words"]) {
      CHECK(w.contains("term"));
      CHECK(w.contains("itm"));
    }
  }
}

TEST_CASE("graph round trip") {
  auto p = pipeline(7);
  auto text = graph_to_json(p.graph);
  auto back = graph_from_json(text);
  CHECK(back == p.graph);
  CHECK(graph_to_json(back) == text);
  CHECK(emit_dot(back) == emit_dot(p.graph));
  CHECK(code_of([] {
          graph_from_json("{\"nodes\":[],\"edges\":[{\"from\":\"a\",\"to\":\"b\","
                          "\"class\":\"top_k\",\"step\":1}]}");
        }) == ErrorCode::Parse);
}

TEST_CASE("query results") {
  auto p = pipeline(8);
  auto path_json = nlohmann::json::parse(word_path_to_json(
      word_path(p.graph, p.docs[0].id, p.trace.steps[0].entrant)));
  CHECK(path_json["length"] == 2);
  auto traj = classify_trajectory(p.report, p.report.steps[0].ranked[0].term, 1);
  auto traj_json = nlohmann::json::parse(trajectory_to_json(traj));
  CHECK(traj_json["term"] == traj.term);
  CHECK(traj_json["per_iteration"].size() == p.report.steps.size());
}

TEST_CASE("file io") {
  auto dir = std::filesystem::temp_directory_path() / "profgraph_serialize_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "x.txt").string();
  write_file(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  CHECK(code_of([&] { read_file((dir / "missing").string()); }) == ErrorCode::Io);
  CHECK(code_of([&] { write_file((dir / "no" / "such" / "x").string(), "x"); }) == ErrorCode::Io);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
