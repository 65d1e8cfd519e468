// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Workdir {
  fs::path root;
  Workdir() {
    root = fs::temp_directory_path() / ("profgraph_cli_" + std::to_string(::getpid()));
    fs::create_directories(root);
  }
  ~Workdir() { fs::remove_all(root); }
  std::string operator/(const char* name) const { return (root / name).string(); }
};

// Runs the CLI with stdout and stderr captured to files; returns the exit code.
int run(const Workdir& dir, const std::string& args) {
  std::string cmd = std::string("'") + PROFGRAPH_CLI + "' " + args + " >'" + (dir / "stdout") +
                    "' 2>'" + (dir / "stderr") + "'";
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string data(const char* name) {
  return std::string("'") + PROFGRAPH_TEST_DATA + "/" + name + "'";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("full pipeline on the worked corpus") {
  Workdir dir;
  const std::string index = dir / "index.json";
  const std::string trace = dir / "trace.json";
  const std::string report = dir / "report.json";

  REQUIRE(run(dir, "ingest --input " + data("three_docs.jsonl") + " --out " + (dir / "docs.jsonl")) == 0);
  CHECK(slurp(dir / "docs.jsonl").find("\"tokens\"") != std::string::npos);

  REQUIRE(run(dir, "index --input " + (dir / "docs.jsonl") + " --out " + index) == 0);
  auto index_json = nlohmann::json::parse(slurp(index));
  CHECK(index_json["corpus_size"] == 3);

  REQUIRE(run(dir, "terms --input " + index + " --profile doc3 --k-words 1") == 0);
  CHECK(slurp(dir / "stdout").find("data") != std::string::npos);

  REQUIRE(run(dir, "recommend --input " + index + " --query doc3 --k-suggest 2") == 0);
  auto ranked = nlohmann::json::parse(slurp(dir / "stdout"));
  CHECK(ranked["entries"][0]["id"] == "doc1");

  REQUIRE(run(dir, "cluster --input " + index + " --query doc3 --out " + trace) == 0);
  REQUIRE(run(dir, "influence --input " + index + " --trace " + trace + " --k-words 1 --out " +
                       report) == 0);
  auto report_json = nlohmann::json::parse(slurp(report));
  CHECK(report_json["steps"][0]["words"][0]["term"] == "mining");
  CHECK(report_json["steps"][0]["below"][0]["term"] == "data");

  REQUIRE(run(dir, "graph --input " + index + " --report " + report + " --trace " + trace +
                       " --dot") == 0);
  auto dot = slurp(dir / "stdout");
  CHECK(dot.rfind("graph wordgraph {", 0) == 0);
  CHECK(dot.find("color=red") != std::string::npos);

  REQUIRE(run(dir, "graph --report " + report + " --path doc3 doc1") == 0);
  CHECK(nlohmann::json::parse(slurp(dir / "stdout"))["length"] == 2);
  REQUIRE(run(dir, "graph --report " + report + " --word mining") == 0);
  REQUIRE(run(dir, "graph --report " + report + " --trajectory mining") == 0);
  CHECK(nlohmann::json::parse(slurp(dir / "stdout"))["classification"] == "decreasing");

  // raw input goes straight to an index too
  REQUIRE(run(dir, "cluster --input " + data("three_docs.jsonl") + " --query doc3") == 0);
  CHECK(slurp(dir / "stdout") == slurp(trace));
}

TEST_CASE("exit codes") {
  Workdir dir;
  const std::string raw = data("three_docs.jsonl");
  CHECK(run(dir, "") == 2);
  CHECK(run(dir, "frobnicate") == 2);
  CHECK(run(dir, "index --input /nonexistent/file.jsonl") == 2);
  CHECK(run(dir, "cluster --input " + raw + " --query doc3 --mode sideways") == 2);
  CHECK(run(dir, "cluster --input " + raw + " --query doc3 --mode chronological") == 2);
  CHECK(!slurp(dir / "stderr").empty());
  CHECK(run(dir, "cluster --input " + raw + " --query doc3 --mode chronological --order doc2") == 1);
  CHECK(run(dir, "cluster --input " + raw + " --query doc3 --mode chronological --order doc2 doc1") == 0);
  CHECK(run(dir, "cluster --input " + raw + " --query nobody") == 1);
  CHECK(run(dir, "cluster --input " + raw + " --query doc3 --candidates doc3 doc1") == 1);
  CHECK(run(dir, "recommend --input " + raw + " --query doc3 --kind article") == 1);
  CHECK(run(dir, "ingest --input " + raw + " --language fr") == 1);

  REQUIRE(run(dir, "cluster --input " + raw + " --query doc3 --out " + (dir / "t.json")) == 0);
  REQUIRE(run(dir, "influence --input " + raw + " --trace " + (dir / "t.json") + " --k-words 1 --out " +
                       (dir / "r.json")) == 0);
  CHECK(run(dir, "graph --report " + (dir / "r.json") + " --path doc3 doc2") == 1);
  CHECK(run(dir, "graph --report " + (dir / "r.json") + " --k-words 2") == 2);

  // a trace replayed against a different corpus
  CHECK(run(dir, "influence --input " + data("mixed_raw.jsonl") + " --trace " + (dir / "t.json")) == 1);
  CHECK(slurp(dir / "stderr").find("TraceIndexMismatch") != std::string::npos);
}

TEST_CASE("ingest reports what was dropped") {
  Workdir dir;
  REQUIRE(run(dir, "ingest --input " + data("mixed_raw.jsonl") + " --min-followers 5") == 0);
  auto err = slurp(dir / "stderr");
  CHECK(err.find('2') != std::string::npos);
  std::istringstream lines(slurp(dir / "stdout"));
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);) count += !line.empty();
  CHECK(count == 3);
}

}  // TEST_SUITE
