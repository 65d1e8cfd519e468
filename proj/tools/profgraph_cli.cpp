// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

// Command-line front end. Each subcommand consumes the file written by the
// previous one: ingest -> index -> cluster -> influence -> graph.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "profgraph/profgraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Thrown to unwind a subcommand with a specific exit code.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(pg_status status) {
  switch (status) {
    case PG_OK: return kExitOk;
    case PG_ERR_IO:
    case PG_ERR_PARSE:
    case PG_ERR_INVALID_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
  }
}

void check(pg_status status) {
  if (status != PG_OK) {
    throw Failure{exit_code_for(status),
                  std::string(pg_status_name(status)) + ": " + pg_last_error()};
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Acronyms = std::unique_ptr<pg_acronyms, Deleter<pg_acronyms, pg_acronyms_free>>;
using Documents = std::unique_ptr<pg_documents, Deleter<pg_documents, pg_documents_free>>;
using Index = std::unique_ptr<pg_index, Deleter<pg_index, pg_index_free>>;
using Trace = std::unique_ptr<pg_trace, Deleter<pg_trace, pg_trace_free>>;
using Report = std::unique_ptr<pg_report, Deleter<pg_report, pg_report_free>>;
using Graph = std::unique_ptr<pg_graph, Deleter<pg_graph, pg_graph_free>>;

std::string take(char* text) {
  std::string out(text);
  pg_string_free(text);
  return out;
}

struct RunConfig {
  std::string input_path;
  std::string acronym_path;
  std::string language = "en";
  std::vector<std::string> domains;
  std::uint64_t min_tweets = 0;
  std::uint64_t min_followers = 0;
  std::size_t top_k_words = 20;
  std::size_t top_k_suggestions = 3;
  std::string mode = "distance";
  std::vector<std::string> order;
  std::string out_path;
};

void write_output(const RunConfig& config, const std::string& text) {
  if (config.out_path.empty() || config.out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Failure{kExitUsage, "cannot write '" + config.out_path + "'"};
}

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  for (const auto& s : items) out.push_back(s.c_str());
  return out;
}

struct IngestResult {
  Documents docs;
  std::size_t filtered = 0;
  std::size_t empty = 0;
};

IngestResult ingest(const RunConfig& config) {
  pg_acronyms* raw_dict = nullptr;
  check(config.acronym_path.empty() ? pg_acronyms_default(&raw_dict)
                                    : pg_acronyms_load(config.acronym_path.c_str(), &raw_dict));
  Acronyms dict(raw_dict);

  auto domains = c_strings(config.domains);
  pg_filter filter{config.language.c_str(), domains.data(), domains.size(), config.min_tweets,
                   config.min_followers};
  IngestResult result;
  pg_documents* docs = nullptr;
  check(pg_ingest_file(config.input_path.c_str(), dict.get(), &filter, &docs, &result.filtered,
                       &result.empty));
  result.docs.reset(docs);
  return result;
}

// --input may be raw profiles, preprocessed documents or a saved index.
Index load_index(const RunConfig& config) {
  if (config.input_path.empty()) throw Failure{kExitUsage, "--input is required"};
  pg_input_kind kind;
  check(pg_detect_input(config.input_path.c_str(), &kind));
  pg_index* index = nullptr;
  if (kind == PG_INPUT_INDEX) {
    check(pg_index_load(config.input_path.c_str(), &index));
    return Index(index);
  }
  Documents docs;
  if (kind == PG_INPUT_DOCUMENTS) {
    pg_documents* raw = nullptr;
    check(pg_documents_load(config.input_path.c_str(), &raw));
    docs.reset(raw);
  } else {
    docs = ingest(config).docs;
  }
  check(pg_index_build(docs.get(), &index));
  return Index(index);
}

int cmd_ingest(const RunConfig& config) {
  if (config.input_path.empty()) throw Failure{kExitUsage, "--input is required"};
  auto result = ingest(config);
  const std::size_t kept = pg_documents_count(result.docs.get());
  std::cerr << "ingested " << kept << " profiles (" << result.filtered << " filtered out, "
            << result.empty << " dropped as EmptyDocument)\n";
  if (kept == 0) throw Failure{kExitDomain, "every profile was dropped"};
  char* text = nullptr;
  check(pg_documents_to_jsonl(result.docs.get(), &text));
  write_output(config, take(text));
  return kExitOk;
}

int cmd_index(const RunConfig& config) {
  auto index = load_index(config);
  char* text = nullptr;
  check(pg_index_to_json(index.get(), &text));
  write_output(config, take(text));
  return kExitOk;
}

int cmd_terms(const RunConfig& config, const std::string& profile) {
  auto index = load_index(config);
  char* text = nullptr;
  check(pg_index_top_terms(index.get(), profile.c_str(), config.top_k_words, &text));
  write_output(config, take(text));
  return kExitOk;
}

int cmd_recommend(const RunConfig& config, const std::string& query, const std::string& kind) {
  pg_kind k;
  if (kind == "user" || kind == "profile") k = PG_KIND_USER;
  else if (kind == "article") k = PG_KIND_ARTICLE;
  else if (kind == "brand" || kind == "ad") k = PG_KIND_BRAND;
  else throw Failure{kExitUsage, "unknown --kind '" + kind + "'"};
  auto index = load_index(config);
  char* text = nullptr;
  check(pg_suggest(index.get(), query.c_str(), k, config.top_k_suggestions, &text));
  write_output(config, take(text));
  return kExitOk;
}

pg_cluster_mode parse_mode(const std::string& mode) {
  if (mode == "distance") return PG_MODE_DISTANCE;
  if (mode == "chronological") return PG_MODE_CHRONOLOGICAL;
  throw Failure{kExitUsage, "unknown --mode '" + mode + "'"};
}

int cmd_cluster(const RunConfig& config, const std::string& query,
                const std::vector<std::string>& candidates) {
  const pg_cluster_mode mode = parse_mode(config.mode);
  if (mode == PG_MODE_CHRONOLOGICAL && config.order.empty()) {
    throw Failure{kExitUsage, "chronological mode requires --order"};
  }
  auto index = load_index(config);
  auto cand = c_strings(candidates);
  auto order = c_strings(config.order);
  pg_trace* trace = nullptr;
  check(pg_cluster_run(index.get(), query.c_str(), candidates.empty() ? nullptr : cand.data(),
                       cand.size(), mode, order.empty() ? nullptr : order.data(), order.size(),
                       &trace));
  Trace owned(trace);
  char* text = nullptr;
  check(pg_trace_to_json(owned.get(), &text));
  write_output(config, take(text));
  return kExitOk;
}

int cmd_influence(const RunConfig& config, const std::string& trace_path) {
  auto index = load_index(config);
  pg_trace* trace = nullptr;
  check(pg_trace_load(index.get(), trace_path.c_str(), &trace));
  Trace owned_trace(trace);
  pg_report* report = nullptr;
  check(pg_report_build(index.get(), owned_trace.get(), config.top_k_words, &report));
  Report owned_report(report);
  char* text = nullptr;
  check(pg_report_to_json(owned_report.get(), &text));
  write_output(config, take(text));
  return kExitOk;
}

struct GraphQuery {
  std::string report_path;
  std::string trace_path;
  bool dot = false;
  bool json = false;
  std::vector<std::string> path;
  std::string word;
  std::string trajectory;
  bool k_given = false;
};

int cmd_graph(const RunConfig& config, const GraphQuery& q) {
  pg_report* raw_report = nullptr;
  check(pg_report_load(q.report_path.c_str(), &raw_report));
  Report report(raw_report);
  const std::size_t k = q.k_given ? config.top_k_words : pg_report_cut(report.get());

  char* text = nullptr;
  if (!q.trajectory.empty()) {
    check(pg_report_trajectory(report.get(), q.trajectory.c_str(), k, &text));
    write_output(config, take(text));
    return kExitOk;
  }

  Index index;
  Trace trace;
  if (!q.trace_path.empty()) {
    index = load_index(config);
    pg_trace* raw_trace = nullptr;
    check(pg_trace_load(index.get(), q.trace_path.c_str(), &raw_trace));
    trace.reset(raw_trace);
  }
  pg_graph* raw_graph = nullptr;
  check(pg_graph_build(trace.get(), report.get(), k, &raw_graph));
  Graph graph(raw_graph);

  if (!q.path.empty()) {
    check(pg_graph_word_path(graph.get(), q.path[0].c_str(), q.path[1].c_str(), &text));
  } else if (!q.word.empty()) {
    check(pg_graph_profiles_of_word(graph.get(), q.word.c_str(), &text));
  } else if (q.dot) {
    check(pg_graph_to_dot(graph.get(), &text));
  } else {
    check(pg_graph_to_json(graph.get(), &text));
  }
  write_output(config, take(text));
  return kExitOk;
}

void add_common(CLI::App* cmd, RunConfig& config, bool with_pipeline) {
  cmd->add_option("--input", config.input_path,
                  "Raw profiles, preprocessed documents, or a saved index");
  cmd->add_option("--out", config.out_path, "Output file (default: stdout)");
  if (!with_pipeline) return;
  cmd->add_option("--acronyms", config.acronym_path, "Acronym dictionary (TSV)");
  cmd->add_option("--language", config.language, "Keep profiles with this language tag")
      ->capture_default_str();
  cmd->add_option("--domains", config.domains, "Keep profiles in these domains")
      ->delimiter(',');
  cmd->add_option("--min-tweets", config.min_tweets, "Minimum number of texts per profile")
      ->capture_default_str();
  cmd->add_option("--min-followers", config.min_followers, "Minimum follower count")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profile modelling, single-source clustering and word graphs"};
  app.require_subcommand(1);
  RunConfig config;

  auto* ingest_cmd = app.add_subcommand("ingest", "Filter and preprocess raw profiles");
  add_common(ingest_cmd, config, true);

  auto* index_cmd = app.add_subcommand("index", "Build and save the TF-IDF index");
  add_common(index_cmd, config, true);

  std::string profile;
  auto* terms_cmd = app.add_subcommand("terms", "Most representative words of a profile");
  add_common(terms_cmd, config, true);
  terms_cmd->add_option("--profile", profile, "Profile handle")->required();
  terms_cmd->add_option("--k-words", config.top_k_words, "Number of words")->capture_default_str();

  std::string query;
  std::string kind = "user";
  auto* recommend_cmd = app.add_subcommand("recommend", "Rank documents of a kind for a query");
  add_common(recommend_cmd, config, true);
  recommend_cmd->add_option("--query", query, "Query profile handle")->required();
  recommend_cmd->add_option("--kind", kind, "user, article or brand")->capture_default_str();
  recommend_cmd->add_option("--k-suggest", config.top_k_suggestions, "Number of suggestions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::vector<std::string> candidates;
  auto* cluster_cmd = app.add_subcommand("cluster", "Grow a cluster around a query profile");
  add_common(cluster_cmd, config, true);
  cluster_cmd->add_option("--query", query, "Query profile handle")->required();
  cluster_cmd->add_option("--mode", config.mode, "distance or chronological")
      ->capture_default_str();
  cluster_cmd->add_option("--order", config.order, "Entry order for chronological mode")
      ->delimiter(',');
  cluster_cmd->add_option("--candidates", candidates, "Profiles to cluster (default: all others)")
      ->delimiter(',');

  std::string trace_path;
  auto* influence_cmd = app.add_subcommand("influence", "Score influential words per step");
  add_common(influence_cmd, config, true);
  influence_cmd->add_option("--trace", trace_path, "Trace written by 'cluster'")->required();
  influence_cmd->add_option("--k-words", config.top_k_words, "Words in each step's top list")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  GraphQuery gq;
  auto* graph_cmd = app.add_subcommand("graph", "Word graph, word paths and trajectories");
  add_common(graph_cmd, config, true);
  graph_cmd->add_option("--report", gq.report_path, "Report written by 'influence'")->required();
  graph_cmd->add_option("--trace", gq.trace_path, "Trace to check the report against");
  auto* k_opt = graph_cmd->add_option("--k-words", config.top_k_words,
                                      "Top-list size (default: the report's)")
                    ->check(CLI::PositiveNumber);
  auto* dot_flag = graph_cmd->add_flag("--dot", gq.dot, "Emit Graphviz text");
  auto* json_flag = graph_cmd->add_flag("--json", gq.json, "Emit the graph as JSON (default)");
  dot_flag->excludes(json_flag);
  auto* path_opt = graph_cmd->add_option("--path", gq.path, "Word path between two profiles")
                       ->expected(2);
  auto* word_opt = graph_cmd->add_option("--word", gq.word, "Profiles connected to a word");
  auto* traj_opt = graph_cmd->add_option("--trajectory", gq.trajectory,
                                         "Significance trajectory of a word");
  path_opt->excludes(word_opt)->excludes(traj_opt);
  word_opt->excludes(traj_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ingest_cmd->parsed()) return cmd_ingest(config);
    if (index_cmd->parsed()) return cmd_index(config);
    if (terms_cmd->parsed()) return cmd_terms(config, profile);
    if (recommend_cmd->parsed()) return cmd_recommend(config, query, kind);
    if (cluster_cmd->parsed()) return cmd_cluster(config, query, candidates);
    if (influence_cmd->parsed()) return cmd_influence(config, trace_path);
    if (graph_cmd->parsed()) {
      gq.k_given = k_opt->count() > 0;
      return cmd_graph(config, gq);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
