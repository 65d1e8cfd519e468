// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "profgraph/cluster.hpp"
#include "profgraph/corpus.hpp"
#include "profgraph/influence.hpp"
#include "profgraph/similarity.hpp"
#include "profgraph/tfidf_index.hpp"
#include "profgraph/wordgraph.hpp"

// JSON and JSON-lines forms of every pipeline artifact. Writers are
// byte-stable: keys come out in a fixed order and doubles use the shortest
// representation that reads back to the same value. Readers throw Parse.
namespace profgraph {

std::string read_file(const std::string& path);   // throws Io
void write_file(const std::string& path, std::string_view contents);

/// One profile per line: {"id","domain","language","follower_count","texts"}
/// with an optional "kind". Blank lines are skipped; ids must be unique.
std::vector<RawProfile> parse_raw_profiles(std::string_view jsonl);

/// Same shape with "tokens" in place of "texts".
std::string documents_to_jsonl(const std::vector<ProfileDocument>& docs);
std::vector<ProfileDocument> parse_documents(std::string_view jsonl);

std::string index_to_json(const TfidfIndex& index);
TfidfIndex index_from_json(std::string_view text);

std::string ranked_list_to_json(const RankedList& list);
RankedList ranked_list_from_json(std::string_view text);

std::string top_terms_to_json(std::string_view profile_id,
                              const std::vector<std::pair<std::string, double>>& terms);

/// Steps store the centroid change per term (after minus before, nonzero
/// entries only). Reading replays the admissions against `index` and checks
/// every stored distance and delta; disagreement throws TraceIndexMismatch.
std::string trace_to_json(const ClusterTrace& trace, const TfidfIndex& index);
ClusterTrace trace_from_json(std::string_view text, const TfidfIndex& index);

/// "words" holds the top-k scores of each step, "below" the rest of the
/// nonzero scores.
std::string report_to_json(const InfluenceReport& report);
InfluenceReport report_from_json(std::string_view text);

std::string graph_to_json(const WordGraph& graph);
WordGraph graph_from_json(std::string_view text);

std::string word_path_to_json(const WordPath& path);
std::string trajectory_to_json(const SignificanceTrajectory& trajectory);

}  // namespace profgraph
