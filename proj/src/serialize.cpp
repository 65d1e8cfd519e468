// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/serialize.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "profgraph/error.hpp"

namespace profgraph {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "error while reading '" + path + "'");
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, "error while writing '" + path + "'");
}

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string(what) + ": " + e.what());
  }
}

// Wraps typed access so a schema violation surfaces as a Parse error.
template <typename T>
T field(const json& object, const char* key, const char* what) {
  try {
    return object.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_error(std::string(what) + ": field '" + key + "': " + e.what());
  }
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json object;
    try {
      object = json::parse(line);
    } catch (const json::exception& e) {
      parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!object.is_object()) parse_error("line " + std::to_string(line_no) + ": not an object");
    fn(object, line_no);
  }
}

DocumentKind kind_field(const json& object) {
  if (!object.contains("kind")) return DocumentKind::user;
  try {
    return parse_document_kind(field<std::string>(object, "kind", "profile"));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

std::uint64_t follower_field(const json& object, const char* what) {
  if (!object.contains("follower_count")) return 0;
  const json& value = object.at("follower_count");
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  parse_error(std::string(what) + ": follower_count must be a nonnegative integer");
}

}  // namespace

std::vector<RawProfile> parse_raw_profiles(std::string_view jsonl) {
  std::vector<RawProfile> profiles;
  std::set<std::string> ids;
  for_each_line(jsonl, [&](const json& object, std::size_t line_no) {
    const std::string where = "profile line " + std::to_string(line_no);
    RawProfile p;
    p.id = field<std::string>(object, "id", where.c_str());
    if (p.id.empty()) parse_error(where + ": empty id");
    if (!ids.insert(p.id).second) {
      throw Error(ErrorCode::DuplicateProfileId, where + ": duplicate id '" + p.id + "'");
    }
    p.domain = object.contains("domain") ? field<std::string>(object, "domain", where.c_str()) : "";
    p.language = field<std::string>(object, "language", where.c_str());
    p.follower_count = follower_field(object, where.c_str());
    p.kind = kind_field(object);
    p.texts = field<std::vector<std::string>>(object, "texts", where.c_str());
    profiles.push_back(std::move(p));
  });
  return profiles;
}

std::string documents_to_jsonl(const std::vector<ProfileDocument>& docs) {
  std::string out;
  for (const auto& doc : docs) {
    ordered_json line;
    line["id"] = doc.id;
    line["domain"] = doc.domain;
    line["language"] = doc.language;
    line["follower_count"] = doc.follower_count;
    line["kind"] = std::string(to_string(doc.kind));
    line["tokens"] = doc.tokens;
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::vector<ProfileDocument> parse_documents(std::string_view jsonl) {
  std::vector<ProfileDocument> docs;
  std::set<std::string> ids;
  for_each_line(jsonl, [&](const json& object, std::size_t line_no) {
    const std::string where = "document line " + std::to_string(line_no);
    ProfileDocument d;
    d.id = field<std::string>(object, "id", where.c_str());
    if (d.id.empty()) parse_error(where + ": empty id");
    if (!ids.insert(d.id).second) {
      throw Error(ErrorCode::DuplicateProfileId, where + ": duplicate id '" + d.id + "'");
    }
    d.domain = object.contains("domain") ? field<std::string>(object, "domain", where.c_str()) : "";
    d.language =
        object.contains("language") ? field<std::string>(object, "language", where.c_str()) : "";
    d.follower_count = follower_field(object, where.c_str());
    d.kind = kind_field(object);
    d.tokens = field<std::vector<std::string>>(object, "tokens", where.c_str());
    for (const auto& token : d.tokens) {
      if (is_forbidden_token(token)) parse_error(where + ": forbidden token '" + token + "'");
    }
    docs.push_back(std::move(d));
  });
  return docs;
}

std::string index_to_json(const TfidfIndex& index) {
  ordered_json root;
  root["corpus_size"] = index.corpus_size();
  ordered_json terms = ordered_json::object();
  for (const auto& stats : index.terms()) {
    terms[stats.term] = ordered_json{{"df", stats.document_frequency}, {"idf", stats.idf}};
  }
  root["terms"] = std::move(terms);
  ordered_json vectors = ordered_json::object();
  ordered_json kinds = ordered_json::object();
  for (const auto& vec : index.vectors()) {
    ordered_json weights = ordered_json::object();
    for (const auto& [id, w] : vec.weights) weights[index.stats(id).term] = w;
    vectors[vec.profile_id] = std::move(weights);
    kinds[vec.profile_id] = std::string(to_string(vec.kind));
  }
  root["vectors"] = std::move(vectors);
  root["kinds"] = std::move(kinds);
  return root.dump() + "\n";
}

TfidfIndex index_from_json(std::string_view text) {
  const json root = parse_json(text, "index");
  if (!root.is_object()) parse_error("index: not an object");
  const auto corpus_size = field<std::size_t>(root, "corpus_size", "index");

  std::vector<TermStats> terms;
  std::map<std::string, TermId, std::less<>> ids;
  const json& term_obj = root.at("terms");
  if (!term_obj.is_object()) parse_error("index: 'terms' must be an object");
  // json objects iterate in key order, which is the vocabulary order.
  for (const auto& [term, stats] : term_obj.items()) {
    ids.emplace(term, static_cast<TermId>(terms.size()));
    terms.push_back({term, field<std::uint64_t>(stats, "df", "index term"),
                     field<double>(stats, "idf", "index term")});
  }

  const json kinds = root.contains("kinds") ? root.at("kinds") : json::object();
  std::vector<ProfileVector> vectors;
  const json& vec_obj = root.at("vectors");
  if (!vec_obj.is_object()) parse_error("index: 'vectors' must be an object");
  for (const auto& [id, weights] : vec_obj.items()) {
    ProfileVector vec;
    vec.profile_id = id;
    if (kinds.contains(id)) {
      try {
        vec.kind = parse_document_kind(kinds.at(id).get<std::string>());
      } catch (const std::exception& e) {
        parse_error(std::string("index: kind of '") + id + "': " + e.what());
      }
    }
    if (!weights.is_object()) parse_error("index: weights of '" + id + "' must be an object");
    for (const auto& [term, w] : weights.items()) {
      auto it = ids.find(term);
      if (it == ids.end()) parse_error("index: '" + id + "' uses unknown term '" + term + "'");
      if (!w.is_number()) parse_error("index: non-numeric weight in '" + id + "'");
      vec.weights.emplace_back(it->second, w.get<double>());
    }
    vectors.push_back(std::move(vec));
  }
  return TfidfIndex::from_parts(corpus_size, std::move(terms), std::move(vectors));
}

std::string ranked_list_to_json(const RankedList& list) {
  ordered_json root;
  root["query"] = list.query_id;
  root["kind"] = list.kind;
  ordered_json entries = ordered_json::array();
  for (const auto& entry : list.entries) {
    entries.push_back(ordered_json{{"id", entry.id}, {"distance", entry.distance}});
  }
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

RankedList ranked_list_from_json(std::string_view text) {
  const json root = parse_json(text, "ranked list");
  RankedList list;
  list.query_id = field<std::string>(root, "query", "ranked list");
  list.kind = field<std::string>(root, "kind", "ranked list");
  for (const auto& entry : root.at("entries")) {
    list.entries.push_back({field<std::string>(entry, "id", "ranked entry"),
                            field<double>(entry, "distance", "ranked entry")});
  }
  return list;
}

std::string top_terms_to_json(std::string_view profile_id,
                              const std::vector<std::pair<std::string, double>>& terms) {
  ordered_json root;
  root["id"] = std::string(profile_id);
  ordered_json list = ordered_json::array();
  for (const auto& [term, weight] : terms) {
    list.push_back(ordered_json{{"term", term}, {"weight", weight}});
  }
  root["terms"] = std::move(list);
  return root.dump(2) + "\n";
}

namespace {

constexpr double kReplayTolerance = 1e-9;

bool close(double a, double b) {
  return std::abs(a - b) <= kReplayTolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

std::string trace_to_json(const ClusterTrace& trace, const TfidfIndex& index) {
  ordered_json root;
  root["query"] = trace.query_id;
  root["mode"] = std::string(to_string(trace.mode));
  ordered_json steps = ordered_json::array();
  for (const auto& step : trace.steps) {
    ordered_json delta = ordered_json::object();
    for (std::size_t i = 0; i < trace.vocabulary.size(); ++i) {
      double change = step.centroid_after[i] - step.centroid_before[i];
      if (change != 0.0) delta[index.stats(trace.vocabulary[i]).term] = change;
    }
    steps.push_back(ordered_json{{"iter", step.iteration},
                                 {"entrant", step.entrant},
                                 {"distance", step.distance},
                                 {"centroid_delta", std::move(delta)}});
  }
  root["steps"] = std::move(steps);
  return root.dump(2) + "\n";
}

ClusterTrace trace_from_json(std::string_view text, const TfidfIndex& index) {
  const json root = parse_json(text, "trace");
  const auto query = field<std::string>(root, "query", "trace");
  ClusterMode mode;
  try {
    mode = parse_cluster_mode(field<std::string>(root, "mode", "trace"));
  } catch (const Error& e) {
    parse_error(std::string("trace: ") + e.what());
  }
  const json& steps = root.at("steps");
  if (!steps.is_array()) parse_error("trace: 'steps' must be an array");

  std::vector<ProfileId> entrants;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (field<std::size_t>(steps[i], "iter", "trace step") != i + 1) {
      parse_error("trace: iterations must run consecutively from 1");
    }
    entrants.push_back(field<std::string>(steps[i], "entrant", "trace step"));
  }

  ClusterTrace trace = replay_trace(index, query, mode, entrants);

  auto mismatch = [](const std::string& what) {
    throw Error(ErrorCode::TraceIndexMismatch, "trace does not match index: " + what);
  };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (!close(step.distance, field<double>(steps[i], "distance", "trace step"))) {
      mismatch("distance differs at step " + std::to_string(i + 1));
    }
    std::map<std::string, double, std::less<>> stored =
        field<std::map<std::string, double, std::less<>>>(steps[i], "centroid_delta", "trace step");
    for (std::size_t t = 0; t < trace.vocabulary.size(); ++t) {
      const auto& term = index.stats(trace.vocabulary[t]).term;
      auto it = stored.find(term);
      double expected = it == stored.end() ? 0.0 : it->second;
      if (!close(step.centroid_after[t] - step.centroid_before[t], expected)) {
        mismatch("centroid change of '" + term + "' differs at step " + std::to_string(i + 1));
      }
      if (it != stored.end()) stored.erase(it);
    }
    if (!stored.empty()) {
      mismatch("step " + std::to_string(i + 1) + " changes '" + stored.begin()->first +
               "', which the query does not use");
    }
  }
  return trace;
}

namespace {

ordered_json score_json(const ItmScore& s) {
  return ordered_json{{"term", s.term},
                      {"itm", s.itm},
                      {"t_cluster", s.t_cluster},
                      {"t_incoming", s.t_incoming},
                      {"idf", s.idf}};
}

ItmScore score_from(const json& object) {
  const char* what = "report word";
  return ItmScore{field<std::string>(object, "term", what), field<double>(object, "t_cluster", what),
                  field<double>(object, "t_incoming", what), field<double>(object, "idf", what),
                  field<double>(object, "itm", what)};
}

}  // namespace

std::string report_to_json(const InfluenceReport& report) {
  ordered_json root;
  root["query"] = report.query_id;
  root["mode"] = std::string(to_string(report.mode));
  root["k"] = report.k;
  ordered_json steps = ordered_json::array();
  for (const auto& step : report.steps) {
    ordered_json words = ordered_json::array();
    ordered_json below = ordered_json::array();
    for (std::size_t r = 0; r < step.ranked.size(); ++r) {
      (r < report.k ? words : below).push_back(score_json(step.ranked[r]));
    }
    steps.push_back(ordered_json{{"iter", step.iteration},
                                 {"entrant", step.entrant},
                                 {"words", std::move(words)},
                                 {"below", std::move(below)}});
  }
  root["steps"] = std::move(steps);
  return root.dump(2) + "\n";
}

InfluenceReport report_from_json(std::string_view text) {
  const json root = parse_json(text, "report");
  InfluenceReport report;
  report.query_id = field<std::string>(root, "query", "report");
  try {
    report.mode = parse_cluster_mode(field<std::string>(root, "mode", "report"));
  } catch (const Error& e) {
    parse_error(std::string("report: ") + e.what());
  }
  report.k = field<std::size_t>(root, "k", "report");
  if (report.k == 0) parse_error("report: k must be at least 1");
  for (const auto& step : root.at("steps")) {
    InfluenceStep s;
    s.iteration = field<std::size_t>(step, "iter", "report step");
    s.entrant = field<std::string>(step, "entrant", "report step");
    for (const auto& w : step.at("words")) s.ranked.push_back(score_from(w));
    if (step.contains("below")) {
      for (const auto& w : step.at("below")) s.ranked.push_back(score_from(w));
    }
    if (s.ranked.size() > report.k && step.at("words").size() != report.k) {
      parse_error("report: step " + std::to_string(s.iteration) + " has a short top-k list");
    }
    report.steps.push_back(std::move(s));
  }
  return report;
}

std::string graph_to_json(const WordGraph& graph) {
  ordered_json root;
  ordered_json nodes = ordered_json::array();
  for (const auto& node : graph.nodes()) {
    ordered_json n{{"id", node.id}, {"kind", std::string(to_string(node.kind))},
                   {"label", node.label}};
    if (node.iteration) n["iter"] = *node.iteration;
    nodes.push_back(std::move(n));
  }
  ordered_json edges = ordered_json::array();
  for (const auto& edge : graph.edges()) {
    edges.push_back(ordered_json{{"from", edge.from},
                                 {"to", edge.to},
                                 {"class", std::string(to_string(edge.edge_class))},
                                 {"step", edge.step}});
  }
  root["nodes"] = std::move(nodes);
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

WordGraph graph_from_json(std::string_view text) {
  const json root = parse_json(text, "graph");
  WordGraph graph;
  try {
    for (const auto& n : root.at("nodes")) {
      GraphNode node;
      node.id = field<std::string>(n, "id", "graph node");
      node.kind = parse_node_kind(field<std::string>(n, "kind", "graph node"));
      node.label = field<std::string>(n, "label", "graph node");
      if (n.contains("iter")) node.iteration = field<std::size_t>(n, "iter", "graph node");
      graph.add_node(std::move(node));
    }
    for (const auto& e : root.at("edges")) {
      graph.add_edge({field<std::string>(e, "from", "graph edge"),
                      field<std::string>(e, "to", "graph edge"),
                      parse_edge_class(field<std::string>(e, "class", "graph edge")),
                      field<std::size_t>(e, "step", "graph edge")});
    }
  } catch (const json::exception& e) {
    parse_error(std::string("graph: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    parse_error(std::string("graph: ") + e.what());
  }
  return graph;
}

std::string word_path_to_json(const WordPath& path) {
  ordered_json root;
  root["from"] = path.from;
  root["to"] = path.to;
  root["hops"] = path.hops;
  root["length"] = path.length;
  return root.dump(2) + "\n";
}

std::string trajectory_to_json(const SignificanceTrajectory& trajectory) {
  ordered_json root;
  root["term"] = trajectory.term;
  ordered_json flags = ordered_json::array();
  for (auto flag : trajectory.per_iteration) flags.push_back(std::string(to_string(flag)));
  root["per_iteration"] = std::move(flags);
  root["classification"] = std::string(to_string(trajectory.classification));
  return root.dump(2) + "\n";
}

}  // namespace profgraph
