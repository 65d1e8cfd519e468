// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/wordgraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

#include "profgraph/error.hpp"

namespace profgraph {

std::string_view to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::profile: return "profile";
    case NodeKind::cluster_iteration: return "cluster_iteration";
    case NodeKind::word: return "word";
  }
  return "profile";
}

std::string_view to_string(EdgeClass cls) noexcept {
  switch (cls) {
    case EdgeClass::top_k: return "top_k";
    case EdgeClass::below_top_k: return "below_top_k";
    case EdgeClass::blowup_internal: return "blowup_internal";
  }
  return "top_k";
}

NodeKind parse_node_kind(std::string_view text) {
  if (text == "profile") return NodeKind::profile;
  if (text == "cluster_iteration") return NodeKind::cluster_iteration;
  if (text == "word") return NodeKind::word;
  throw Error(ErrorCode::Parse, "unknown node kind '" + std::string(text) + "'");
}

EdgeClass parse_edge_class(std::string_view text) {
  if (text == "top_k") return EdgeClass::top_k;
  if (text == "below_top_k") return EdgeClass::below_top_k;
  if (text == "blowup_internal") return EdgeClass::blowup_internal;
  throw Error(ErrorCode::Parse, "unknown edge class '" + std::string(text) + "'");
}

std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::in_top_k: return "in_top_k";
    case Membership::shared_but_below: return "shared_but_below";
    case Membership::absent: return "absent";
  }
  return "absent";
}

std::string_view to_string(Significance s) noexcept {
  switch (s) {
    case Significance::decreasing: return "decreasing";
    case Significance::increasing: return "increasing";
    case Significance::maintaining: return "maintaining";
    case Significance::oscillating: return "oscillating";
    case Significance::none: return "none";
  }
  return "none";
}

std::string profile_node_id(std::string_view handle) { return "p:" + std::string(handle); }
std::string cluster_node_id(std::size_t iteration) { return "c:" + std::to_string(iteration); }
std::string word_node_id(std::string_view term) { return "w:" + std::string(term); }

void WordGraph::add_node(GraphNode node) {
  if (node.kind == NodeKind::cluster_iteration) {
    if (!node.iteration || *node.iteration < 1) {
      throw Error(ErrorCode::InvalidArgument, "cluster node '" + node.id + "' needs iteration >= 1");
    }
  } else if (node.iteration) {
    throw Error(ErrorCode::InvalidArgument, "only cluster nodes carry an iteration");
  }
  std::string id = node.id;
  if (!nodes_.emplace(id, std::move(node)).second) {
    throw Error(ErrorCode::InvalidArgument, "duplicate node '" + id + "'");
  }
  adjacency_[id];
}

void WordGraph::add_edge(GraphEdge edge) {
  const GraphNode* a = find(edge.from);
  const GraphNode* b = find(edge.to);
  if (a == nullptr || b == nullptr) {
    throw Error(ErrorCode::InvalidArgument,
                "edge " + edge.from + " -- " + edge.to + " references a missing node");
  }
  if ((a->kind == NodeKind::word) == (b->kind == NodeKind::word)) {
    throw Error(ErrorCode::InvalidArgument,
                "edge " + edge.from + " -- " + edge.to + " must touch exactly one word");
  }
  adjacency_[edge.from].insert(edge.to);
  adjacency_[edge.to].insert(edge.from);
  edges_.push_back(std::move(edge));
}

namespace {

int kind_rank(NodeKind kind) {
  switch (kind) {
    case NodeKind::profile: return 0;
    case NodeKind::cluster_iteration: return 1;
    case NodeKind::word: return 2;
  }
  return 3;
}

}  // namespace

std::vector<GraphNode> WordGraph::nodes() const {
  std::vector<GraphNode> out;
  out.reserve(nodes_.size());
  for (const auto& [id, node] : nodes_) out.push_back(node);
  std::sort(out.begin(), out.end(), [](const GraphNode& a, const GraphNode& b) {
    return std::tuple(kind_rank(a.kind), a.iteration.value_or(0), std::string_view(a.id)) <
           std::tuple(kind_rank(b.kind), b.iteration.value_or(0), std::string_view(b.id));
  });
  return out;
}

std::vector<GraphEdge> WordGraph::edges() const {
  std::vector<GraphEdge> out = edges_;
  std::sort(out.begin(), out.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.step, a.edge_class, a.from, a.to) <
           std::tie(b.step, b.edge_class, b.from, b.to);
  });
  return out;
}

const GraphNode* WordGraph::find(std::string_view id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const std::set<std::string>& WordGraph::neighbors(std::string_view id) const {
  auto it = adjacency_.find(id);
  if (it == adjacency_.end()) {
    throw Error(ErrorCode::UnknownNode, "unknown node '" + std::string(id) + "'");
  }
  return it->second;
}

WordGraph build_graph(const InfluenceReport& report, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (k > report.k) {
    throw Error(ErrorCode::InvalidArgument, "graph cut " + std::to_string(k) +
                                                " exceeds the report cut " +
                                                std::to_string(report.k));
  }

  WordGraph graph;
  graph.add_node({profile_node_id(report.query_id), NodeKind::profile, report.query_id, {}});
  for (const auto& step : report.steps) {
    graph.add_node({profile_node_id(step.entrant), NodeKind::profile, step.entrant, {}});
    graph.add_node({cluster_node_id(step.iteration), NodeKind::cluster_iteration,
                    std::to_string(step.iteration), step.iteration});
    for (const auto& score : step.ranked) {
      std::string id = word_node_id(score.term);
      if (graph.find(id) == nullptr) graph.add_node({id, NodeKind::word, score.term, {}});
    }
  }

  // Profiles already inside the cluster that carried each word at an earlier
  // step, and the dashed edges already drawn to them.
  std::map<std::string, std::vector<std::string>> carriers;
  std::set<std::pair<std::string, std::string>> blowups;

  std::string existing = profile_node_id(report.query_id);
  for (std::size_t s = 0; s < report.steps.size(); ++s) {
    const auto& step = report.steps[s];
    const std::string incoming = profile_node_id(step.entrant);
    for (std::size_t r = 0; r < step.ranked.size(); ++r) {
      const std::string word = word_node_id(step.ranked[r].term);
      const EdgeClass cls = r < k ? EdgeClass::top_k : EdgeClass::below_top_k;
      graph.add_edge({existing, word, cls, step.iteration});
      graph.add_edge({incoming, word, cls, step.iteration});
      if (s > 0) {
        for (const auto& member : carriers[word]) {
          if (blowups.emplace(word, member).second) {
            graph.add_edge({word, member, EdgeClass::blowup_internal, step.iteration});
          }
        }
      }
    }
    for (const auto& score : step.ranked) {
      auto& list = carriers[word_node_id(score.term)];
      if (s == 0) list.push_back(profile_node_id(report.query_id));
      list.push_back(incoming);
    }
    existing = cluster_node_id(step.iteration);
  }
  return graph;
}

WordGraph build_graph(const ClusterTrace& trace, const InfluenceReport& report, std::size_t k) {
  auto mismatch = [](const std::string& what) {
    throw Error(ErrorCode::ReportTraceMismatch, what);
  };
  if (trace.query_id != report.query_id) mismatch("report and trace have different queries");
  if (trace.mode != report.mode) mismatch("report and trace use different modes");
  if (trace.steps.size() != report.steps.size()) mismatch("report and trace differ in length");
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (trace.steps[i].iteration != report.steps[i].iteration ||
        trace.steps[i].entrant != report.steps[i].entrant) {
      mismatch("report and trace disagree at step " + std::to_string(i + 1));
    }
  }
  return build_graph(report, k);
}

namespace {

std::string resolve_endpoint(const WordGraph& graph, std::string_view name) {
  const GraphNode* node = graph.find(name);
  if (node == nullptr) node = graph.find(profile_node_id(name));
  if (node == nullptr) {
    throw Error(ErrorCode::UnknownNode, "no profile node '" + std::string(name) + "'");
  }
  if (node->kind == NodeKind::word) {
    throw Error(ErrorCode::UnknownNode, "'" + std::string(name) + "' is a word, not a profile");
  }
  return node->id;
}

}  // namespace

WordPath word_path(const WordGraph& graph, std::string_view from, std::string_view to) {
  WordPath path;
  path.from = resolve_endpoint(graph, from);
  path.to = resolve_endpoint(graph, to);

  std::map<std::string, std::string, std::less<>> parent;
  std::deque<std::string> frontier{path.from};
  parent.emplace(path.from, std::string());
  while (!frontier.empty() && !parent.contains(path.to)) {
    std::string current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& next : graph.neighbors(current)) {
      if (parent.emplace(next, current).second) frontier.push_back(next);
    }
  }
  if (!parent.contains(path.to)) {
    throw Error(ErrorCode::NoPath, "no word path between " + path.from + " and " + path.to);
  }
  for (std::string at = path.to; !at.empty(); at = parent.at(at)) path.hops.push_back(at);
  std::reverse(path.hops.begin(), path.hops.end());
  path.length = path.hops.size() - 1;
  return path;
}

std::vector<std::string> profiles_of_word(const WordGraph& graph, std::string_view term) {
  const GraphNode* node = graph.find(word_node_id(term));
  if (node == nullptr) {
    node = graph.find(term);
    if (node == nullptr || node->kind != NodeKind::word) {
      throw Error(ErrorCode::UnknownNode, "no word node '" + std::string(term) + "'");
    }
  }
  const auto& adjacent = graph.neighbors(node->id);
  return {adjacent.begin(), adjacent.end()};
}

Significance classify_flags(std::span<const Membership> flags) {
  auto top = [](Membership m) { return m == Membership::in_top_k; };
  if (std::none_of(flags.begin(), flags.end(), top)) return Significance::none;
  if (std::all_of(flags.begin(), flags.end(), top)) return Significance::maintaining;
  std::size_t transitions = 0;
  for (std::size_t i = 1; i < flags.size(); ++i) {
    if (top(flags[i]) != top(flags[i - 1])) ++transitions;
  }
  if (transitions >= 2) return Significance::oscillating;
  return top(flags.front()) ? Significance::decreasing : Significance::increasing;
}

SignificanceTrajectory classify_trajectory(const InfluenceReport& report, std::string_view term,
                                           std::size_t k) {
  SignificanceTrajectory trajectory;
  trajectory.term = std::string(term);
  for (const auto& step : report.steps) {
    auto it = std::find_if(step.ranked.begin(), step.ranked.end(),
                           [&](const ItmScore& s) { return s.term == term; });
    if (it == step.ranked.end()) {
      trajectory.per_iteration.push_back(Membership::absent);
    } else if (static_cast<std::size_t>(it - step.ranked.begin()) < k) {
      trajectory.per_iteration.push_back(Membership::in_top_k);
    } else {
      trajectory.per_iteration.push_back(Membership::shared_but_below);
    }
  }
  trajectory.classification = classify_flags(trajectory.per_iteration);
  return trajectory;
}

namespace {

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_dot(const WordGraph& graph) {
  std::ostringstream out;
  out << "graph wordgraph {\n";
  for (const auto& node : graph.nodes()) {
    out << "  " << quoted(node.id) << " [";
    switch (node.kind) {
      case NodeKind::profile: out << "shape=box"; break;
      case NodeKind::cluster_iteration: out << "shape=box, peripheries=2"; break;
      case NodeKind::word: out << "shape=oval"; break;
    }
    out << ", label=" << quoted(node.label) << "];\n";
  }
  for (const auto& edge : graph.edges()) {
    out << "  " << quoted(edge.from) << " -- " << quoted(edge.to) << " [";
    switch (edge.edge_class) {
      case EdgeClass::top_k: out << "color=blue, style=solid"; break;
      case EdgeClass::below_top_k: out << "color=red, style=solid"; break;
      case EdgeClass::blowup_internal: out << "color=black, style=dashed"; break;
    }
    out << ", step=" << edge.step << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace profgraph
