// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profgraph/cluster.hpp"
#include "profgraph/influence.hpp"

namespace profgraph {

enum class NodeKind { profile, cluster_iteration, word };
enum class EdgeClass { top_k, below_top_k, blowup_internal };

std::string_view to_string(NodeKind kind) noexcept;
std::string_view to_string(EdgeClass cls) noexcept;
NodeKind parse_node_kind(std::string_view text);
EdgeClass parse_edge_class(std::string_view text);

/// Node ids are namespaced by kind: "p:<handle>", "c:<iteration>", "w:<term>".
std::string profile_node_id(std::string_view handle);
std::string cluster_node_id(std::size_t iteration);
std::string word_node_id(std::string_view term);

struct GraphNode {
  std::string id;
  NodeKind kind = NodeKind::profile;
  std::string label;
  std::optional<std::size_t> iteration;  // cluster_iteration nodes only

  bool operator==(const GraphNode&) const = default;
};

struct GraphEdge {
  std::string from;
  std::string to;
  EdgeClass edge_class = EdgeClass::top_k;
  std::size_t step = 0;

  bool operator==(const GraphEdge&) const = default;
};

/// Profiles and cluster iterations on one side, words on the other. Every
/// edge touches exactly one word node.
class WordGraph {
 public:
  /// Throws InvalidArgument on a duplicate node, a dangling edge, or an edge
  /// that does not touch exactly one word.
  void add_node(GraphNode node);
  void add_edge(GraphEdge edge);

  /// Nodes ordered by kind (profiles, clusters, words), then iteration, then
  /// id; edges by step, class, then endpoints.
  std::vector<GraphNode> nodes() const;
  std::vector<GraphEdge> edges() const;

  const GraphNode* find(std::string_view id) const;
  /// Sorted, duplicate-free neighbour ids. Throws UnknownNode.
  const std::set<std::string>& neighbors(std::string_view id) const;

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool operator==(const WordGraph& other) const {
    return nodes() == other.nodes() && edges() == other.edges();
  }

 private:
  std::map<std::string, GraphNode, std::less<>> nodes_;
  std::vector<GraphEdge> edges_;
  std::map<std::string, std::set<std::string>, std::less<>> adjacency_;
};

struct WordPath {
  std::string from;
  std::string to;
  std::vector<std::string> hops;  // node ids, endpoints included
  std::size_t length = 0;         // hops.size() - 1

  bool operator==(const WordPath&) const = default;
};

enum class Membership { in_top_k, shared_but_below, absent };
enum class Significance { decreasing, increasing, maintaining, oscillating, none };

std::string_view to_string(Membership m) noexcept;
std::string_view to_string(Significance s) noexcept;

struct SignificanceTrajectory {
  std::string term;
  std::vector<Membership> per_iteration;
  Significance classification = Significance::none;

  bool operator==(const SignificanceTrajectory&) const = default;
};

/// Builds the graph for `report`, checking first that it describes `trace`
/// (ReportTraceMismatch otherwise). `k` may not exceed the report's cut.
WordGraph build_graph(const ClusterTrace& trace, const InfluenceReport& report, std::size_t k);
WordGraph build_graph(const InfluenceReport& report, std::size_t k);

/// Shortest alternating path by breadth-first search. Endpoints may be given
/// as profile handles or node ids. Throws UnknownNode, NoPath.
WordPath word_path(const WordGraph& graph, std::string_view from, std::string_view to);

/// Profile and cluster node ids adjacent to the word, in id order.
/// Throws UnknownNode.
std::vector<std::string> profiles_of_word(const WordGraph& graph, std::string_view term);

/// Maintaining beats oscillating beats decreasing/increasing; a term that is
/// never in the top k is `none`.
Significance classify_flags(std::span<const Membership> flags);

SignificanceTrajectory classify_trajectory(const InfluenceReport& report, std::string_view term,
                                           std::size_t k);

/// Graphviz text: profiles as boxes, clusters as numbered boxes, words as
/// ovals; top-k edges blue, below-top-k red, blow-up edges dashed.
std::string emit_dot(const WordGraph& graph);

}  // namespace profgraph
