// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <span>
#include <string>
#include <vector>

#include "profgraph/cluster.hpp"
#include "profgraph/tfidf_index.hpp"

namespace profgraph {

inline constexpr std::size_t kDefaultWordCut = 20;

/// Influence Term Metric of one term between the existing cluster and the
/// profile entering it.
struct ItmScore {
  std::string term;
  double t_cluster = 0.0;   // centroid weight before admission
  double t_incoming = 0.0;  // entrant weight
  double idf = 0.0;
  double itm = 0.0;

  bool operator==(const ItmScore&) const = default;
};

struct InfluenceStep {
  std::size_t iteration = 0;
  ProfileId entrant;
  std::vector<ItmScore> ranked;  // every nonzero score, descending

  std::span<const ItmScore> top(std::size_t k) const {
    return std::span<const ItmScore>(ranked).first(std::min(k, ranked.size()));
  }
  bool operator==(const InfluenceStep&) const = default;
};

struct InfluenceReport {
  ProfileId query_id;
  ClusterMode mode = ClusterMode::distance;
  std::size_t k = kDefaultWordCut;
  std::vector<InfluenceStep> steps;

  bool operator==(const InfluenceReport&) const = default;
};

/// t_cluster * t_incoming * idf. High only when the term matters to both
/// sides and is rare in the corpus; zero as soon as either side lacks it.
constexpr double itm(double t_cluster, double t_incoming, double idf) noexcept {
  return t_cluster * t_incoming * idf;
}

/// Every nonzero score over the shared vocabulary, descending by ITM with ties
/// broken by term ascending. `centroid` and `incoming` are aligned with
/// `vocabulary`.
std::vector<ItmScore> rank_influence(std::span<const double> centroid,
                                     std::span<const double> incoming,
                                     std::span<const TermId> vocabulary,
                                     const TfidfIndex& index);

/// The first k of rank_influence (fewer when fewer are nonzero).
std::vector<ItmScore> influential_words(std::span<const double> centroid,
                                        std::span<const double> incoming,
                                        std::span<const TermId> vocabulary,
                                        const TfidfIndex& index, std::size_t k);

/// Scores every step of the trace between centroid_before and the entrant.
/// Throws TraceIndexMismatch when the trace names profiles or terms the index
/// does not know.
InfluenceReport annotate_trace(const ClusterTrace& trace, const TfidfIndex& index,
                               std::size_t k = kDefaultWordCut);

}  // namespace profgraph
