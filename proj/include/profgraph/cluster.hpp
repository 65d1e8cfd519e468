// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profgraph/similarity.hpp"
#include "profgraph/tfidf_index.hpp"

namespace profgraph {

/// Distance mode admits the closest remaining profile at each step;
/// chronological mode admits profiles in a caller-supplied order (typically
/// the order in which they followed the query account).
enum class ClusterMode { distance, chronological };

std::string_view to_string(ClusterMode mode) noexcept;
/// Throws InvalidArgument.
ClusterMode parse_cluster_mode(std::string_view text);

/// A cluster growing around a single query profile.
///
/// The centroid lives on the query vocabulary only. Every admission replaces
/// it with the plain two-way mean of itself and the entrant's restricted
/// vector, so earlier members fade geometrically instead of being weighted by
/// member count.
struct ClusterState {
  ProfileId query_id;
  std::vector<TermId> vocabulary;
  std::vector<double> centroid;
  std::vector<ProfileId> members;  // admission order
  std::set<ProfileId, std::less<>> remaining;
  std::size_t iteration = 0;  // == members.size()

  bool operator==(const ClusterState&) const = default;
};

struct StepOutcome {
  ClusterState state;
  ProfileId entrant;
  double distance = 0.0;
};

struct ClusterStep {
  std::size_t iteration = 0;  // 1-based
  ProfileId entrant;
  double distance = 0.0;  // entrant to centroid_before
  std::vector<double> centroid_before;
  std::vector<double> centroid_after;

  bool operator==(const ClusterStep&) const = default;
};

struct ClusterTrace {
  ProfileId query_id;
  ClusterMode mode = ClusterMode::distance;
  std::vector<TermId> vocabulary;
  std::vector<ClusterStep> steps;

  bool operator==(const ClusterTrace&) const = default;
};

/// Throws UnknownProfile, QueryAmongCandidates, InvalidArgument on duplicate
/// candidates.
ClusterState init_cluster(const TfidfIndex& index, std::string_view query_id,
                          std::span<const ProfileId> candidates);

/// Admits the remaining profile closest to the centroid (ties by id).
/// Throws Exhausted when nothing remains.
StepOutcome step_distance(ClusterState state, const TfidfIndex& index);

/// Admits `entrant` regardless of its distance. Throws UnknownProfile if it
/// is not among the remaining profiles.
StepOutcome step_entrant(ClusterState state, const TfidfIndex& index,
                         std::string_view entrant);

/// Runs to exhaustion. In chronological mode `order` must be a permutation of
/// `candidates` (BadOrder otherwise); in distance mode it is ignored.
ClusterTrace run_clustering(const TfidfIndex& index, std::string_view query_id,
                            std::span<const ProfileId> candidates, ClusterMode mode,
                            std::optional<std::span<const ProfileId>> order = std::nullopt);

/// Recomputes the trace from its admission order against `index`. Used to
/// rebuild a persisted trace. Throws TraceIndexMismatch when the entrants are
/// not admissible against this index.
ClusterTrace replay_trace(const TfidfIndex& index, std::string_view query_id,
                          ClusterMode mode, std::span<const ProfileId> entrants);

}  // namespace profgraph
