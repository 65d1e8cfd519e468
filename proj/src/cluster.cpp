// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/cluster.hpp"

#include <map>

#include "profgraph/error.hpp"

namespace profgraph {

std::string_view to_string(ClusterMode mode) noexcept {
  return mode == ClusterMode::distance ? "distance" : "chronological";
}

ClusterMode parse_cluster_mode(std::string_view text) {
  if (text == "distance") return ClusterMode::distance;
  if (text == "chronological") return ClusterMode::chronological;
  throw Error(ErrorCode::InvalidArgument, "unknown cluster mode '" + std::string(text) + "'");
}

namespace {

double squared_norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return sum;
}

// Caches each candidate's restricted vector so a full run costs one
// restriction per candidate instead of one per step.
class RestrictionCache {
 public:
  RestrictionCache(const TfidfIndex& index, std::span<const TermId> vocabulary)
      : index_(index), vocabulary_(vocabulary) {}

  const RestrictedVector& get(const ProfileId& id) {
    auto it = cache_.find(id);
    if (it == cache_.end()) {
      it = cache_.emplace(id, restrict_sparse(index_.vector(id), vocabulary_)).first;
    }
    return it->second;
  }

 private:
  const TfidfIndex& index_;
  std::span<const TermId> vocabulary_;
  std::map<ProfileId, RestrictedVector, std::less<>> cache_;
};

// centroid <- (centroid + entrant) / 2, elementwise.
void average_into(std::vector<double>& centroid, const RestrictedVector& entrant) {
  auto it = entrant.entries.begin();
  for (std::uint32_t i = 0; i < centroid.size(); ++i) {
    double incoming = 0.0;
    if (it != entrant.entries.end() && it->first == i) {
      incoming = it->second;
      ++it;
    }
    centroid[i] = (centroid[i] + incoming) / 2.0;
  }
}

StepOutcome admit(ClusterState state, const ProfileId& entrant, double distance,
                  const RestrictedVector& restricted) {
  average_into(state.centroid, restricted);
  state.remaining.erase(state.remaining.find(entrant));
  state.members.push_back(entrant);
  ++state.iteration;
  return StepOutcome{std::move(state), entrant, distance};
}

StepOutcome step_closest(ClusterState state, RestrictionCache& cache) {
  if (state.remaining.empty()) {
    throw Error(ErrorCode::Exhausted, "no profiles left to admit");
  }
  const double centroid_sq = squared_norm(state.centroid);
  const ProfileId* best = nullptr;
  const RestrictedVector* best_vec = nullptr;
  double best_distance = 0.0;
  // `remaining` iterates in id order, so a strict comparison keeps the
  // lexicographically smallest id among ties.
  for (const auto& id : state.remaining) {
    const auto& restricted = cache.get(id);
    double d = cosine_distance(state.centroid, centroid_sq, restricted);
    if (best == nullptr || d < best_distance) {
      best = &id;
      best_vec = &restricted;
      best_distance = d;
    }
  }
  ProfileId entrant = *best;
  return admit(std::move(state), entrant, best_distance, *best_vec);
}

StepOutcome step_named(ClusterState state, RestrictionCache& cache, std::string_view entrant) {
  auto it = state.remaining.find(entrant);
  if (it == state.remaining.end()) {
    throw Error(ErrorCode::UnknownProfile,
                "'" + std::string(entrant) + "' is not waiting to enter the cluster");
  }
  ProfileId id = *it;
  const auto& restricted = cache.get(id);
  double d = cosine_distance(state.centroid, squared_norm(state.centroid), restricted);
  return admit(std::move(state), id, d, restricted);
}

}  // namespace

ClusterState init_cluster(const TfidfIndex& index, std::string_view query_id,
                          std::span<const ProfileId> candidates) {
  QueryVector query = make_query_vector(index, query_id);
  ClusterState state;
  state.query_id = query.profile_id;
  for (const auto& id : candidates) {
    if (id == query_id) {
      throw Error(ErrorCode::QueryAmongCandidates,
                  "query '" + std::string(query_id) + "' listed among its own candidates");
    }
    index.vector(id);
    if (!state.remaining.insert(id).second) {
      throw Error(ErrorCode::InvalidArgument, "candidate '" + id + "' listed twice");
    }
  }
  state.vocabulary = std::move(query.vocabulary);
  state.centroid = std::move(query.weights);
  return state;
}

StepOutcome step_distance(ClusterState state, const TfidfIndex& index) {
  RestrictionCache cache(index, state.vocabulary);
  return step_closest(std::move(state), cache);
}

StepOutcome step_entrant(ClusterState state, const TfidfIndex& index,
                         std::string_view entrant) {
  RestrictionCache cache(index, state.vocabulary);
  return step_named(std::move(state), cache, entrant);
}

namespace {

void check_permutation(std::span<const ProfileId> candidates, std::span<const ProfileId> order) {
  std::multiset<std::string_view> a(candidates.begin(), candidates.end());
  std::multiset<std::string_view> b(order.begin(), order.end());
  if (a != b) {
    throw Error(ErrorCode::BadOrder, "entry order is not a permutation of the candidates");
  }
}

}  // namespace

ClusterTrace run_clustering(const TfidfIndex& index, std::string_view query_id,
                            std::span<const ProfileId> candidates, ClusterMode mode,
                            std::optional<std::span<const ProfileId>> order) {
  ClusterState state = init_cluster(index, query_id, candidates);
  if (mode == ClusterMode::chronological) {
    if (!order) throw Error(ErrorCode::BadOrder, "chronological mode needs an entry order");
    check_permutation(candidates, *order);
  }

  ClusterTrace trace;
  trace.query_id = state.query_id;
  trace.mode = mode;
  trace.vocabulary = state.vocabulary;
  trace.steps.reserve(candidates.size());

  // The cache holds a span into the vocabulary; keep it pointing at the trace copy.
  RestrictionCache cache(index, trace.vocabulary);
  std::size_t next = 0;
  while (!state.remaining.empty()) {
    ClusterStep step;
    step.centroid_before = state.centroid;
    StepOutcome outcome = mode == ClusterMode::distance
                              ? step_closest(std::move(state), cache)
                              : step_named(std::move(state), cache, (*order)[next++]);
    state = std::move(outcome.state);
    step.iteration = state.iteration;
    step.entrant = std::move(outcome.entrant);
    step.distance = outcome.distance;
    step.centroid_after = state.centroid;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

ClusterTrace replay_trace(const TfidfIndex& index, std::string_view query_id,
                          ClusterMode mode, std::span<const ProfileId> entrants) {
  try {
    ClusterState state = init_cluster(index, query_id, entrants);
    ClusterTrace trace;
    trace.query_id = state.query_id;
    trace.mode = mode;
    trace.vocabulary = state.vocabulary;
    RestrictionCache cache(index, trace.vocabulary);
    for (const auto& entrant : entrants) {
      ClusterStep step;
      step.centroid_before = state.centroid;
      StepOutcome outcome = step_named(std::move(state), cache, entrant);
      state = std::move(outcome.state);
      step.iteration = state.iteration;
      step.entrant = std::move(outcome.entrant);
      step.distance = outcome.distance;
      step.centroid_after = state.centroid;
      trace.steps.push_back(std::move(step));
    }
    return trace;
  } catch (const Error& e) {
    throw Error(ErrorCode::TraceIndexMismatch, std::string("trace does not match index: ") + e.what());
  }
}

}  // namespace profgraph
