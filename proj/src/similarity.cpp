// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "profgraph/error.hpp"

namespace profgraph {

std::vector<double> RestrictedVector::to_dense(std::size_t dimension) const {
  std::vector<double> dense(dimension, 0.0);
  for (const auto& [pos, w] : entries) dense.at(pos) = w;
  return dense;
}

QueryVector make_query_vector(const TfidfIndex& index, std::string_view query_id) {
  const auto& vec = index.vector(query_id);
  QueryVector q;
  q.profile_id = vec.profile_id;
  q.vocabulary.reserve(vec.weights.size());
  q.weights.reserve(vec.weights.size());
  for (const auto& [id, w] : vec.weights) {
    q.vocabulary.push_back(id);
    q.weights.push_back(w);
  }
  return q;
}

RestrictedVector restrict_sparse(const ProfileVector& candidate,
                                 std::span<const TermId> vocabulary) {
  RestrictedVector out;
  // Both sides are sorted by term id: merge.
  auto it = candidate.weights.begin();
  for (std::uint32_t pos = 0; pos < vocabulary.size(); ++pos) {
    const TermId term = vocabulary[pos];
    it = std::lower_bound(it, candidate.weights.end(), term,
                          [](const auto& entry, TermId id) { return entry.first < id; });
    if (it == candidate.weights.end()) break;
    if (it->first == term) {
      out.entries.emplace_back(pos, it->second);
      out.squared_norm += it->second * it->second;
    }
  }
  return out;
}

std::vector<double> restrict_vector(const TfidfIndex& index, std::string_view candidate_id,
                                    std::span<const TermId> vocabulary) {
  const auto& vec = index.vector(candidate_id);
  std::vector<double> out;
  out.reserve(vocabulary.size());
  for (TermId term : vocabulary) out.push_back(vec.weight(term));
  return out;
}

std::vector<double> restrict_vector(const TfidfIndex& index, std::string_view candidate_id,
                                    std::span<const std::string> terms) {
  const auto& vec = index.vector(candidate_id);
  std::vector<double> out;
  out.reserve(terms.size());
  for (const auto& term : terms) {
    auto id = index.term_id(term);
    out.push_back(id ? vec.weight(*id) : 0.0);
  }
  return out;
}

namespace {

double distance_from_parts(double dot, double aa, double bb) {
  if (aa == 0.0 || bb == 0.0) return 1.0;
  // sqrt(aa * bb) rather than sqrt(aa) * sqrt(bb): identical vectors then give
  // a cosine of exactly one.
  double cosine = dot / std::sqrt(aa * bb);
  return std::clamp(1.0 - cosine, 0.0, 1.0);
}

}  // namespace

double cosine_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "cosine_distance: vectors differ in length");
  }
  double dot = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    aa += a[i] * a[i];
    if (b[i] != 0.0) {
      dot += a[i] * b[i];
      bb += b[i] * b[i];
    }
  }
  return distance_from_parts(dot, aa, bb);
}

double cosine_distance(std::span<const double> a, double a_squared_norm,
                       const RestrictedVector& b) {
  double dot = 0.0;
  for (const auto& [pos, w] : b.entries) dot += a[pos] * w;
  return distance_from_parts(dot, a_squared_norm, b.squared_norm);
}

namespace {

std::string list_kind(const TfidfIndex& index, std::string_view query_id,
                      std::span<const ProfileId> candidates) {
  std::set<DocumentKind> kinds;
  for (const auto& id : candidates) kinds.insert(index.vector(id).kind);
  std::string kind(to_string(index.vector(query_id).kind));
  kind += '-';
  kind += kinds.size() == 1 ? std::string(to_string(*kinds.begin())) : std::string("mixed");
  return kind;
}

}  // namespace

RankedList rank_candidates(const TfidfIndex& index, std::string_view query_id,
                           std::span<const ProfileId> candidate_ids, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  const QueryVector query = make_query_vector(index, query_id);

  std::vector<ProfileId> candidates;
  std::set<std::string_view> seen;
  for (const auto& id : candidate_ids) {
    index.vector(id);  // UnknownProfile
    if (id == query_id || !seen.insert(id).second) continue;
    candidates.push_back(id);
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::EmptyCandidates,
                "no candidates to rank against '" + std::string(query_id) + "'");
  }

  double query_sq = 0.0;
  for (double w : query.weights) query_sq += w * w;

  RankedList list;
  list.query_id = query.profile_id;
  list.kind = list_kind(index, query_id, candidates);
  list.entries.reserve(candidates.size());
  for (const auto& id : candidates) {
    auto restricted = restrict_sparse(index.vector(id), query.vocabulary);
    list.entries.push_back({id, cosine_distance(query.weights, query_sq, restricted)});
  }
  std::sort(list.entries.begin(), list.entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.distance != b.distance) return a.distance < b.distance;
              return a.id < b.id;
            });
  if (list.entries.size() > k) list.entries.resize(k);
  return list;
}

RankedList suggest(const TfidfIndex& index, std::string_view query_id, DocumentKind kind,
                   std::size_t k) {
  index.vector(query_id);
  std::vector<ProfileId> candidates;
  for (const auto& vec : index.vectors()) {
    if (vec.kind == kind && vec.profile_id != query_id) candidates.push_back(vec.profile_id);
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::EmptyCandidates, "no documents of kind '" +
                                                std::string(to_string(kind)) + "' to suggest");
  }
  return rank_candidates(index, query_id, candidates, k);
}

}  // namespace profgraph
