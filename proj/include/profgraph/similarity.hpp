// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profgraph/tfidf_index.hpp"

namespace profgraph {

/// The query profile's own weights. Comparisons against a query only ever
/// look at the terms the query uses.
struct QueryVector {
  ProfileId profile_id;
  std::vector<TermId> vocabulary;  // ascending term ids
  std::vector<double> weights;     // aligned with vocabulary, all > 0

  bool operator==(const QueryVector&) const = default;
};

/// A candidate's weights on a query vocabulary, kept sparse: `entries` holds
/// (position in vocabulary, weight) pairs for the nonzero positions only.
struct RestrictedVector {
  std::vector<std::pair<std::uint32_t, double>> entries;
  double squared_norm = 0.0;

  std::vector<double> to_dense(std::size_t dimension) const;
};

struct RankedEntry {
  ProfileId id;
  double distance = 0.0;

  bool operator==(const RankedEntry&) const = default;
};

struct RankedList {
  ProfileId query_id;
  std::string kind;  // e.g. "user-user", "user-article", "brand-user"
  std::vector<RankedEntry> entries;  // ascending distance, then id

  bool operator==(const RankedList&) const = default;
};

/// Throws UnknownProfile.
QueryVector make_query_vector(const TfidfIndex& index, std::string_view query_id);

RestrictedVector restrict_sparse(const ProfileVector& candidate,
                                 std::span<const TermId> vocabulary);

/// Candidate weights on exactly `vocabulary`, zero-filled. Throws UnknownProfile.
std::vector<double> restrict_vector(const TfidfIndex& index, std::string_view candidate_id,
                                    std::span<const TermId> vocabulary);

/// Same, addressed by term strings; terms unknown to the corpus read as zero.
std::vector<double> restrict_vector(const TfidfIndex& index, std::string_view candidate_id,
                                    std::span<const std::string> terms);

/// 1 - cos(a, b), clamped to [0, 1]. A zero vector on either side is at
/// distance 1. Both inputs must have the same length.
double cosine_distance(std::span<const double> a, std::span<const double> b);

/// Dense-versus-sparse form of the same computation. Bit-identical to the
/// dense overload when `a_squared_norm` is the sum of squares of `a`.
double cosine_distance(std::span<const double> a, double a_squared_norm,
                       const RestrictedVector& b);

/// Throws UnknownProfile, EmptyCandidates (after dropping the query itself
/// from `candidate_ids`), InvalidArgument for k == 0.
RankedList rank_candidates(const TfidfIndex& index, std::string_view query_id,
                           std::span<const ProfileId> candidate_ids, std::size_t k);

/// rank_candidates over every document of the given kind.
RankedList suggest(const TfidfIndex& index, std::string_view query_id, DocumentKind kind,
                   std::size_t k);

}  // namespace profgraph
