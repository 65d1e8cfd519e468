// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/influence.hpp"

#include <algorithm>

#include "profgraph/error.hpp"
#include "profgraph/similarity.hpp"

namespace profgraph {

std::vector<ItmScore> rank_influence(std::span<const double> centroid,
                                     std::span<const double> incoming,
                                     std::span<const TermId> vocabulary,
                                     const TfidfIndex& index) {
  if (centroid.size() != vocabulary.size() || incoming.size() != vocabulary.size()) {
    throw Error(ErrorCode::InvalidArgument, "influence vectors must match the vocabulary");
  }
  std::vector<ItmScore> scores;
  for (std::size_t i = 0; i < vocabulary.size(); ++i) {
    if (centroid[i] == 0.0 || incoming[i] == 0.0) continue;
    const auto& stats = index.stats(vocabulary[i]);
    double score = itm(centroid[i], incoming[i], stats.idf);
    if (score > 0.0) scores.push_back({stats.term, centroid[i], incoming[i], stats.idf, score});
  }
  std::sort(scores.begin(), scores.end(), [](const ItmScore& a, const ItmScore& b) {
    if (a.itm != b.itm) return a.itm > b.itm;
    return a.term < b.term;
  });
  return scores;
}

std::vector<ItmScore> influential_words(std::span<const double> centroid,
                                        std::span<const double> incoming,
                                        std::span<const TermId> vocabulary,
                                        const TfidfIndex& index, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  auto ranked = rank_influence(centroid, incoming, vocabulary, index);
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

InfluenceReport annotate_trace(const ClusterTrace& trace, const TfidfIndex& index,
                               std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  auto mismatch = [](const std::string& what) {
    throw Error(ErrorCode::TraceIndexMismatch, what);
  };
  if (!index.contains(trace.query_id)) mismatch("unknown query '" + trace.query_id + "'");
  for (TermId id : trace.vocabulary) {
    if (id >= index.terms().size()) mismatch("trace vocabulary exceeds the index vocabulary");
  }

  InfluenceReport report;
  report.query_id = trace.query_id;
  report.mode = trace.mode;
  report.k = k;
  report.steps.reserve(trace.steps.size());
  for (const auto& step : trace.steps) {
    if (!index.contains(step.entrant)) mismatch("unknown entrant '" + step.entrant + "'");
    if (step.centroid_before.size() != trace.vocabulary.size()) {
      mismatch("centroid size differs from the trace vocabulary");
    }
    auto incoming = restrict_vector(index, step.entrant, trace.vocabulary);
    report.steps.push_back(
        {step.iteration, step.entrant,
         rank_influence(step.centroid_before, incoming, trace.vocabulary, index)});
  }
  return report;
}

}  // namespace profgraph
