// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/tfidf_index.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "profgraph/error.hpp"

namespace profgraph {

double ProfileVector::weight(TermId term) const noexcept {
  auto it = std::lower_bound(weights.begin(), weights.end(), term,
                             [](const auto& entry, TermId id) { return entry.first < id; });
  return (it != weights.end() && it->first == term) ? it->second : 0.0;
}

namespace {

double euclidean_norm(const std::vector<std::pair<TermId, double>>& weights) {
  double sum = 0.0;
  for (const auto& [id, w] : weights) sum += w * w;
  return std::sqrt(sum);
}

}  // namespace

void TfidfIndex::rebuild_lookup() {
  term_lookup_.clear();
  profile_lookup_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    term_lookup_.emplace(terms_[i].term, static_cast<TermId>(i));
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    profile_lookup_.emplace(vectors_[i].profile_id, i);
  }
}

TfidfIndex TfidfIndex::from_parts(std::size_t corpus_size, std::vector<TermStats> terms,
                                  std::vector<ProfileVector> vectors) {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::Parse, "index: " + what); };
  if (corpus_size == 0) throw Error(ErrorCode::DegenerateCorpus, "index: corpus is empty");
  if (vectors.size() != corpus_size) fail("corpus_size does not match the number of vectors");

  std::sort(terms.begin(), terms.end(),
            [](const TermStats& a, const TermStats& b) { return a.term < b.term; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && terms[i].term == terms[i - 1].term) fail("duplicate term '" + terms[i].term + "'");
    if (terms[i].document_frequency < 1 || terms[i].document_frequency > corpus_size)
      fail("document frequency out of range for '" + terms[i].term + "'");
  }
  std::sort(vectors.begin(), vectors.end(), [](const ProfileVector& a, const ProfileVector& b) {
    return a.profile_id < b.profile_id;
  });
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].profile_id == vectors[i - 1].profile_id)
      throw Error(ErrorCode::DuplicateProfileId,
                  "index: duplicate profile '" + vectors[i].profile_id + "'");
  }

  TfidfIndex index;
  index.corpus_size_ = corpus_size;
  index.terms_ = std::move(terms);
  index.vectors_ = std::move(vectors);
  for (auto& vec : index.vectors_) {
    std::sort(vec.weights.begin(), vec.weights.end());
    for (std::size_t i = 0; i < vec.weights.size(); ++i) {
      if (vec.weights[i].first >= index.terms_.size()) fail("weight references unknown term");
      if (!(vec.weights[i].second > 0.0)) fail("non-positive weight in '" + vec.profile_id + "'");
      if (i > 0 && vec.weights[i].first == vec.weights[i - 1].first)
        fail("repeated term in '" + vec.profile_id + "'");
    }
    vec.norm = euclidean_norm(vec.weights);
  }
  index.rebuild_lookup();
  return index;
}

std::optional<TermId> TfidfIndex::term_id(std::string_view term) const {
  auto it = term_lookup_.find(term);
  if (it == term_lookup_.end()) return std::nullopt;
  return it->second;
}

bool TfidfIndex::contains(std::string_view profile_id) const {
  return profile_lookup_.find(profile_id) != profile_lookup_.end();
}

const ProfileVector& TfidfIndex::vector(std::string_view profile_id) const {
  auto it = profile_lookup_.find(profile_id);
  if (it == profile_lookup_.end()) {
    throw Error(ErrorCode::UnknownProfile, "unknown profile '" + std::string(profile_id) + "'");
  }
  return vectors_[it->second];
}

double TfidfIndex::weight(std::string_view profile_id, std::string_view term) const {
  const auto& vec = vector(profile_id);
  auto id = term_id(term);
  return id ? vec.weight(*id) : 0.0;
}

double term_frequency(const ProfileDocument& doc, std::string_view term) {
  if (doc.tokens.empty()) return 0.0;
  auto count = std::count(doc.tokens.begin(), doc.tokens.end(), term);
  return static_cast<double>(count) / static_cast<double>(doc.tokens.size());
}

double inverse_document_frequency(std::uint64_t corpus_size, std::uint64_t df) {
  if (corpus_size == 0) throw Error(ErrorCode::DegenerateCorpus, "corpus is empty");
  if (df < 1 || df > corpus_size) {
    throw Error(ErrorCode::InvalidArgument,
                "document frequency " + std::to_string(df) + " outside [1, " +
                    std::to_string(corpus_size) + "]");
  }
  return 1.0 + std::log10(static_cast<double>(corpus_size) / static_cast<double>(df));
}

TfidfIndex build_index(std::span<const ProfileDocument> docs) {
  if (docs.empty()) throw Error(ErrorCode::DegenerateCorpus, "cannot index an empty corpus");

  // Per-document raw counts, keyed by views into the documents' own tokens.
  std::vector<std::unordered_map<std::string_view, std::uint64_t>> counts(docs.size());
  std::map<std::string_view, std::uint64_t> document_frequency;
  std::map<std::string_view, std::size_t> seen_ids;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto& doc = docs[d];
    if (!seen_ids.emplace(doc.id, d).second) {
      throw Error(ErrorCode::DuplicateProfileId, "duplicate profile id '" + doc.id + "'");
    }
    if (doc.tokens.empty()) {
      throw Error(ErrorCode::EmptyDocument, "profile '" + doc.id + "' has no tokens");
    }
    for (const auto& token : doc.tokens) ++counts[d][token];
    for (const auto& [term, count] : counts[d]) ++document_frequency[term];
  }

  TfidfIndex index;
  index.corpus_size_ = docs.size();
  index.terms_.reserve(document_frequency.size());
  std::unordered_map<std::string_view, TermId> ids;
  ids.reserve(document_frequency.size());
  for (const auto& [term, df] : document_frequency) {
    ids.emplace(term, static_cast<TermId>(index.terms_.size()));
    index.terms_.push_back(
        TermStats{std::string(term), df, inverse_document_frequency(docs.size(), df)});
  }

  index.vectors_.reserve(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const auto& doc = docs[d];
    ProfileVector vec;
    vec.profile_id = doc.id;
    vec.kind = doc.kind;
    vec.weights.reserve(counts[d].size());
    const double length = static_cast<double>(doc.tokens.size());
    for (const auto& [term, count] : counts[d]) {
      TermId id = ids.at(term);
      double tf = static_cast<double>(count) / length;
      vec.weights.emplace_back(id, tf * index.terms_[id].idf);
    }
    std::sort(vec.weights.begin(), vec.weights.end());
    vec.norm = euclidean_norm(vec.weights);
    index.vectors_.push_back(std::move(vec));
  }
  std::sort(index.vectors_.begin(), index.vectors_.end(),
            [](const ProfileVector& a, const ProfileVector& b) {
              return a.profile_id < b.profile_id;
            });
  index.rebuild_lookup();
  return index;
}

std::vector<std::pair<std::string, double>> top_terms(const TfidfIndex& index,
                                                      std::string_view profile_id,
                                                      std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  const auto& vec = index.vector(profile_id);
  std::vector<std::pair<std::string, double>> ranked;
  ranked.reserve(vec.weights.size());
  for (const auto& [id, w] : vec.weights) ranked.emplace_back(index.stats(id).term, w);
  auto by_weight = [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  };
  if (k < ranked.size()) {
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                      ranked.end(), by_weight);
    ranked.resize(k);
  } else {
    std::sort(ranked.begin(), ranked.end(), by_weight);
  }
  return ranked;
}

}  // namespace profgraph
