// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profgraph/corpus.hpp"

namespace profgraph {

/// Position of a term in the index vocabulary. The vocabulary is sorted
/// lexicographically, so ids are stable for a given set of terms.
using TermId = std::uint32_t;

struct TermStats {
  std::string term;
  std::uint64_t document_frequency = 0;
  double idf = 0.0;

  bool operator==(const TermStats&) const = default;
};

/// Sparse TF-IDF weights of one document, ordered by term id. Zero weights are
/// never stored.
struct ProfileVector {
  ProfileId profile_id;
  DocumentKind kind = DocumentKind::user;
  std::vector<std::pair<TermId, double>> weights;
  double norm = 0.0;

  /// Zero when the term is absent.
  double weight(TermId term) const noexcept;
  bool operator==(const ProfileVector&) const = default;
};

class TfidfIndex {
 public:
  TfidfIndex() = default;

  /// Assembles an index from already computed parts (used when reloading a
  /// persisted index). Norms are recomputed and every invariant is checked;
  /// violations throw Parse.
  static TfidfIndex from_parts(std::size_t corpus_size, std::vector<TermStats> terms,
                               std::vector<ProfileVector> vectors);

  std::size_t corpus_size() const noexcept { return corpus_size_; }
  std::span<const TermStats> terms() const noexcept { return terms_; }
  std::span<const ProfileVector> vectors() const noexcept { return vectors_; }

  std::optional<TermId> term_id(std::string_view term) const;
  const TermStats& stats(TermId id) const { return terms_.at(id); }

  bool contains(std::string_view profile_id) const;
  /// Throws UnknownProfile.
  const ProfileVector& vector(std::string_view profile_id) const;

  /// Weight of `term` in `profile_id`; zero for unknown terms.
  double weight(std::string_view profile_id, std::string_view term) const;

  bool operator==(const TfidfIndex& other) const {
    return corpus_size_ == other.corpus_size_ && terms_ == other.terms_ &&
           vectors_ == other.vectors_;
  }

 private:
  friend TfidfIndex build_index(std::span<const ProfileDocument> docs);
  void rebuild_lookup();

  std::size_t corpus_size_ = 0;
  std::vector<TermStats> terms_;          // sorted by term
  std::vector<ProfileVector> vectors_;    // sorted by profile id
  std::map<std::string, TermId, std::less<>> term_lookup_;
  std::map<std::string, std::size_t, std::less<>> profile_lookup_;
};

/// count(term) / token_count; zero when absent.
double term_frequency(const ProfileDocument& doc, std::string_view term);

/// 1 + log10(corpus_size / df). Throws DegenerateCorpus for an empty corpus
/// and InvalidArgument when df is outside [1, corpus_size].
double inverse_document_frequency(std::uint64_t corpus_size, std::uint64_t df);

/// Throws DegenerateCorpus on empty input, DuplicateProfileId, and
/// EmptyDocument for a document without tokens.
TfidfIndex build_index(std::span<const ProfileDocument> docs);

/// Highest-weight terms first, ties by term ascending. Throws UnknownProfile.
std::vector<std::pair<std::string, double>> top_terms(const TfidfIndex& index,
                                                      std::string_view profile_id,
                                                      std::size_t k);

}  // namespace profgraph
