// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace profgraph {

using ProfileId = std::string;

/// What a document in the corpus represents. Articles and brands go through
/// the same preprocessing as user profiles; the tag only matters when
/// suggestions are filtered by kind.
enum class DocumentKind { user, article, brand };

std::string_view to_string(DocumentKind kind) noexcept;
/// Accepts "user"/"profile", "article", "brand"/"ad". Throws InvalidArgument.
DocumentKind parse_document_kind(std::string_view text);

struct RawProfile {
  ProfileId id;
  std::string domain;
  std::string language;
  std::uint64_t follower_count = 0;
  DocumentKind kind = DocumentKind::user;
  std::vector<std::string> texts;  // oldest first

  bool operator==(const RawProfile&) const = default;
};

/// Lowercase acronym -> expansion phrase. Keys never contain whitespace.
class AcronymDictionary {
 public:
  AcronymDictionary() = default;

  /// Small built-in list of common chat acronyms.
  static AcronymDictionary defaults();
  /// Parses TAB-separated "acronym<TAB>expansion" lines; lines starting with
  /// '#' and blank lines are skipped.
  static AcronymDictionary parse_tsv(std::string_view text);
  static AcronymDictionary load_tsv(const std::string& path);

  void insert(std::string_view acronym, std::string_view expansion);
  /// Case-insensitive. Returns nullptr when the token is not an acronym.
  const std::vector<std::string>* find(std::string_view token) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  // Expansions are stored pre-tokenized so splicing is a plain copy.
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

struct ProfileDocument {
  ProfileId id;
  std::string domain;
  std::string language;
  std::uint64_t follower_count = 0;
  DocumentKind kind = DocumentKind::user;
  std::vector<std::string> tokens;

  std::size_t token_count() const noexcept { return tokens.size(); }
  bool operator==(const ProfileDocument&) const = default;
};

struct ProfileFilter {
  std::string language = "en";
  std::set<std::string> domains;  // empty: every domain
  std::uint64_t min_tweets = 0;
  std::uint64_t min_followers = 0;
};

/// Lowercases, splits on whitespace and strips surrounding punctuation. Tokens
/// containing '@' or '#', purely numeric tokens and URLs are dropped.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> expand_acronyms(const std::vector<std::string>& tokens,
                                         const AcronymDictionary& dict);

/// Language, then domain, then popularity (tweet count and followers).
std::vector<RawProfile> filter_profiles(const std::vector<RawProfile>& raw,
                                        const ProfileFilter& filter);

/// Merges every text of the profile into one token sequence. Throws
/// EmptyDocument when nothing survives preprocessing.
ProfileDocument build_profile_document(const RawProfile& raw,
                                       const AcronymDictionary& dict);

bool is_forbidden_token(std::string_view token) noexcept;

}  // namespace profgraph
