// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include "profgraph/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "profgraph/error.hpp"

namespace profgraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::DegenerateCorpus: return "DegenerateCorpus";
    case ErrorCode::DuplicateProfileId: return "DuplicateProfileId";
    case ErrorCode::UnknownProfile: return "UnknownProfile";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::QueryAmongCandidates: return "QueryAmongCandidates";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::TraceIndexMismatch: return "TraceIndexMismatch";
    case ErrorCode::ReportTraceMismatch: return "ReportTraceMismatch";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NoPath: return "NoPath";
  }
  return "Unknown";
}

std::string_view to_string(DocumentKind kind) noexcept {
  switch (kind) {
    case DocumentKind::user: return "user";
    case DocumentKind::article: return "article";
    case DocumentKind::brand: return "brand";
  }
  return "user";
}

DocumentKind parse_document_kind(std::string_view text) {
  if (text == "user" || text == "profile") return DocumentKind::user;
  if (text == "article") return DocumentKind::article;
  if (text == "brand" || text == "ad") return DocumentKind::brand;
  throw Error(ErrorCode::InvalidArgument,
              "unknown document kind '" + std::string(text) + "'");
}

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// ASCII punctuation other than the two markers that flag a token for removal.
bool is_strippable(unsigned char c) {
  return c < 0x80 && std::ispunct(c) && c != '@' && c != '#';
}

bool is_numeric(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return c >= '0' && c <= '9';
  });
}

bool is_url(std::string_view token) {
  return token.find("://") != std::string_view::npos || token.starts_with("www.");
}

}  // namespace

bool is_forbidden_token(std::string_view token) noexcept {
  return token.empty() || token.find('@') != std::string_view::npos ||
         token.find('#') != std::string_view::npos || is_numeric(token) || is_url(token);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t begin = i;
    while (i < text.size() && !is_space(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = i;

    while (begin < end && is_strippable(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && is_strippable(static_cast<unsigned char>(text[end - 1]))) --end;

    std::string token(text.substr(begin, end - begin));
    std::transform(token.begin(), token.end(), token.begin(), [](unsigned char c) {
      return c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    if (!is_forbidden_token(token)) out.push_back(std::move(token));
  }
  return out;
}

AcronymDictionary AcronymDictionary::defaults() {
  AcronymDictionary dict;
  dict.insert("lol", "laughing out loud");
  dict.insert("lmao", "laughing my ass off");
  dict.insert("omg", "oh my god");
  dict.insert("btw", "by the way");
  dict.insert("idk", "i do not know");
  dict.insert("imo", "in my opinion");
  dict.insert("imho", "in my humble opinion");
  dict.insert("tbh", "to be honest");
  dict.insert("smh", "shaking my head");
  dict.insert("brb", "be right back");
  dict.insert("fyi", "for your information");
  dict.insert("thx", "thanks");
  dict.insert("pls", "please");
  dict.insert("ty", "thank you");
  dict.insert("rt", "retweet");
  return dict;
}

void AcronymDictionary::insert(std::string_view acronym, std::string_view expansion) {
  std::string key(acronym);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key.empty() || std::any_of(key.begin(), key.end(),
                                 [](unsigned char c) { return is_space(c); })) {
    throw Error(ErrorCode::InvalidArgument,
                "acronym key must be non-empty without whitespace: '" + key + "'");
  }
  entries_[std::move(key)] = tokenize(expansion);
}

const std::vector<std::string>* AcronymDictionary::find(std::string_view token) const {
  std::string key(token);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

AcronymDictionary AcronymDictionary::parse_tsv(std::string_view text) {
  AcronymDictionary dict;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return is_space(c); }))
      continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::Parse,
                  "acronym dictionary line " + std::to_string(line_no) + ": missing TAB");
    }
    dict.insert(line.substr(0, tab), line.substr(tab + 1));
  }
  return dict;
}

AcronymDictionary AcronymDictionary::load_tsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read acronym dictionary '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_tsv(buffer.str());
}

std::vector<std::string> expand_acronyms(const std::vector<std::string>& tokens,
                                         const AcronymDictionary& dict) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (const auto* expansion = dict.find(token)) {
      out.insert(out.end(), expansion->begin(), expansion->end());
    } else {
      out.push_back(token);
    }
  }
  return out;
}

std::vector<RawProfile> filter_profiles(const std::vector<RawProfile>& raw,
                                        const ProfileFilter& filter) {
  std::vector<RawProfile> kept;
  for (const auto& profile : raw) {
    if (profile.language != filter.language) continue;
    if (!filter.domains.empty() && !filter.domains.contains(profile.domain)) continue;
    if (profile.texts.size() < filter.min_tweets) continue;
    if (profile.follower_count < filter.min_followers) continue;
    kept.push_back(profile);
  }
  return kept;
}

ProfileDocument build_profile_document(const RawProfile& raw, const AcronymDictionary& dict) {
  ProfileDocument doc;
  doc.id = raw.id;
  doc.domain = raw.domain;
  doc.language = raw.language;
  doc.follower_count = raw.follower_count;
  doc.kind = raw.kind;
  for (const auto& text : raw.texts) {
    for (auto& token : expand_acronyms(tokenize(text), dict)) {
      if (!is_forbidden_token(token)) doc.tokens.push_back(std::move(token));
    }
  }
  if (doc.tokens.empty()) {
    throw Error(ErrorCode::EmptyDocument, "profile '" + raw.id + "' has no usable tokens");
  }
  return doc;
}

}  // namespace profgraph
