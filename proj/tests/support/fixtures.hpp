// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <string>
#include <vector>

#include "profgraph/corpus.hpp"

namespace fixtures {

inline profgraph::ProfileDocument doc(std::string id, std::vector<std::string> tokens,
                                      profgraph::DocumentKind kind = profgraph::DocumentKind::user) {
  profgraph::ProfileDocument d;
  d.id = std::move(id);
  d.domain = "test";
  d.language = "en";
  d.kind = kind;
  d.tokens = std::move(tokens);
  return d;
}

/// The classic three-document worked example:
///   doc1 "data mining and social media mining"
///   doc2 "social network analysis"
///   doc3 "data mining"
inline std::vector<profgraph::ProfileDocument> three_docs() {
  return {doc("doc1", {"data", "mining", "and", "social", "media", "mining"}),
          doc("doc2", {"social", "network", "analysis"}),
          doc("doc3", {"data", "mining"})};
}

}  // namespace fixtures
