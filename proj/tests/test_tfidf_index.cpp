// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#include <cmath>

#include "doctest.h"
#include "profgraph/error.hpp"
#include "profgraph/tfidf_index.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/synthetic.hpp"

using namespace profgraph;
using doctest::Approx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("tfidf_index") {

TEST_CASE("term frequency is count over document length") {
  auto docs = fixtures::three_docs();
  CHECK(std::abs(term_frequency(docs[0], "mining") - 0.333) <= 0.005);
  CHECK(term_frequency(docs[2], "data") == 0.5);
  CHECK(term_frequency(docs[2], "network") == 0.0);
}

TEST_CASE("idf of the worked corpus") {
  CHECK(std::abs(inverse_document_frequency(3, 2) - 1.176) <= 0.001);
  CHECK(std::abs(inverse_document_frequency(3, 1) - 1.477) <= 0.001);
  CHECK(inverse_document_frequency(3, 3) == 1.0);
  CHECK(code_of([] { inverse_document_frequency(0, 0); }) == ErrorCode::DegenerateCorpus);
  CHECK(code_of([] { inverse_document_frequency(3, 4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { inverse_document_frequency(3, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("all seven idf values of the worked corpus") {
  auto docs = fixtures::three_docs();
  auto index = build_index(docs);
  const std::pair<const char*, double> expected[] = {
      {"data", 1.176},    {"mining", 1.176},  {"and", 1.477},     {"social", 1.176},
      {"media", 1.477},   {"network", 1.477}, {"analysis", 1.477}};
  CHECK(index.terms().size() == 7);
  for (const auto& [term, idf] : expected) {
    auto id = index.term_id(term);
    REQUIRE(id.has_value());
    CHECK(std::abs(index.stats(*id).idf - idf) <= 0.001);
  }
}

TEST_CASE("weights of the worked corpus") {
  auto index = build_index(fixtures::three_docs());
  // 2/6 * 1.17609; the printed 0.388 used the truncated TF 0.33
  CHECK(std::abs(index.weight("doc1", "mining") - 0.392) <= 0.005);
  CHECK(std::abs(index.weight("doc3", "data") - 0.588) <= 0.001);
  CHECK(index.weight("doc2", "network") == Approx(1.0 / 3.0 * (1.0 + std::log10(3.0))));
  CHECK(index.weight("doc3", "network") == 0.0);
  CHECK(index.weight("doc3", "unheard") == 0.0);
}

TEST_CASE("stopword-like terms rank below content terms") {
  auto index = build_index(fixtures::three_docs());
  CHECK(index.weight("doc1", "and") < index.weight("doc1", "mining"));
}

TEST_CASE("single-document corpus keeps the idf floor") {
  std::vector<ProfileDocument> docs{fixtures::doc("only", {"a", "b", "b", "c"})};
  auto index = build_index(docs);
  CHECK(index.weight("only", "b") == 0.5);
  CHECK(index.weight("only", "a") == 0.25);
}

TEST_CASE("build_index errors") {
  CHECK(code_of([] { build_index(std::vector<ProfileDocument>{}); }) ==
        ErrorCode::DegenerateCorpus);
  std::vector<ProfileDocument> dup{fixtures::doc("a", {"x"}), fixtures::doc("a", {"y"})};
  CHECK(code_of([&] { build_index(dup); }) == ErrorCode::DuplicateProfileId);
  std::vector<ProfileDocument> empty{fixtures::doc("a", {"x"}), fixtures::doc("b", {})};
  CHECK(code_of([&] { build_index(empty); }) == ErrorCode::EmptyDocument);
}

TEST_CASE("top_terms") {
  auto index = build_index(fixtures::three_docs());

  auto doc1 = top_terms(index, "doc1", 1);
  REQUIRE(doc1.size() == 1);
  CHECK(doc1[0].first == "mining");

  // analysis and network tie at 1/3 * 1.4771; the tie goes to the smaller term
  auto doc2 = top_terms(index, "doc2", 2);
  REQUIRE(doc2.size() == 2);
  CHECK(doc2[0].first == "analysis");
  CHECK(doc2[1].first == "network");
  CHECK(doc2[0].second == doc2[1].second);

  auto all = top_terms(index, "doc1", 100);
  CHECK(all.size() == 5);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK((all[i - 1].second > all[i].second ||
           (all[i - 1].second == all[i].second && all[i - 1].first < all[i].first)));
  }

  CHECK(code_of([&] { top_terms(index, "nobody", 1); }) == ErrorCode::UnknownProfile);
  CHECK(code_of([&] { top_terms(index, "doc1", 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("index invariants and naive recomputation on random corpora") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto docs = synthetic::documents(seed, 2 + seed % 9, 5 + seed % 46, 1, 30);
    auto index = build_index(docs);
    auto naive = oracle::tfidf(docs);

    CHECK(index.corpus_size() == docs.size());
    CHECK(index.vectors().size() == docs.size());
    for (const auto& vec : index.vectors()) {
      const auto& expected = naive.weights.at(vec.profile_id);
      REQUIRE(vec.weights.size() == expected.size());
      double sq = 0.0;
      for (const auto& [id, w] : vec.weights) {
        CHECK(w > 0.0);
        CHECK(w == expected.at(index.stats(id).term));  // exact
        sq += w * w;
      }
      CHECK(vec.norm == Approx(std::sqrt(sq)).epsilon(1e-9));
    }
    for (const auto& stats : index.terms()) {
      CHECK(stats.document_frequency >= 1);
      CHECK(stats.idf == naive.idf.at(stats.term));
    }
  }
}

TEST_CASE("rebuilding yields the same index") {
  auto docs = synthetic::documents(99, 10, 40, 5, 50);
  auto a = build_index(docs);
  auto b = build_index(docs);
  CHECK(a == b);
  for (const auto& vec : a.vectors()) {
    CHECK(top_terms(a, vec.profile_id, 5) == top_terms(b, vec.profile_id, 5));
  }
}

TEST_CASE("from_parts validates") {
  CHECK(code_of([] { TfidfIndex::from_parts(0, {}, {}); }) == ErrorCode::DegenerateCorpus);
  std::vector<TermStats> terms{{"a", 1, 1.0}};
  std::vector<ProfileVector> vecs{{"p", DocumentKind::user, {{0, 0.0}}, 0.0}};
  CHECK(code_of([&] { TfidfIndex::from_parts(1, terms, vecs); }) == ErrorCode::Parse);
  vecs[0].weights = {{3, 0.5}};
  CHECK(code_of([&] { TfidfIndex::from_parts(1, terms, vecs); }) == ErrorCode::Parse);
  CHECK(code_of([&] { TfidfIndex::from_parts(2, terms, {}); }) == ErrorCode::Parse);
}

}  // TEST_SUITE
