// Copyright 2026 The Mascot Robot System Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mascot/recommender.hpp"

namespace mascot
{
namespace
{

Document doc(std::string id, std::map<std::string, double> topics)
{
  return {std::move(id), "", std::move(topics), ""};
}

// Dense cosine over an explicit topic list.
double brute_cosine(
  const std::vector<std::string> & axes, const std::map<std::string, double> & a,
  const std::map<std::string, double> & b)
{
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (const auto & t : axes) {
    const double x = a.count(t) ? a.at(t) : 0.0;
    const double y = b.count(t) ? b.at(t) : 0.0;
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  return (na == 0.0 || nb == 0.0) ? 0.0 : dot / std::sqrt(na * nb);
}

TEST(Cosine, TwoTopicCase)
{
  const std::map<std::string, double> p{{"a", 1.0}};
  const std::map<std::string, double> d{{"a", 1.0}, {"b", 1.0}};
  EXPECT_NEAR(cosine_similarity(p, d), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cosine_similarity(p, d), brute_cosine({"a", "b"}, p, d), 1e-15);
  EXPECT_EQ(cosine_similarity({}, d), 0.0);
}

TEST(Cosine, MatchesBruteForce)
{
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<std::string> axes{"a", "b", "c", "d", "e"};
  for (int k = 0; k < 2000; ++k) {
    std::map<std::string, double> x;
    std::map<std::string, double> y;
    for (const auto & t : axes) {
      if (u(rng) < 0.6) {x[t] = u(rng);}
      if (u(rng) < 0.6) {y[t] = u(rng);}
    }
    ASSERT_NEAR(cosine_similarity(x, y), brute_cosine(axes, x, y), 1e-12);
  }
}

TEST(Rank, IdenticalProfileRanksFirst)
{
  const std::vector<Document> corpus{
    doc("a", {{"sports", 1.0}}), doc("b", {{"sports", 0.4}, {"news", 0.8}}),
    doc("c", {{"weather", 1.0}})};
  const auto out = rank({{{"sports", 0.4}, {"news", 0.8}}}, corpus);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].doc, "b");
  EXPECT_NEAR(out[0].reliability, 1.0, 1e-15);
  EXPECT_EQ(out[0].rank, 1);
}

TEST(Rank, OrthogonalProfileFallsBackToIdOrder)
{
  const std::vector<Document> corpus{
    doc("z", {{"a", 1.0}}), doc("m", {{"b", 1.0}}), doc("b", {{"c", 1.0}}),
    doc("q", {{"d", 1.0}})};
  const auto out = rank({{{"music", 1.0}}}, corpus);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].doc, "b");
  EXPECT_EQ(out[1].doc, "m");
  EXPECT_EQ(out[2].doc, "q");
  for (const auto & r : out) {EXPECT_EQ(r.reliability, 0.0);}
}

TEST(Rank, RanksAndImportance)
{
  const std::vector<Document> corpus{
    doc("a", {{"x", 1.0}}), doc("b", {{"x", 1.0}, {"y", 1.0}}), doc("c", {{"y", 1.0}}),
    doc("d", {{"x", 0.2}, {"y", 1.0}})};
  const auto out = rank({{{"x", 1.0}}}, corpus, 3);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_EQ(out[i].rank, static_cast<int>(i) + 1);
    if (i > 0) {EXPECT_GE(out[i - 1].reliability, out[i].reliability);}
  }
  EXPECT_EQ(out[0].importance, 1.0);
  EXPECT_NEAR(out[2].importance, 1.0 / 3.0, 1e-15);
}

TEST(Rank, ShortCorpusShrinksK)
{
  const auto out = rank({{{"x", 1.0}}}, {doc("a", {{"x", 1.0}}), doc("b", {{"y", 1.0}})}, 3);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[1].importance, 0.5);
}

TEST(Rank, Errors)
{
  EXPECT_THROW(rank({}, {}), std::invalid_argument);
  EXPECT_THROW(rank({}, {doc("a", {{"x", 1.0}})}, 0), std::invalid_argument);
}

TEST(ImportanceFromRank, Values)
{
  EXPECT_EQ(importance_from_rank(1, 3), 1.0);
  EXPECT_NEAR(importance_from_rank(3, 3), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(importance_from_rank(2, 2), 0.5);
  EXPECT_THROW(importance_from_rank(0, 3), std::out_of_range);
  EXPECT_THROW(importance_from_rank(4, 3), std::out_of_range);
}

TEST(ImportanceFromRank, StrictlyDecreasing)
{
  for (int k = 1; k <= 20; ++k) {
    for (int r = 1; r < k; ++r) {
      ASSERT_GT(importance_from_rank(r, k), importance_from_rank(r + 1, k));
      ASSERT_GT(importance_from_rank(r + 1, k), 0.0);
    }
  }
}

TEST(RankProperty, ScaleInvariantAndDeterministic)
{
  const auto corpus = load_corpus(std::string(MASCOT_DATA_DIR) + "/corpus.json");
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const char * topics[] = {"sports", "weather", "cooking", "music", "travel", "news"};
  for (int k = 0; k < 500; ++k) {
    InterestProfile p;
    for (const char * t : topics) {
      if (u(rng) < 0.5) {p.weights[t] = u(rng);}
    }
    const double lambda = 0.01 + 100.0 * u(rng);
    InterestProfile scaled;
    for (const auto & [t, w] : p.weights) {scaled.weights[t] = lambda * w;}
    const auto a = rank(p, corpus, 5);
    const auto b = rank(scaled, corpus, 5);
    const auto again = rank(p, corpus, 5);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].doc, again[i].doc);
      ASSERT_EQ(a[i].reliability, again[i].reliability);
      ASSERT_NEAR(a[i].reliability, b[i].reliability, 1e-12);
      ASSERT_GE(a[i].reliability, 0.0);
      ASSERT_LE(a[i].reliability, 1.0);
    }
  }
}

TEST(Corpus, RejectsMalformed)
{
  EXPECT_THROW(corpus_from_json("{}"), std::runtime_error);
  EXPECT_THROW(corpus_from_json(R"([{"topics": {"x": 1}}])"), std::runtime_error);
  EXPECT_THROW(corpus_from_json(R"([{"id": "a", "topics": {"x": 0}}])"), std::runtime_error);
  EXPECT_THROW(corpus_from_json(R"([{"id": "a", "topics": {"x": -1, "y": 1}}])"), std::runtime_error);
  try {
    corpus_from_json(R"([{"id": "a", "topics": {"x": 1}}, {"id": "a", "topics": {"y": 1}}])");
    FAIL();
  } catch (const std::runtime_error & e) {
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos) << e.what();
  }
  EXPECT_THROW(validate_document(doc("", {{"x", 1.0}})), std::invalid_argument);
}

}  // namespace
}  // namespace mascot
