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

#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "mascot/dialog_pipeline.hpp"

namespace mascot
{
namespace
{

KeywordDictionary small_dict()
{
  KeywordDictionary d;
  d.add("baseball", "sports", 1.0);
  d.add("goal", "sports", 0.6);
  d.add("goal", "news", 0.2);
  d.add("rain", "weather", 0.9);
  return d;
}

TEST(Tokenize, SplitsAndLowercases)
{
  const auto t = tokenize("  Baseball\tSCORES\n tonight ");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], "baseball");
  EXPECT_EQ(t[1], "scores");
  EXPECT_EQ(t[2], "tonight");
  EXPECT_TRUE(tokenize("   ").empty());
}

TEST(Recognize, AllKnownAtSpeakerIsCertain)
{
  const auto h = recognize({"baseball rain", {1.0, 1.0}, 0.0}, "R1", {1.0, 1.0}, small_dict());
  EXPECT_EQ(h.certainty, 1.0);
  EXPECT_EQ(h.source_robot, "R1");
}

TEST(Recognize, OutOfRangeIsZero)
{
  const auto dict = small_dict();
  EXPECT_EQ(recognize({"baseball", {0.0, 0.0}, 0.0}, "R1", {5.0, 0.0}, dict).certainty, 0.0);
  EXPECT_EQ(recognize({"baseball", {0.0, 0.0}, 0.0}, "R1", {30.0, 40.0}, dict).certainty, 0.0);
}

TEST(Recognize, ProductOfFactors)
{
  const double q = 0.5;
  const double proximity = 1.0 - 2.5 / 5.0;
  const double clean = 1.0 - 0.2;
  const auto h = recognize({"baseball unknown", {0.0, 0.0}, 0.2}, "R2", {0.0, 2.5}, small_dict());
  EXPECT_NEAR(h.certainty, q * proximity * clean, 1e-15);
  EXPECT_NEAR(h.certainty, 0.2, 1e-15);
}

TEST(Recognize, EmptyTextHasZeroCoverage)
{
  EXPECT_EQ(recognize({"", {0, 0}, 0.0}, "R1", {0, 0}, small_dict()).certainty, 0.0);
}

TEST(Recognize, RejectsBadInputs)
{
  const auto dict = small_dict();
  EXPECT_THROW(recognize({"x", {0, 0}, 1.5}, "R1", {0, 0}, dict), std::invalid_argument);
  EXPECT_THROW(recognize({"x", {0, 0}, -0.1}, "R1", {0, 0}, dict), std::invalid_argument);
  EXPECT_THROW(recognize({"x", {0, 0}, 0.0}, "R1", {0, 0}, dict, 0.0), std::invalid_argument);
}

TEST(RecognizeProperty, BoundedAndMonotone)
{
  const auto dict = small_dict();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const char * texts[] = {"baseball", "baseball x", "baseball x y z", "x", "rain goal baseball"};
  for (int k = 0; k < 5000; ++k) {
    const std::string text = texts[k % 5];
    const double d = 6.0 * u(rng);
    const double noise = u(rng);
    const double c = recognize({text, {0, 0}, noise}, "R", {d, 0}, dict).certainty;
    ASSERT_GE(c, 0.0);
    ASSERT_LE(c, 1.0);
    ASSERT_LE(recognize({text, {0, 0}, noise}, "R", {d + 0.1, 0}, dict).certainty, c);
    ASSERT_LE(recognize({text, {0, 0}, std::min(1.0, noise + 0.05)}, "R", {d, 0}, dict).certainty, c);
    // Adding a known token raises coverage.
    ASSERT_GE(recognize({text + " rain", {0, 0}, noise}, "R", {d, 0}, dict).certainty, c);
  }
}

TEST(TopicEvidence, SumsAndCaps)
{
  const auto dict = small_dict();
  RecognitionHypothesis h{{"goal", "goal", "baseball"}, 1.0, "R1"};
  const auto e = topic_evidence(h, dict);
  EXPECT_EQ(e.at("sports"), 1.0);
  EXPECT_NEAR(e.at("news"), 0.4, 1e-15);
  EXPECT_EQ(e.count("weather"), 0u);
}

TEST(UpdateInterest, SingleTokenFromEmpty)
{
  KeywordDictionary d;
  d.add("baseball", "sports", 1.0);
  const auto p = update_interest({}, {{"baseball"}, 1.0, "R1"}, d, 0.3);
  EXPECT_NEAR(p.weights.at("sports"), 0.3, 1e-15);
}

TEST(UpdateInterest, ZeroCertaintyMatchesEmptyHypothesis)
{
  const auto dict = small_dict();
  InterestProfile start{{{"sports", 0.5}, {"news", 0.1}}};
  const auto a = update_interest(start, {{"baseball", "rain"}, 0.0, "R1"}, dict);
  const auto b = update_interest(start, {{}, 0.7, "R1"}, dict);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_NEAR(a.weights.at("sports"), 0.35, 1e-15);
}

TEST(UpdateInterest, AlphaOneReplacesWithEvidence)
{
  const auto dict = small_dict();
  RecognitionHypothesis h{{"goal", "rain"}, 1.0, "R1"};
  InterestProfile start{{{"sports", 0.9}, {"cooking", 0.4}}};
  const auto p = update_interest(start, h, dict, 1.0);
  EXPECT_EQ(p.weights, topic_evidence(h, dict));
}

TEST(UpdateInterest, RejectsBadAlpha)
{
  EXPECT_THROW(update_interest({}, {}, small_dict(), 0.0), std::invalid_argument);
  EXPECT_THROW(update_interest({}, {}, small_dict(), 1.1), std::invalid_argument);
}

TEST(UpdateInterestProperty, StaysBounded)
{
  const auto dict = small_dict();
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const char * words[] = {"baseball", "goal", "rain", "other"};
  InterestProfile p{{{"sports", 2.0}}};
  const double bound = 2.0;
  for (int k = 0; k < 10000; ++k) {
    RecognitionHypothesis h;
    h.certainty = u(rng);
    for (int w = 0; w < 3; ++w) {
      h.tokens.emplace_back(words[rng() % 4]);
    }
    p = update_interest(p, h, dict, 0.05 + 0.95 * u(rng));
    for (const auto & [topic, w] : p.weights) {
      ASSERT_GE(w, 0.0);
      ASSERT_LE(w, bound);
    }
  }
}

TEST(Keywords, ParsesBundledDictionary)
{
  const auto d = load_keywords(std::string(MASCOT_DATA_DIR) + "/keywords.json");
  EXPECT_GT(d.size(), 0u);
  EXPECT_TRUE(d.contains("baseball"));
}

TEST(Keywords, LowercasesTokens)
{
  const auto d = keywords_from_json(R"({"Baseball": [["sports", 1.0]]})");
  EXPECT_TRUE(d.contains("baseball"));
}

TEST(Keywords, RejectsMalformed)
{
  EXPECT_THROW(keywords_from_json("[]"), std::runtime_error);
  EXPECT_THROW(keywords_from_json(R"({"a": []})"), std::runtime_error);
  EXPECT_THROW(keywords_from_json(R"({"a": [["t", 0.0]]})"), std::runtime_error);
  EXPECT_THROW(keywords_from_json(R"({"a": [["t", 1.5]]})"), std::runtime_error);
  EXPECT_THROW(keywords_from_json(R"({"a": [["t"]]})"), std::runtime_error);
  EXPECT_THROW(keywords_from_json("{\n\"a\": [[\"t\", 0.5]]\n,"), std::runtime_error);
  try {
    keywords_from_json(R"({"rain": [["weather", 2]]})");
    FAIL();
  } catch (const std::runtime_error & e) {
    EXPECT_NE(std::string(e.what()).find("$.rain[0][1]"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace mascot
