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

#ifndef MASCOT__DIALOG_PIPELINE_HPP_
#define MASCOT__DIALOG_PIPELINE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mascot/geometry.hpp"

namespace mascot
{

constexpr double kDefaultHearingRange = 5.0;  // d_max, meters
constexpr double kDefaultInterestRate = 0.3;  // alpha

struct Utterance
{
  std::string text;
  Vec2 speaker_position;
  double noise{0.0};
};

struct RecognitionHypothesis
{
  std::vector<std::string> tokens;
  double certainty{0.0};
  std::string source_robot;
};

/// Household-wide interest estimate, topic id -> weight >= 0.
struct InterestProfile
{
  std::map<std::string, double> weights;
};

/// token -> [(topic, weight in (0, 1])]
class KeywordDictionary
{
public:
  using Entry = std::vector<std::pair<std::string, double>>;

  KeywordDictionary() = default;

  /// Throws std::invalid_argument when a weight is outside (0, 1].
  void add(std::string token, std::string topic, double weight);

  bool contains(std::string_view token) const;
  const Entry * find(std::string_view token) const;
  std::size_t size() const noexcept {return entries_.size();}
  const std::map<std::string, Entry, std::less<>> & entries() const noexcept {return entries_;}

private:
  std::map<std::string, Entry, std::less<>> entries_;
};

/// Parses {"token": [["topic", weight], ...], ...}; throws std::runtime_error
/// with the offending line or token on malformed input.
KeywordDictionary keywords_from_json(std::string_view text);
KeywordDictionary load_keywords(const std::string & path);

/// Whitespace split, ASCII lowercase.
std::vector<std::string> tokenize(std::string_view text);

/// Simulated recognizer at one robot. Certainty is the product of dictionary
/// coverage, proximity (1 - d / d_max) and cleanliness (1 - noise), clamped
/// to [0, 1].
RecognitionHypothesis recognize(
  const Utterance & utt, std::string_view robot_id, const Vec2 & robot_position,
  const KeywordDictionary & dict, double d_max = kDefaultHearingRange);

/// Summed dictionary weight per topic over the hypothesis' tokens, each
/// topic capped at 1.
std::map<std::string, double> topic_evidence(
  const RecognitionHypothesis & hyp, const KeywordDictionary & dict);

/// Exponential moving average of topic evidence:
///   w' = (1 - alpha) w + alpha * certainty * evidence.
/// Topics whose weight reaches exactly 0 are dropped from the profile.
InterestProfile update_interest(
  const InterestProfile & profile, const RecognitionHypothesis & hyp,
  const KeywordDictionary & dict, double alpha = kDefaultInterestRate);

}  // namespace mascot

#endif  // MASCOT__DIALOG_PIPELINE_HPP_
