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

#include "mascot/dialog_pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json_util.hpp"

namespace mascot
{

namespace
{

std::string lowercase(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) {
      return static_cast<char>(std::tolower(ch));
    });
  return out;
}

}  // namespace

void KeywordDictionary::add(std::string token, std::string topic, double weight)
{
  if (!(weight > 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("keyword weight for '" + token + "' must lie in (0, 1]");
  }
  if (token.empty() || topic.empty()) {
    throw std::invalid_argument("keyword token and topic must be non-empty");
  }
  entries_[lowercase(token)].emplace_back(std::move(topic), weight);
}

bool KeywordDictionary::contains(std::string_view token) const
{
  return entries_.find(token) != entries_.end();
}

const KeywordDictionary::Entry * KeywordDictionary::find(std::string_view token) const
{
  auto it = entries_.find(token);
  return it == entries_.end() ? nullptr : &it->second;
}

KeywordDictionary keywords_from_json(std::string_view text)
{
  using Error = std::runtime_error;
  constexpr std::string_view what = "keyword dictionary";
  const auto doc = detail::parse_json<Error>(text, what);
  if (!doc.is_object()) {
    detail::field_error<Error>(what, "$", "expected an object of token -> [[topic, weight]]");
  }
  KeywordDictionary dict;
  for (const auto & [token, list] : doc.items()) {
    const std::string path = "$." + token;
    if (!list.is_array() || list.empty()) {
      detail::field_error<Error>(what, path, "expected a non-empty array");
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string p = path + "[" + std::to_string(k) + "]";
      const auto & pair = list[k];
      if (!pair.is_array() || pair.size() != 2) {
        detail::field_error<Error>(what, p, "expected [topic, weight]");
      }
      const auto topic = detail::as_string<Error>(pair[0], what, p + "[0]");
      const double w = detail::as_number<Error>(pair[1], what, p + "[1]");
      if (!(w > 0.0 && w <= 1.0)) {
        detail::field_error<Error>(what, p + "[1]", "weight must lie in (0, 1]");
      }
      dict.add(token, topic, w);
    }
  }
  return dict;
}

KeywordDictionary load_keywords(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("keyword dictionary: cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return keywords_from_json(ss.str());
}

std::vector<std::string> tokenize(std::string_view text)
{
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {++i;}
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {++i;}
    if (i > start) {
      tokens.push_back(lowercase(text.substr(start, i - start)));
    }
  }
  return tokens;
}

RecognitionHypothesis recognize(
  const Utterance & utt, std::string_view robot_id, const Vec2 & robot_position,
  const KeywordDictionary & dict, double d_max)
{
  if (!(d_max > 0.0) || !std::isfinite(d_max)) {
    throw std::invalid_argument("hearing range d_max must be positive");
  }
  if (!(utt.noise >= 0.0 && utt.noise <= 1.0)) {
    throw std::invalid_argument("utterance noise must lie in [0, 1]");
  }
  RecognitionHypothesis hyp;
  hyp.tokens = tokenize(utt.text);
  hyp.source_robot = std::string(robot_id);

  double coverage = 0.0;
  if (!hyp.tokens.empty()) {
    const auto known = std::count_if(
      hyp.tokens.begin(), hyp.tokens.end(),
      [&dict](const std::string & t) {return dict.contains(t);});
    coverage = static_cast<double>(known) / static_cast<double>(hyp.tokens.size());
  }
  const double proximity = 1.0 - distance(robot_position, utt.speaker_position) / d_max;
  hyp.certainty = clamp01(coverage * proximity * (1.0 - utt.noise));
  // A negative proximity with zero coverage can yield -0.0.
  if (hyp.certainty == 0.0) {hyp.certainty = 0.0;}
  return hyp;
}

std::map<std::string, double> topic_evidence(
  const RecognitionHypothesis & hyp, const KeywordDictionary & dict)
{
  std::map<std::string, double> evidence;
  for (const auto & token : hyp.tokens) {
    if (const auto * entry = dict.find(token)) {
      for (const auto & [topic, weight] : *entry) {
        evidence[topic] += weight;
      }
    }
  }
  for (auto & [topic, w] : evidence) {
    w = std::min(w, 1.0);
  }
  return evidence;
}

InterestProfile update_interest(
  const InterestProfile & profile, const RecognitionHypothesis & hyp,
  const KeywordDictionary & dict, double alpha)
{
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("interest rate alpha must lie in (0, 1]");
  }
  InterestProfile out;
  for (const auto & [topic, w] : profile.weights) {
    out.weights[topic] = (1.0 - alpha) * w;
  }
  const double certainty = clamp01(hyp.certainty);
  if (certainty > 0.0) {
    for (const auto & [topic, e] : topic_evidence(hyp, dict)) {
      out.weights[topic] += alpha * certainty * e;
    }
  }
  std::erase_if(out.weights, [](const auto & kv) {return kv.second == 0.0;});
  return out;
}

}  // namespace mascot
