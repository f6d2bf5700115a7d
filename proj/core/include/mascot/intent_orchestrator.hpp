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

#ifndef MASCOT__INTENT_ORCHESTRATOR_HPP_
#define MASCOT__INTENT_ORCHESTRATOR_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mascot/bus.hpp"
#include "mascot/dialog_pipeline.hpp"
#include "mascot/eye_motion.hpp"
#include "mascot/fuzzy_intent.hpp"
#include "mascot/geometry.hpp"
#include "mascot/mental_state.hpp"
#include "mascot/recommender.hpp"

namespace mascot
{

constexpr double kDefaultMobileSpeed = 0.5;  // m/s

struct RobotAgent
{
  ComponentId id;
  Vec2 position;
  bool mobile{false};
  double heading{0.0};  // world-frame facing, degrees from +x
  MentalState mental;
  EyePose pose;
  GazeTarget gaze;
  std::optional<Vec2> goal;
};

struct Gains
{
  double presenter{kDefaultPresenterGain};
  double ambient{kDefaultAmbientGain};
};

struct PresentationEvent
{
  Recommendation recommendation;
  IntentSignal signal;
  std::string presenter;
  std::uint64_t tick{0};
  double delta{0.0};
};

struct UtteranceOutcome
{
  RecognitionHypothesis hypothesis;
  std::string presenter;
  std::vector<RecognitionHypothesis> per_agent;
};

/// Throws std::invalid_argument unless ids are unique and exactly one agent is mobile.
void validate_agents(std::span<const RobotAgent> agents);

/// Recognizes the utterance at every agent and keeps the most certain
/// hypothesis (ties go to the lowest id). The mobile agent is sent toward
/// the speaker.
UtteranceOutcome on_utterance(
  const Utterance & utt, std::span<RobotAgent> agents, const KeywordDictionary & dict,
  double d_max = kDefaultHearingRange);

IntentSignal make_signal(const RecognitionHypothesis & hyp, const Recommendation & rec);

/// Presents one recommendation: infers the arousal delta and applies it to
/// the presenter with the focal gain and to every other agent with the
/// ambient gain, then refreshes poses.
PresentationEvent present_one(
  const Recommendation & rec, const RecognitionHypothesis & hyp, const std::string & presenter,
  std::span<RobotAgent> agents, const RuleBase & rules, const Gains & gains = {},
  std::uint64_t tick = 0, std::size_t resolution = kDefaultResolution);

/// present_one over every recommendation in rank order. Throws
/// std::invalid_argument for an empty list.
std::vector<PresentationEvent> present(
  std::span<const Recommendation> recs, const RecognitionHypothesis & hyp,
  const std::string & presenter, std::span<RobotAgent> agents, const RuleBase & rules,
  const Gains & gains = {}, std::uint64_t tick = 0,
  std::size_t resolution = kDefaultResolution);

struct MotionParams
{
  double speed{kDefaultMobileSpeed};
  double tau{kDefaultDecayTau};
  double gaze_height{0.4};  // speaker face height above robot eye level, meters
};

GazeTarget gaze_toward(const RobotAgent & agent, const Vec2 & target, double gaze_height);

/// Moves the mobile agent toward its goal by min(speed dt, remaining),
/// decays every mental state and points every gaze at `attention` if set.
/// Poses are not recomputed here.
void tick_motion(
  std::span<RobotAgent> agents, double dt, const MotionParams & params,
  const std::optional<Vec2> & attention);

}  // namespace mascot

#endif  // MASCOT__INTENT_ORCHESTRATOR_HPP_
