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

#ifndef MASCOT__SYSTEM_HPP_
#define MASCOT__SYSTEM_HPP_

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mascot/bus.hpp"
#include "mascot/config.hpp"
#include "mascot/eye_motion.hpp"
#include "mascot/intent_orchestrator.hpp"
#include "mascot/scenario.hpp"

namespace mascot
{

/// Recommendation as shown to the operator, with the delta it will project.
struct ScoredRecommendation
{
  Recommendation recommendation;
  IntentSignal signal;
  double delta{0.0};
};

/// The whole mascot robot system on one simulation thread.
///
/// Five robot components, the speech module, the recommender and the
/// gateway are bus components. An utterance flows
///   speech --speech/hypothesis--> recommender --recommend/results--> gateway
/// where the speech module takes operator utterances straight from its
/// input queue, recognizes them at every robot and publishes the system
/// hypothesis. The gateway then presents one result per tick in rank order.
/// Robots publish their pose on robot/<id>/pose every tick.
class MascotSystem
{
public:
  MascotSystem(Config config, Resources resources, std::uint64_t seed);

  MascotSystem(const MascotSystem &) = delete;
  MascotSystem & operator=(const MascotSystem &) = delete;

  /// Runs one tick and leaves its trace record in last_record().
  void advance();

  /// Queued for the next tick.
  void submit_utterance(Utterance utt);
  /// Throws std::invalid_argument for an unknown robot or non-finite value.
  void submit_set_axis(const std::string & robot, Axis axis, double value);

  void apply_step(const ScenarioStep & step);

  std::uint64_t tick() const noexcept {return tick_;}
  const std::vector<RobotAgent> & agents() const noexcept {return agents_;}
  const Bus & bus() const noexcept {return bus_;}
  const Config & config() const noexcept {return config_;}
  const InterestProfile & interest() const noexcept {return profile_;}
  const std::optional<RecognitionHypothesis> & hypothesis() const noexcept {return hypothesis_;}
  const std::vector<ScoredRecommendation> & recommendations() const noexcept {return scored_;}
  std::uint64_t seed() const noexcept {return seed_;}

  /// Trace record of the last completed tick; null before the first advance().
  const nlohmann::json & last_record() const noexcept {return record_;}

  /// Operator-facing snapshot in the WebSocket state-frame schema.
  nlohmann::json state_frame() const;

private:
  void wire_components();
  void on_speech(const Utterance & utt);
  void on_recommender(const Envelope & env);
  void on_gateway(const Envelope & env);
  nlohmann::json robot_json(const RobotAgent & agent) const;

  Config config_;
  Resources resources_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  Bus bus_;

  std::vector<RobotAgent> agents_;
  std::vector<ComponentHandle> robot_handles_;
  std::vector<BlinkScheduler> blinks_;
  std::vector<bool> blinking_;
  ComponentHandle speech_;
  ComponentHandle recommender_;
  ComponentHandle gateway_;

  InterestProfile profile_;
  std::optional<RecognitionHypothesis> hypothesis_;
  RecognitionHypothesis presenting_;
  std::optional<Vec2> attention_;
  std::vector<ScoredRecommendation> scored_;
  std::deque<ScoredRecommendation> queue_;
  std::vector<Utterance> inbox_utterances_;
  struct AxisCommand { std::size_t agent; Axis axis; double value; };
  std::vector<AxisCommand> inbox_axes_;

  std::vector<DeliveryRecord> delivered_;  // deliveries that opened the current tick
  std::uint64_t tick_{0};
  std::uint64_t last_tick_{0};
  bool advanced_{false};
  nlohmann::json record_;
};

/// Executes the scenario for `ticks` ticks (0 means scenario.length()) and
/// writes one JSON line per tick. Returns the number of records written.
std::uint64_t run_scenario(
  const Scenario & scenario, const Config & config, const Resources & resources,
  std::uint64_t seed, std::ostream & out, std::uint64_t ticks = 0);

}  // namespace mascot

#endif  // MASCOT__SYSTEM_HPP_
