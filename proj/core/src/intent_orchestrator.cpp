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

#include "mascot/intent_orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace mascot
{

void validate_agents(std::span<const RobotAgent> agents)
{
  std::set<std::string> ids;
  std::size_t mobile = 0;
  for (const auto & a : agents) {
    if (!ids.insert(a.id.name).second) {
      throw std::invalid_argument("duplicate robot id '" + a.id.name + "'");
    }
    mobile += a.mobile ? 1 : 0;
  }
  if (mobile != 1) {
    throw std::invalid_argument(
      "exactly one robot must be mobile, got " + std::to_string(mobile));
  }
}

UtteranceOutcome on_utterance(
  const Utterance & utt, std::span<RobotAgent> agents, const KeywordDictionary & dict,
  double d_max)
{
  if (agents.empty()) {
    throw std::invalid_argument("on_utterance needs at least one robot");
  }
  UtteranceOutcome out;
  out.per_agent.reserve(agents.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    out.per_agent.push_back(recognize(utt, agents[i].id.name, agents[i].position, dict, d_max));
    const double c = out.per_agent[i].certainty;
    const double cb = out.per_agent[best].certainty;
    if (i != best && (c > cb || (c == cb && agents[i].id.name < agents[best].id.name))) {
      best = i;
    }
  }
  out.hypothesis = out.per_agent[best];
  out.presenter = agents[best].id.name;
  for (auto & a : agents) {
    if (a.mobile) {
      a.goal = utt.speaker_position;
    }
  }
  return out;
}

IntentSignal make_signal(const RecognitionHypothesis & hyp, const Recommendation & rec)
{
  return {hyp.certainty, rec.reliability, rec.importance};
}

PresentationEvent present_one(
  const Recommendation & rec, const RecognitionHypothesis & hyp, const std::string & presenter,
  std::span<RobotAgent> agents, const RuleBase & rules, const Gains & gains,
  std::uint64_t tick, std::size_t resolution)
{
  const bool known = std::any_of(agents.begin(), agents.end(), [&](const RobotAgent & a) {
        return a.id.name == presenter;
      });
  if (!known) {
    throw std::invalid_argument("unknown presenter '" + presenter + "'");
  }
  PresentationEvent ev;
  ev.recommendation = rec;
  ev.signal = make_signal(hyp, rec);
  ev.presenter = presenter;
  ev.tick = tick;
  ev.delta = infer_arousal_delta(ev.signal, rules, resolution);
  for (auto & a : agents) {
    const double gain = a.id.name == presenter ? gains.presenter : gains.ambient;
    a.mental = apply_arousal_delta(a.mental, ev.delta, gain);
    a.pose = pose_from_state(a.mental, a.gaze);
  }
  return ev;
}

std::vector<PresentationEvent> present(
  std::span<const Recommendation> recs, const RecognitionHypothesis & hyp,
  const std::string & presenter, std::span<RobotAgent> agents, const RuleBase & rules,
  const Gains & gains, std::uint64_t tick, std::size_t resolution)
{
  if (recs.empty()) {
    throw std::invalid_argument("nothing to present");
  }
  std::vector<const Recommendation *> ordered;
  for (const auto & r : recs) {ordered.push_back(&r);}
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto * a, const auto * b) {
      return a->rank < b->rank;
    });
  std::vector<PresentationEvent> events;
  events.reserve(recs.size());
  for (const auto * r : ordered) {
    events.push_back(present_one(*r, hyp, presenter, agents, rules, gains, tick, resolution));
  }
  return events;
}

GazeTarget gaze_toward(const RobotAgent & agent, const Vec2 & target, double gaze_height)
{
  constexpr double kDeg = 180.0 / std::numbers::pi;
  const double dx = target.x - agent.position.x;
  const double dy = target.y - agent.position.y;
  double az = std::atan2(dy, dx) * kDeg - agent.heading;
  az = std::remainder(az, 360.0);
  const double elevation = std::atan2(gaze_height, std::hypot(dx, dy)) * kDeg;
  return {az, elevation};
}

void tick_motion(
  std::span<RobotAgent> agents, double dt, const MotionParams & params,
  const std::optional<Vec2> & attention)
{
  if (!(dt > 0.0) || !(params.speed > 0.0)) {
    throw std::invalid_argument("tick_motion needs dt > 0 and speed > 0");
  }
  for (auto & a : agents) {
    if (a.mobile && a.goal) {
      const double remaining = distance(a.position, *a.goal);
      const double travel = std::min(params.speed * dt, remaining);
      if (travel >= remaining) {
        a.position = *a.goal;
      } else if (remaining > 0.0) {
        const double f = travel / remaining;
        a.position.x += (a.goal->x - a.position.x) * f;
        a.position.y += (a.goal->y - a.position.y) * f;
      }
    }
    a.mental = decay(a.mental, dt, params.tau);
    if (attention) {
      a.gaze = gaze_toward(a, *attention, params.gaze_height);
    }
  }
}

}  // namespace mascot
