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

#include "mascot/system.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mascot
{

namespace
{

constexpr const char * kTopicHypothesis = "speech/hypothesis";
constexpr const char * kTopicResults = "recommend/results";
constexpr const char * kTopicIntent = "intent/delta";

nlohmann::json mental_json(const MentalState & m)
{
  return {{"p", m.pleasure}, {"a", m.arousal}, {"f", m.affinity}};
}

nlohmann::json pose_json(const EyePose & p)
{
  return {
    {"lid_upper", p.lid.upper}, {"lid_lower", p.lid.lower},
    {"eye_yaw", p.eye.yaw}, {"eye_pitch", p.eye.pitch}, {"eye_roll", p.eye.roll}};
}

nlohmann::json hypothesis_json(const RecognitionHypothesis & h)
{
  return {{"tokens", h.tokens}, {"certainty", h.certainty}, {"presenter", h.source_robot}};
}

RecognitionHypothesis hypothesis_from_json(const nlohmann::json & j)
{
  RecognitionHypothesis h;
  h.tokens = j.at("tokens").get<std::vector<std::string>>();
  h.certainty = j.at("certainty").get<double>();
  h.source_robot = j.at("presenter").get<std::string>();
  return h;
}

nlohmann::json recommendation_json(const Recommendation & r)
{
  return {{"doc", r.doc}, {"rank", r.rank}, {"reliability", r.reliability},
    {"importance", r.importance}};
}

Recommendation recommendation_from_json(const nlohmann::json & j)
{
  return {j.at("doc").get<std::string>(), j.at("rank").get<int>(),
    j.at("reliability").get<double>(), j.at("importance").get<double>()};
}

}  // namespace

MascotSystem::MascotSystem(Config config, Resources resources, std::uint64_t seed)
: config_(std::move(config)), resources_(std::move(resources)), seed_(seed), rng_(seed)
{
  config_.validate();
  resources_.rules.validate();
  if (resources_.corpus.empty()) {
    throw std::invalid_argument("corpus must not be empty");
  }
  for (const auto & rc : config_.robots) {
    RobotAgent a;
    a.id = {rc.id, ComponentKind::robot};
    a.position = rc.position;
    a.mobile = rc.mobile;
    a.heading = rc.heading;
    a.pose = pose_from_state(a.mental, a.gaze);
    agents_.push_back(std::move(a));
  }
  validate_agents(agents_);
  wire_components();
  blinks_.resize(agents_.size());
  blinking_.assign(agents_.size(), false);
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    blinks_[i].start(0.0, agents_[i].mental.arousal, rng_);
  }
}

void MascotSystem::wire_components()
{
  for (const auto & a : agents_) {
    robot_handles_.push_back(bus_.register_component(a.id));
  }
  speech_ = bus_.register_component({"speech", ComponentKind::speech});
  recommender_ = bus_.register_component(
    {"recommender", ComponentKind::recommender},
    [this](const Envelope & env) {on_recommender(env);});
  bus_.subscribe(recommender_, kTopicHypothesis);
  gateway_ = bus_.register_component(
    {"gateway", ComponentKind::gateway},
    [this](const Envelope & env) {on_gateway(env);});
  bus_.subscribe(gateway_, kTopicHypothesis);
  bus_.subscribe(gateway_, kTopicResults);
}

void MascotSystem::submit_utterance(Utterance utt)
{
  if (!(utt.noise >= 0.0 && utt.noise <= 1.0)) {
    throw std::invalid_argument("utterance noise must lie in [0, 1]");
  }
  if (!std::isfinite(utt.speaker_position.x) || !std::isfinite(utt.speaker_position.y)) {
    throw std::invalid_argument("speaker position must be finite");
  }
  inbox_utterances_.push_back(std::move(utt));
}

void MascotSystem::submit_set_axis(const std::string & robot, Axis axis, double value)
{
  if (!std::isfinite(value)) {
    throw std::invalid_argument("axis value must be finite");
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i].id.name == robot) {
      inbox_axes_.push_back({i, axis, value});
      return;
    }
  }
  throw std::invalid_argument("unknown robot '" + robot + "'");
}

void MascotSystem::apply_step(const ScenarioStep & step)
{
  switch (step.kind) {
    case ScenarioStep::Kind::utterance: submit_utterance(step.utterance); break;
    case ScenarioStep::Kind::set_axis: submit_set_axis(step.robot, step.axis, step.value); break;
    case ScenarioStep::Kind::pause: break;
  }
}

// The speech module hears the microphone directly; its hypothesis is the
// first message on the bus.
void MascotSystem::on_speech(const Utterance & utt)
{
  const auto outcome = on_utterance(utt, agents_, resources_.keywords, config_.d_max);
  attention_ = utt.speaker_position;
  auto payload = hypothesis_json(outcome.hypothesis);
  nlohmann::json heard = nlohmann::json::array();
  for (const auto & h : outcome.per_agent) {
    heard.push_back({{"robot", h.source_robot}, {"certainty", h.certainty}});
  }
  payload["heard"] = std::move(heard);
  bus_.publish(speech_, kTopicHypothesis, std::move(payload), "mascot.hypothesis/1");
}

void MascotSystem::on_recommender(const Envelope & env)
{
  const auto hyp = hypothesis_from_json(env.payload);
  profile_ = update_interest(profile_, hyp, resources_.keywords, config_.alpha);
  const auto recs = rank(profile_, resources_.corpus, config_.k);
  nlohmann::json list = nlohmann::json::array();
  for (const auto & r : recs) {list.push_back(recommendation_json(r));}
  bus_.publish(
    recommender_, kTopicResults,
    {{"hypothesis", hypothesis_json(hyp)}, {"recommendations", std::move(list)}},
    "mascot.results/1");
}

void MascotSystem::on_gateway(const Envelope & env)
{
  if (env.topic == kTopicHypothesis) {
    hypothesis_ = hypothesis_from_json(env.payload);
    return;
  }
  presenting_ = hypothesis_from_json(env.payload.at("hypothesis"));
  scored_.clear();
  for (const auto & j : env.payload.at("recommendations")) {
    ScoredRecommendation s;
    s.recommendation = recommendation_from_json(j);
    s.signal = make_signal(presenting_, s.recommendation);
    s.delta = infer_arousal_delta(s.signal, resources_.rules, config_.resolution);
    scored_.push_back(s);
  }
  // Newer results supersede whatever was still waiting to be presented.
  queue_.assign(scored_.begin(), scored_.end());
}

nlohmann::json MascotSystem::robot_json(const RobotAgent & agent) const
{
  return {
    {"id", agent.id.name}, {"mobile", agent.mobile}, {"mental", mental_json(agent.mental)},
    {"pose", pose_json(agent.pose)}, {"pos", {agent.position.x, agent.position.y}}};
}

void MascotSystem::advance()
{
  const std::uint64_t t = tick_;
  const double dt = config_.tick_seconds();
  const double now = static_cast<double>(t) * dt;

  for (const auto & cmd : inbox_axes_) {
    auto & a = agents_[cmd.agent];
    a.mental = set_axis(a.mental, cmd.axis, cmd.value);
  }
  inbox_axes_.clear();
  auto utterances = std::move(inbox_utterances_);
  inbox_utterances_.clear();
  for (const auto & utt : utterances) {
    on_speech(utt);
  }

  nlohmann::json events = nlohmann::json::array();
  if (!queue_.empty()) {
    const auto next = queue_.front();
    queue_.pop_front();
    std::vector<double> before;
    for (const auto & a : agents_) {before.push_back(a.mental.arousal);}
    const auto ev = present_one(
      next.recommendation, presenting_, presenting_.source_robot, agents_, resources_.rules,
      config_.gains, t, config_.resolution);
    nlohmann::json applied = nlohmann::json::object();
    for (std::size_t i = 0; i < agents_.size(); ++i) {
      applied[agents_[i].id.name] = agents_[i].mental.arousal - before[i];
    }
    nlohmann::json ej = {
      {"doc", ev.recommendation.doc}, {"rank", ev.recommendation.rank},
      {"presenter", ev.presenter},
      {"signal", {{"certainty", ev.signal.certainty}, {"reliability", ev.signal.reliability},
        {"importance", ev.signal.importance}}},
      {"delta", ev.delta}, {"applied", applied}};
    bus_.publish(gateway_, kTopicIntent, ej, "mascot.intent/1");
    events.push_back(std::move(ej));
  }

  MotionParams motion;
  motion.speed = config_.speed;
  motion.tau = config_.tau;
  motion.gaze_height = config_.gaze_height;
  tick_motion(agents_, dt, motion, attention_);

  nlohmann::json robots = nlohmann::json::array();
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    auto & a = agents_[i];
    a.pose = pose_from_state(a.mental, a.gaze);
    const double phase = blinks_[i].update(now, a.mental.arousal, rng_);
    blinking_[i] = phase >= 0.0;
    if (blinking_[i]) {
      a.pose = blink_overlay(a.pose, phase);
    }
    bus_.publish(
      robot_handles_[i], "robot/" + a.id.name + "/pose", pose_json(a.pose), "mascot.pose/1");
    auto rj = robot_json(a);
    rj["blink"] = static_cast<bool>(blinking_[i]);
    robots.push_back(std::move(rj));
  }

  nlohmann::json pending = nlohmann::json::array();
  for (const auto & q : queue_) {
    pending.push_back({{"doc", q.recommendation.doc}, {"rank", q.recommendation.rank}});
  }
  nlohmann::json delivered = nlohmann::json::array();
  for (const auto & d : delivered_) {
    delivered.push_back({{"to", d.subscriber}, {"from", d.sender}, {"seq", d.seq},
      {"topic", d.topic}});
  }
  record_ = {
    {"tick", t}, {"robots", std::move(robots)}, {"pending", std::move(pending)},
    {"events", std::move(events)}, {"delivered", std::move(delivered)}};
  last_tick_ = t;
  advanced_ = true;

  bus_.step();
  delivered_ = bus_.last_deliveries();
  tick_ = bus_.tick();
}

nlohmann::json MascotSystem::state_frame() const
{
  nlohmann::json robots = nlohmann::json::array();
  for (const auto & a : agents_) {robots.push_back(robot_json(a));}
  nlohmann::json recs = nlohmann::json::array();
  for (const auto & s : scored_) {
    auto j = recommendation_json(s.recommendation);
    j["delta"] = s.delta;
    recs.push_back(std::move(j));
  }
  return {
    {"type", "state"}, {"tick", advanced_ ? last_tick_ : 0}, {"seed", seed_},
    {"robots", std::move(robots)},
    {"hypothesis", hypothesis_ ? hypothesis_json(*hypothesis_) : nlohmann::json(nullptr)},
    {"recommendations", std::move(recs)}};
}

std::uint64_t run_scenario(
  const Scenario & scenario, const Config & config, const Resources & resources,
  std::uint64_t seed, std::ostream & out, std::uint64_t ticks)
{
  const std::uint64_t length = scenario.length();
  if (ticks != 0 && ticks < length) {
    throw ScenarioError(
      "scenario: steps reach tick " + std::to_string(length - 1) + " but only " +
      std::to_string(ticks) + " ticks were requested");
  }
  const std::uint64_t n = ticks != 0 ? ticks : length;
  MascotSystem system(config, resources, seed);
  std::size_t next = 0;
  for (std::uint64_t t = 0; t < n; ++t) {
    while (next < scenario.steps.size() && scenario.steps[next].at_tick == t) {
      system.apply_step(scenario.steps[next++]);
    }
    system.advance();
    out << system.last_record().dump() << '\n';
  }
  return n;
}

}  // namespace mascot
