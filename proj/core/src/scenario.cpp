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

#include "mascot/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mascot
{

namespace
{

[[noreturn]] void fail(std::size_t line, const std::string & msg)
{
  throw ScenarioError("scenario: line " + std::to_string(line) + ": " + msg);
}

double finite_number(const nlohmann::json & j, const char * key, std::size_t line)
{
  auto it = j.find(key);
  if (it == j.end()) {fail(line, std::string("missing '") + key + "'");}
  if (!it->is_number() || !std::isfinite(it->get<double>())) {
    fail(line, std::string("'") + key + "' must be a finite number");
  }
  return it->get<double>();
}

std::string text_field(const nlohmann::json & j, const char * key, std::size_t line)
{
  auto it = j.find(key);
  if (it == j.end()) {fail(line, std::string("missing '") + key + "'");}
  if (!it->is_string()) {fail(line, std::string("'") + key + "' must be a string");}
  return it->get<std::string>();
}

void only_keys(const nlohmann::json & j, std::set<std::string> allowed, std::size_t line)
{
  for (const auto & [key, v] : j.items()) {
    if (!allowed.count(key)) {fail(line, "unknown key '" + key + "'");}
  }
}

ScenarioStep parse_step(std::string_view text, std::size_t line)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error & e) {
    fail(line, std::string("malformed JSON (") + e.what() + ")");
  }
  if (!j.is_object()) {fail(line, "expected a JSON object");}

  ScenarioStep step;
  auto tick = j.find("at_tick");
  if (tick == j.end()) {fail(line, "missing 'at_tick'");}
  if (!tick->is_number_integer() || tick->get<long long>() < 0) {
    fail(line, "'at_tick' must be a non-negative integer");
  }
  step.at_tick = tick->get<std::uint64_t>();

  const auto kind = text_field(j, "kind", line);
  if (kind == "utterance") {
    only_keys(j, {"at_tick", "kind", "text", "pos", "noise"}, line);
    step.kind = ScenarioStep::Kind::utterance;
    step.utterance.text = text_field(j, "text", line);
    auto pos = j.find("pos");
    if (pos == j.end() || !pos->is_array() || pos->size() != 2 ||
      !(*pos)[0].is_number() || !(*pos)[1].is_number())
    {
      fail(line, "'pos' must be [x, y]");
    }
    step.utterance.speaker_position = {(*pos)[0].get<double>(), (*pos)[1].get<double>()};
    if (!std::isfinite(step.utterance.speaker_position.x) ||
      !std::isfinite(step.utterance.speaker_position.y))
    {
      fail(line, "'pos' must be finite");
    }
    step.utterance.noise = j.contains("noise") ? finite_number(j, "noise", line) : 0.0;
    if (step.utterance.noise < 0.0 || step.utterance.noise > 1.0) {
      fail(line, "'noise' must lie in [0, 1]");
    }
  } else if (kind == "set_axis") {
    only_keys(j, {"at_tick", "kind", "robot", "axis", "value"}, line);
    step.kind = ScenarioStep::Kind::set_axis;
    step.robot = text_field(j, "robot", line);
    try {
      step.axis = parse_axis(text_field(j, "axis", line));
    } catch (const std::invalid_argument & e) {
      fail(line, e.what());
    }
    step.value = finite_number(j, "value", line);
  } else if (kind == "pause") {
    only_keys(j, {"at_tick", "kind"}, line);
    step.kind = ScenarioStep::Kind::pause;
  } else {
    fail(line, "unknown kind '" + kind + "'");
  }
  return step;
}

}  // namespace

std::uint64_t Scenario::length() const noexcept
{
  return steps.empty() ? 0 : steps.back().at_tick + 1;
}

Scenario parse_scenario(std::string_view text)
{
  Scenario sc;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line;
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {end = text.size();}
    auto row = text.substr(pos, end - pos);
    pos = end + 1;
    if (!row.empty() && row.back() == '\r') {
      fail(line, "CRLF line endings are not accepted");
    }
    if (row.find_first_not_of(" \t") == std::string_view::npos) {
      continue;
    }
    auto step = parse_step(row, line);
    if (!sc.steps.empty() && step.at_tick < sc.steps.back().at_tick) {
      fail(line, "steps must be sorted by at_tick");
    }
    sc.steps.push_back(std::move(step));
  }
  return sc;
}

Scenario load_scenario(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ScenarioError("scenario: cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace mascot
