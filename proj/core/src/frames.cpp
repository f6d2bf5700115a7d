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

#include "mascot/frames.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "mascot/system.hpp"

namespace mascot
{

namespace
{

double finite(const nlohmann::json & j, const char * key)
{
  auto it = j.find(key);
  if (it == j.end() || !it->is_number() || !std::isfinite(it->get<double>())) {
    throw FrameError(std::string("'") + key + "' must be a finite number");
  }
  return it->get<double>();
}

std::string text(const nlohmann::json & j, const char * key)
{
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw FrameError(std::string("'") + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

ClientCommand parse_client_frame(std::string_view frame)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(frame.begin(), frame.end());
  } catch (const nlohmann::json::parse_error &) {
    throw FrameError("frame is not valid JSON");
  }
  if (!j.is_object()) {
    throw FrameError("frame must be a JSON object");
  }
  const auto type = text(j, "type");
  if (type == "utterance") {
    UtteranceCommand cmd;
    cmd.utterance.text = text(j, "text");
    auto pos = j.find("pos");
    if (pos == j.end() || !pos->is_array() || pos->size() != 2) {
      throw FrameError("'pos' must be [x, y]");
    }
    for (const auto & v : *pos) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        throw FrameError("'pos' must hold finite numbers");
      }
    }
    cmd.utterance.speaker_position = {(*pos)[0].get<double>(), (*pos)[1].get<double>()};
    cmd.utterance.noise = j.contains("noise") ? finite(j, "noise") : 0.0;
    if (cmd.utterance.noise < 0.0 || cmd.utterance.noise > 1.0) {
      throw FrameError("'noise' must lie in [0, 1]");
    }
    return cmd;
  }
  if (type == "set_axis") {
    SetAxisCommand cmd;
    cmd.robot = text(j, "robot");
    try {
      cmd.axis = parse_axis(text(j, "axis"));
    } catch (const std::invalid_argument & e) {
      throw FrameError(e.what());
    }
    cmd.value = finite(j, "value");
    return cmd;
  }
  throw FrameError("unknown frame type '" + type + "'");
}

void submit(MascotSystem & system, const ClientCommand & command)
{
  if (const auto * u = std::get_if<UtteranceCommand>(&command)) {
    system.submit_utterance(u->utterance);
  } else if (const auto * s = std::get_if<SetAxisCommand>(&command)) {
    system.submit_set_axis(s->robot, s->axis, s->value);
  }
}

std::string error_frame(std::string_view code, std::string_view message)
{
  return nlohmann::json{{"type", "error"}, {"code", code}, {"message", message}}.dump();
}

}  // namespace mascot
