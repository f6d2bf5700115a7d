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

#ifndef MASCOT__FRAMES_HPP_
#define MASCOT__FRAMES_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "mascot/dialog_pipeline.hpp"
#include "mascot/mental_state.hpp"

namespace mascot
{

class MascotSystem;

/// Client frame that failed to parse or validate.
class FrameError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct UtteranceCommand
{
  Utterance utterance;
};

struct SetAxisCommand
{
  std::string robot;
  Axis axis{Axis::arousal};
  double value{0.0};
};

using ClientCommand = std::variant<UtteranceCommand, SetAxisCommand>;

/// {type:"utterance", text, pos:[x,y], noise} or
/// {type:"set_axis", robot, axis, value}.
ClientCommand parse_client_frame(std::string_view text);

/// Throws std::invalid_argument if the command names an unknown robot.
void submit(MascotSystem & system, const ClientCommand & command);

/// {"type":"error","code":code,"message":message}
std::string error_frame(std::string_view code, std::string_view message);

}  // namespace mascot

#endif  // MASCOT__FRAMES_HPP_
