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

#ifndef MASCOT__SCENARIO_HPP_
#define MASCOT__SCENARIO_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mascot/dialog_pipeline.hpp"
#include "mascot/mental_state.hpp"

namespace mascot
{

class ScenarioError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct ScenarioStep
{
  enum class Kind { utterance, set_axis, pause };

  std::uint64_t at_tick{0};
  Kind kind{Kind::pause};
  Utterance utterance;   // kind == utterance
  std::string robot;     // kind == set_axis
  Axis axis{Axis::arousal};
  double value{0.0};
};

/// A JSON Lines script, one step per line, sorted by at_tick. A pause step
/// schedules nothing; it only stretches the run to cover its tick.
struct Scenario
{
  std::vector<ScenarioStep> steps;

  /// Ticks needed to reach every step: last at_tick + 1, or 0 when empty.
  std::uint64_t length() const noexcept;
};

/// Throws ScenarioError("line N: ...") for malformed or unsorted input.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string & path);

}  // namespace mascot

#endif  // MASCOT__SCENARIO_HPP_
