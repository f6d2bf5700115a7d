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

#ifndef MASCOT__CONFIG_HPP_
#define MASCOT__CONFIG_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mascot/dialog_pipeline.hpp"
#include "mascot/fuzzy_intent.hpp"
#include "mascot/geometry.hpp"
#include "mascot/intent_orchestrator.hpp"
#include "mascot/recommender.hpp"

namespace mascot
{

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct RobotConfig
{
  std::string id;
  Vec2 position;
  bool mobile{false};
  double heading{0.0};
};

struct Config
{
  Gains gains;
  double tau{kDefaultDecayTau};
  double d_max{kDefaultHearingRange};
  double alpha{kDefaultInterestRate};
  std::size_t k{kDefaultResultCount};
  double speed{kDefaultMobileSpeed};
  int tick_period_ms{100};
  std::size_t resolution{kDefaultResolution};
  double gaze_height{0.4};
  std::vector<RobotConfig> robots;

  // Resource paths; empty means the embedded default.
  std::string corpus_path;
  std::string rules_path;
  std::string keywords_path;

  double tick_seconds() const noexcept {return tick_period_ms / 1000.0;}

  /// Throws ConfigError when a value is out of its documented range.
  void validate() const;
};

/// Five robots around a 6 x 5 m room, R5 mobile at the center.
Config default_config();

/// Missing keys keep their defaults; unknown keys are rejected. Relative
/// resource paths resolve against `base_dir`.
Config config_from_json(std::string_view text, const std::string & base_dir = {});
Config load_config(const std::string & path);

struct Resources
{
  RuleBase rules;
  KeywordDictionary keywords;
  std::vector<Document> corpus;
};

/// Loads the files named by the config, falling back to the embedded
/// defaults. Missing files throw ConfigError.
Resources load_resources(const Config & config);

// Embedded copies of the bundled data files.
std::string_view embedded_config_json();
std::string_view embedded_corpus_json();
std::string_view embedded_keywords_json();
std::string_view embedded_rules_json();

std::string read_text_file(const std::string & path);

}  // namespace mascot

#endif  // MASCOT__CONFIG_HPP_
