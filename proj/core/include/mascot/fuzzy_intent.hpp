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

#ifndef MASCOT__FUZZY_INTENT_HPP_
#define MASCOT__FUZZY_INTENT_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mascot
{

/// Meta-information attached to one presented item.
struct IntentSignal
{
  double certainty{0.0};    // recognition confidence on the input side
  double reliability{0.0};  // confidence in the output result
  double importance{0.0};   // rank-derived weight among alternatives

  friend bool operator==(const IntentSignal &, const IntentSignal &) = default;
};

/// Triangular fuzzy set with breakpoints a <= b <= c. a == b or b == c gives
/// a shoulder whose plateau endpoint has membership 1.
struct FuzzySet
{
  std::string label;
  double a{0.0};
  double b{0.0};
  double c{0.0};

  double membership(double x) const noexcept;
};

inline double membership(const FuzzySet & set, double x) noexcept {return set.membership(x);}

/// Thrown for rule bases that violate their structural invariants, and for
/// malformed rule-base documents. what() carries the line or field at fault.
class RuleBaseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kInputCount = 3;
constexpr std::size_t kInputLevels = 3;
constexpr std::size_t kOutputLevels = 5;
constexpr std::size_t kRuleCount = kInputLevels * kInputLevels * kInputLevels;
constexpr std::size_t kDefaultResolution = 2001;
constexpr std::size_t kMinResolution = 101;

constexpr std::array<std::string_view, kInputCount> kInputNames{
  "certainty", "reliability", "importance"};

/// Mamdani configuration: three linguistic levels per input, five output
/// levels over [-1, +1] and one rule per input-level combination.
///
/// Rules are stored densely; the consequent for levels (c, r, i) lives at
/// rule_index(c, r, i) and names an output set by index.
struct RuleBase
{
  using Partition = std::array<FuzzySet, kInputLevels>;

  std::array<Partition, kInputCount> inputs;
  std::array<FuzzySet, kOutputLevels> outputs;
  std::array<std::size_t, kRuleCount> consequents{};

  static constexpr std::size_t rule_index(
    std::size_t certainty_level, std::size_t reliability_level, std::size_t importance_level)
  {
    return (certainty_level * kInputLevels + reliability_level) * kInputLevels + importance_level;
  }

  std::size_t consequent(std::size_t c, std::size_t r, std::size_t i) const
  {
    return consequents.at(rule_index(c, r, i));
  }

  /// Throws RuleBaseError if any set is malformed or a consequent is out of range.
  void validate() const;
};

/// LOW/MED/HIGH over [0, 1], NB/NS/ZE/PS/PB over [-1, +1] and a consequent
/// chosen by the sum of the three antecedent level indices.
RuleBase default_rulebase();

/// Consequent index used by the default table for a level sum in [0, 6].
std::size_t level_sum_consequent(std::size_t level_sum);

/// Parses a rule-base JSON document. Errors name the offending line (for
/// syntax errors) or the JSON path of the offending field.
RuleBase rulebase_from_json(std::string_view text);
RuleBase load_rulebase(const std::string & path);
std::string rulebase_to_json(const RuleBase & rules);

/// Uniform sample positions over [-1, +1].
double sample_position(std::size_t index, std::size_t resolution) noexcept;

/// Clipped-and-max aggregated output membership curve sampled at
/// `resolution` uniform points over [-1, +1].
std::vector<double> aggregate_output(
  const IntentSignal & signal, const RuleBase & rules, std::size_t resolution = kDefaultResolution);

/// Discrete centroid of a membership curve sampled uniformly over [-1, +1].
/// A curve with zero area defuzzifies to 0.
double defuzzify_centroid(std::span<const double> aggregate);

/// Full inference: fuzzify, min-combine antecedents, clip consequents,
/// max-aggregate, centroid. Throws std::invalid_argument for a signal outside
/// the unit cube or a resolution below kMinResolution.
double infer_arousal_delta(
  const IntentSignal & signal, const RuleBase & rules,
  std::size_t resolution = kDefaultResolution);

void validate_signal(const IntentSignal & signal);

}  // namespace mascot

#endif  // MASCOT__FUZZY_INTENT_HPP_
