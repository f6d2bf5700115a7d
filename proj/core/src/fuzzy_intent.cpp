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

#include "mascot/fuzzy_intent.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "json_util.hpp"

namespace mascot
{

double FuzzySet::membership(double x) const noexcept
{
  if (!(x >= a && x <= c)) {
    return 0.0;
  }
  if (x == b) {
    return 1.0;
  }
  if (x < b) {
    return (x - a) / (b - a);
  }
  return (c - x) / (c - b);
}

namespace
{

void validate_set(const FuzzySet & set, const std::string & where)
{
  if (set.label.empty()) {
    throw RuleBaseError(where + ": empty label");
  }
  if (!std::isfinite(set.a) || !std::isfinite(set.b) || !std::isfinite(set.c)) {
    throw RuleBaseError(where + ": non-finite breakpoint");
  }
  if (!(set.a <= set.b && set.b <= set.c) || !(set.a < set.c)) {
    throw RuleBaseError(where + ": breakpoints must satisfy a <= b <= c with a < c");
  }
}

}  // namespace

void RuleBase::validate() const
{
  for (std::size_t in = 0; in < kInputCount; ++in) {
    for (std::size_t lvl = 0; lvl < kInputLevels; ++lvl) {
      validate_set(
        inputs[in][lvl],
        "inputs." + std::string(kInputNames[in]) + "[" + std::to_string(lvl) + "]");
    }
  }
  for (std::size_t o = 0; o < kOutputLevels; ++o) {
    validate_set(outputs[o], "output[" + std::to_string(o) + "]");
    if (outputs[o].a < -1.0 || outputs[o].c > 1.0) {
      throw RuleBaseError("output[" + std::to_string(o) + "]: support must lie in [-1, 1]");
    }
  }
  for (std::size_t r = 0; r < kRuleCount; ++r) {
    if (consequents[r] >= kOutputLevels) {
      throw RuleBaseError("rules[" + std::to_string(r) + "]: consequent out of range");
    }
  }
}

std::size_t level_sum_consequent(std::size_t level_sum)
{
  if (level_sum <= 1) {return 0;}  // NB
  if (level_sum == 2) {return 1;}  // NS
  if (level_sum == 3) {return 2;}  // ZE
  if (level_sum == 4) {return 3;}  // PS
  return 4;                        // PB
}

RuleBase default_rulebase()
{
  RuleBase rb;
  const RuleBase::Partition unit{{
    {"LOW", 0.0, 0.0, 0.5},
    {"MED", 0.0, 0.5, 1.0},
    {"HIGH", 0.5, 1.0, 1.0}}};
  rb.inputs = {unit, unit, unit};
  rb.outputs = {{
    {"NB", -1.0, -1.0, -0.5},
    {"NS", -1.0, -0.5, 0.0},
    {"ZE", -0.5, 0.0, 0.5},
    {"PS", 0.0, 0.5, 1.0},
    {"PB", 0.5, 1.0, 1.0}}};
  for (std::size_t c = 0; c < kInputLevels; ++c) {
    for (std::size_t r = 0; r < kInputLevels; ++r) {
      for (std::size_t i = 0; i < kInputLevels; ++i) {
        rb.consequents[RuleBase::rule_index(c, r, i)] = level_sum_consequent(c + r + i);
      }
    }
  }
  return rb;
}

void validate_signal(const IntentSignal & signal)
{
  const auto check = [](double v, const char * name) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string("intent signal ") + name + " outside [0, 1]");
      }
    };
  check(signal.certainty, "certainty");
  check(signal.reliability, "reliability");
  check(signal.importance, "importance");
}

double sample_position(std::size_t index, std::size_t resolution) noexcept
{
  if (resolution < 2) {
    return 0.0;
  }
  // Integer numerator keeps the grid exactly antisymmetric about 0.
  const double span = static_cast<double>(resolution - 1);
  return (2.0 * static_cast<double>(index) - span) / span;
}

std::vector<double> aggregate_output(
  const IntentSignal & signal, const RuleBase & rules, std::size_t resolution)
{
  const std::array<double, kInputCount> x{signal.certainty, signal.reliability, signal.importance};
  std::array<std::array<double, kInputLevels>, kInputCount> degree{};
  for (std::size_t in = 0; in < kInputCount; ++in) {
    for (std::size_t lvl = 0; lvl < kInputLevels; ++lvl) {
      degree[in][lvl] = rules.inputs[in][lvl].membership(x[in]);
    }
  }

  // Clipping every rule then taking the max equals clipping each output set
  // once at the strongest rule that names it.
  std::array<double, kOutputLevels> clip{};
  for (std::size_t c = 0; c < kInputLevels; ++c) {
    for (std::size_t r = 0; r < kInputLevels; ++r) {
      for (std::size_t i = 0; i < kInputLevels; ++i) {
        const double strength = std::min({degree[0][c], degree[1][r], degree[2][i]});
        auto & slot = clip[rules.consequent(c, r, i)];
        slot = std::max(slot, strength);
      }
    }
  }

  std::vector<double> curve(resolution, 0.0);
  for (std::size_t s = 0; s < resolution; ++s) {
    const double y = sample_position(s, resolution);
    double mu = 0.0;
    for (std::size_t o = 0; o < kOutputLevels; ++o) {
      if (clip[o] > 0.0) {
        mu = std::max(mu, std::min(clip[o], rules.outputs[o].membership(y)));
      }
    }
    curve[s] = mu;
  }
  return curve;
}

double defuzzify_centroid(std::span<const double> aggregate)
{
  const std::size_t n = aggregate.size();
  double moment = 0.0;
  double area = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    moment += sample_position(s, n) * aggregate[s];
    area += aggregate[s];
  }
  if (area <= 0.0) {
    return 0.0;
  }
  return std::clamp(moment / area, -1.0, 1.0);
}

double infer_arousal_delta(
  const IntentSignal & signal, const RuleBase & rules, std::size_t resolution)
{
  validate_signal(signal);
  if (resolution < kMinResolution) {
    throw std::invalid_argument(
      "centroid resolution must be at least " + std::to_string(kMinResolution));
  }
  const auto curve = aggregate_output(signal, rules, resolution);
  return defuzzify_centroid(curve);
}

// ---------------------------------------------------------------------------
// JSON form
//
// {
//   "inputs": {"certainty": [{"label": "LOW", "points": [0, 0, 0.5]}, ...], ...},
//   "output": [{"label": "NB", "points": [-1, -1, -0.5]}, ...],
//   "rules": [{"if": ["LOW", "LOW", "LOW"], "then": "NB"}, ...]
// }

namespace
{

constexpr std::string_view kWhat = "rule base";

FuzzySet parse_set(const nlohmann::json & j, const std::string & path)
{
  using detail::as_number;
  using detail::as_string;
  using detail::field_error;
  if (!j.is_object()) {
    field_error<RuleBaseError>(kWhat, path, "expected an object");
  }
  FuzzySet set;
  set.label = as_string<RuleBaseError>(
    detail::require<RuleBaseError>(j, "label", kWhat, path), kWhat, path + ".label");
  const auto & pts = detail::require<RuleBaseError>(j, "points", kWhat, path);
  if (!pts.is_array() || pts.size() != 3) {
    field_error<RuleBaseError>(kWhat, path + ".points", "expected 3 breakpoints");
  }
  set.a = as_number<RuleBaseError>(pts[0], kWhat, path + ".points[0]");
  set.b = as_number<RuleBaseError>(pts[1], kWhat, path + ".points[1]");
  set.c = as_number<RuleBaseError>(pts[2], kWhat, path + ".points[2]");
  try {
    validate_set(set, path);
  } catch (const RuleBaseError & e) {
    throw RuleBaseError(std::string(kWhat) + ": field " + e.what());
  }
  return set;
}

template<std::size_t N>
std::array<FuzzySet, N> parse_partition(const nlohmann::json & j, const std::string & path)
{
  if (!j.is_array() || j.size() != N) {
    detail::field_error<RuleBaseError>(
      kWhat, path, "expected " + std::to_string(N) + " fuzzy sets");
  }
  std::array<FuzzySet, N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = parse_set(j[k], path + "[" + std::to_string(k) + "]");
    for (std::size_t prev = 0; prev < k; ++prev) {
      if (out[prev].label == out[k].label) {
        detail::field_error<RuleBaseError>(
          kWhat, path + "[" + std::to_string(k) + "].label", "duplicate label");
      }
    }
  }
  return out;
}

template<std::size_t N>
std::size_t label_index(
  const std::array<FuzzySet, N> & sets, const std::string & label, const std::string & path)
{
  for (std::size_t k = 0; k < N; ++k) {
    if (sets[k].label == label) {return k;}
  }
  detail::field_error<RuleBaseError>(kWhat, path, "unknown label '" + label + "'");
}

}  // namespace

RuleBase rulebase_from_json(std::string_view text)
{
  const auto doc = detail::parse_json<RuleBaseError>(text, kWhat);
  if (!doc.is_object()) {
    detail::field_error<RuleBaseError>(kWhat, "$", "expected an object");
  }
  RuleBase rb;
  const auto & inputs = detail::require<RuleBaseError>(doc, "inputs", kWhat, "$");
  if (!inputs.is_object()) {
    detail::field_error<RuleBaseError>(kWhat, "$.inputs", "expected an object");
  }
  for (std::size_t in = 0; in < kInputCount; ++in) {
    const std::string name(kInputNames[in]);
    rb.inputs[in] = parse_partition<kInputLevels>(
      detail::require<RuleBaseError>(inputs, name.c_str(), kWhat, "$.inputs"),
      "$.inputs." + name);
  }
  if (inputs.size() != kInputCount) {
    detail::field_error<RuleBaseError>(kWhat, "$.inputs", "expected exactly 3 inputs");
  }
  rb.outputs = parse_partition<kOutputLevels>(
    detail::require<RuleBaseError>(doc, "output", kWhat, "$"), "$.output");

  const auto & rules = detail::require<RuleBaseError>(doc, "rules", kWhat, "$");
  if (!rules.is_array() || rules.size() != kRuleCount) {
    detail::field_error<RuleBaseError>(kWhat, "$.rules", "expected exactly 27 rules");
  }
  std::array<bool, kRuleCount> seen{};
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const std::string path = "$.rules[" + std::to_string(r) + "]";
    const auto & rule = rules[r];
    if (!rule.is_object()) {
      detail::field_error<RuleBaseError>(kWhat, path, "expected an object");
    }
    const auto & antecedent = detail::require<RuleBaseError>(rule, "if", kWhat, path);
    if (!antecedent.is_array() || antecedent.size() != kInputCount) {
      detail::field_error<RuleBaseError>(kWhat, path + ".if", "expected 3 input labels");
    }
    std::array<std::size_t, kInputCount> lvl{};
    for (std::size_t in = 0; in < kInputCount; ++in) {
      const std::string p = path + ".if[" + std::to_string(in) + "]";
      lvl[in] = label_index(
        rb.inputs[in], detail::as_string<RuleBaseError>(antecedent[in], kWhat, p), p);
    }
    const std::size_t idx = RuleBase::rule_index(lvl[0], lvl[1], lvl[2]);
    if (seen[idx]) {
      detail::field_error<RuleBaseError>(kWhat, path + ".if", "duplicate input combination");
    }
    seen[idx] = true;
    const std::string p = path + ".then";
    rb.consequents[idx] = label_index(
      rb.outputs,
      detail::as_string<RuleBaseError>(
        detail::require<RuleBaseError>(rule, "then", kWhat, path), kWhat, p),
      p);
  }
  rb.validate();
  return rb;
}

RuleBase load_rulebase(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RuleBaseError("rule base: cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return rulebase_from_json(ss.str());
}

std::string rulebase_to_json(const RuleBase & rules)
{
  const auto set_json = [](const FuzzySet & s) {
      return nlohmann::ordered_json{{"label", s.label}, {"points", {s.a, s.b, s.c}}};
    };
  nlohmann::ordered_json doc;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (std::size_t in = 0; in < kInputCount; ++in) {
    auto & arr = inputs[std::string(kInputNames[in])] = nlohmann::ordered_json::array();
    for (const auto & s : rules.inputs[in]) {arr.push_back(set_json(s));}
  }
  doc["inputs"] = inputs;
  auto & out = doc["output"] = nlohmann::ordered_json::array();
  for (const auto & s : rules.outputs) {out.push_back(set_json(s));}
  auto & arr = doc["rules"] = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < kInputLevels; ++c) {
    for (std::size_t r = 0; r < kInputLevels; ++r) {
      for (std::size_t i = 0; i < kInputLevels; ++i) {
        arr.push_back(
          {{"if", {rules.inputs[0][c].label, rules.inputs[1][r].label, rules.inputs[2][i].label}},
            {"then", rules.outputs[rules.consequent(c, r, i)].label}});
      }
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace mascot
