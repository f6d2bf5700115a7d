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

#ifndef MASCOT__MENTAL_STATE_HPP_
#define MASCOT__MENTAL_STATE_HPP_

#include <string>
#include <string_view>

namespace mascot
{

/// Point in the affinity pleasure-arousal space.
///
/// The arousal axis is activeness in communication (arousal-sleep), pleasure
/// is immediate liking toward the interlocutor, affinity is accumulated
/// rapport. All three axes are bounded to [-1, +1]; the origin is neutral.
struct MentalState
{
  double pleasure{0.0};
  double arousal{0.0};
  double affinity{0.0};

  friend bool operator==(const MentalState &, const MentalState &) = default;
};

enum class Axis { pleasure, arousal, affinity };

constexpr double kMentalMin = -1.0;
constexpr double kMentalMax = 1.0;

/// Default time constant of the return to neutral, in seconds.
constexpr double kDefaultDecayTau = 10.0;
constexpr double kDefaultPresenterGain = 0.6;
constexpr double kDefaultAmbientGain = 0.2;

/// Projects a fuzzy-inferred delta onto the arousal axis.
/// Throws std::invalid_argument on non-finite input, negative gain or a delta
/// outside [-1, +1].
MentalState apply_arousal_delta(const MentalState & state, double delta, double gain);

/// Exponential relaxation of every axis toward the origin over `dt` seconds.
MentalState decay(const MentalState & state, double dt, double tau = kDefaultDecayTau);

MentalState set_axis(const MentalState & state, Axis axis, double value);

/// String overload used by operator commands; throws on an unknown axis name.
MentalState set_axis(const MentalState & state, std::string_view axis, double value);

Axis parse_axis(std::string_view name);
std::string_view to_string(Axis axis);

double axis_value(const MentalState & state, Axis axis);

}  // namespace mascot

#endif  // MASCOT__MENTAL_STATE_HPP_
