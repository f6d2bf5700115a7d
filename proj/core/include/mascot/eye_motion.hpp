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

#ifndef MASCOT__EYE_MOTION_HPP_
#define MASCOT__EYE_MOTION_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>

#include "mascot/mental_state.hpp"

namespace mascot
{

struct JointLimit
{
  double min;
  double max;

  constexpr double clamp(double v) const noexcept {return v < min ? min : (v > max ? max : v);}
  constexpr bool contains(double v) const noexcept {return v >= min && v <= max;}
};

/// Two-DOF eyelid, angles in degrees. 0 is fully open.
struct EyelidPose
{
  static constexpr std::size_t kDof = 2;
  static constexpr std::array<JointLimit, kDof> kLimits{{{0.0, 60.0}, {0.0, 30.0}}};

  double upper{0.0};
  double lower{0.0};

  std::array<double, kDof> joints() const noexcept {return {upper, lower};}

  friend bool operator==(const EyelidPose &, const EyelidPose &) = default;
};

/// Three-DOF eyeball, angles in degrees.
struct EyeballPose
{
  static constexpr std::size_t kDof = 3;
  static constexpr std::array<JointLimit, kDof> kLimits{{{-40.0, 40.0}, {-30.0, 30.0},
    {-15.0, 15.0}}};

  double yaw{0.0};
  double pitch{0.0};
  double roll{0.0};

  std::array<double, kDof> joints() const noexcept {return {yaw, pitch, roll};}

  friend bool operator==(const EyeballPose &, const EyeballPose &) = default;
};

struct EyePose
{
  static constexpr std::size_t kDof = EyelidPose::kDof + EyeballPose::kDof;

  EyelidPose lid;
  EyeballPose eye;

  bool within_limits() const noexcept;

  friend bool operator==(const EyePose &, const EyePose &) = default;
};

/// Direction from the robot to the attended point, degrees.
struct GazeTarget
{
  double azimuth{0.0};
  double elevation{0.0};
};

/// Lids follow arousal (aperture = (a + 1) / 2), roll tilts with pleasure,
/// yaw/pitch follow the gaze direction clamped to the joint limits.
EyePose pose_from_state(const MentalState & state, const GazeTarget & gaze);

/// Pose with both lids shut and the eyeball unchanged.
EyePose closed_lids(const EyePose & pose) noexcept;

/// Per-joint smoothstep blend. Throws std::invalid_argument for u outside [0, 1].
EyePose interpolate(const EyePose & from, const EyePose & to, double u);

/// Deterministic uniform draw in [0, 1) from the generator; independent of
/// the standard library's distribution implementations.
double uniform01(std::mt19937_64 & rng);

/// Delay until the next blink: uniform in [0.8 T, 1.2 T] with
/// T = 2 + 2 (1 - arousal) seconds. Sleepier robots blink less often.
double blink_schedule(double arousal, std::mt19937_64 & rng);

constexpr double kBlinkDuration = 0.150;

/// Blink overlay: lids close over the first half of the blink and reopen over
/// the second. `phase` is elapsed blink time over kBlinkDuration.
EyePose blink_overlay(const EyePose & pose, double phase);

/// Per-robot blink timing driven by a shared seeded generator.
class BlinkScheduler
{
public:
  BlinkScheduler() = default;

  /// Samples the first blink time relative to `now`.
  void start(double now, double arousal, std::mt19937_64 & rng);

  /// Returns the phase in [0, 1] of an active blink at time `now`, or a
  /// negative value when no blink is in progress. Schedules the next blink
  /// once the current one finishes.
  double update(double now, double arousal, std::mt19937_64 & rng);

  double next_blink() const noexcept {return next_blink_;}

private:
  double next_blink_{0.0};
  bool started_{false};
};

}  // namespace mascot

#endif  // MASCOT__EYE_MOTION_HPP_
