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

#include "mascot/eye_motion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mascot
{

namespace
{

constexpr double kLidUpperTravel = 60.0;
constexpr double kLidLowerTravel = 30.0 * 0.5;
constexpr double kRollPerPleasure = -10.0;

double smoothstep(double u) {return u * u * (3.0 - 2.0 * u);}

EyePose clamp_to_limits(EyePose p)
{
  p.lid.upper = EyelidPose::kLimits[0].clamp(p.lid.upper);
  p.lid.lower = EyelidPose::kLimits[1].clamp(p.lid.lower);
  p.eye.yaw = EyeballPose::kLimits[0].clamp(p.eye.yaw);
  p.eye.pitch = EyeballPose::kLimits[1].clamp(p.eye.pitch);
  p.eye.roll = EyeballPose::kLimits[2].clamp(p.eye.roll);
  return p;
}

}  // namespace

bool EyePose::within_limits() const noexcept
{
  const auto lids = lid.joints();
  const auto ball = eye.joints();
  for (std::size_t j = 0; j < EyelidPose::kDof; ++j) {
    if (!EyelidPose::kLimits[j].contains(lids[j])) {return false;}
  }
  for (std::size_t j = 0; j < EyeballPose::kDof; ++j) {
    if (!EyeballPose::kLimits[j].contains(ball[j])) {return false;}
  }
  return true;
}

EyePose pose_from_state(const MentalState & state, const GazeTarget & gaze)
{
  const double arousal = std::clamp(state.arousal, kMentalMin, kMentalMax);
  const double aperture = (arousal + 1.0) / 2.0;
  EyePose p;
  p.lid.upper = kLidUpperTravel * (1.0 - aperture);
  p.lid.lower = kLidLowerTravel * (1.0 - aperture);
  p.eye.yaw = std::isfinite(gaze.azimuth) ? gaze.azimuth : 0.0;
  p.eye.pitch = std::isfinite(gaze.elevation) ? gaze.elevation : 0.0;
  // + 0.0 folds -0.0 into +0.0 for neutral pleasure.
  p.eye.roll = kRollPerPleasure * std::clamp(state.pleasure, kMentalMin, kMentalMax) + 0.0;
  return clamp_to_limits(p);
}

EyePose closed_lids(const EyePose & pose) noexcept
{
  EyePose p = pose;
  p.lid.upper = kLidUpperTravel;
  p.lid.lower = kLidLowerTravel;
  return p;
}

EyePose interpolate(const EyePose & from, const EyePose & to, double u)
{
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("interpolation parameter must lie in [0, 1]");
  }
  if (u == 0.0) {return clamp_to_limits(from);}
  if (u == 1.0) {return clamp_to_limits(to);}
  const double s = smoothstep(u);
  const auto mix = [s](double a, double b) {return a + (b - a) * s;};
  EyePose p;
  p.lid.upper = mix(from.lid.upper, to.lid.upper);
  p.lid.lower = mix(from.lid.lower, to.lid.lower);
  p.eye.yaw = mix(from.eye.yaw, to.eye.yaw);
  p.eye.pitch = mix(from.eye.pitch, to.eye.pitch);
  p.eye.roll = mix(from.eye.roll, to.eye.roll);
  return clamp_to_limits(p);
}

double uniform01(std::mt19937_64 & rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double blink_schedule(double arousal, std::mt19937_64 & rng)
{
  if (!(arousal >= kMentalMin && arousal <= kMentalMax)) {
    throw std::invalid_argument("blink arousal must lie in [-1, 1]");
  }
  const double period = 2.0 + 2.0 * (1.0 - arousal);
  return period * (0.8 + 0.4 * uniform01(rng));
}

EyePose blink_overlay(const EyePose & pose, double phase)
{
  const double t = std::clamp(phase, 0.0, 1.0);
  const double closure = 1.0 - std::abs(2.0 * t - 1.0);
  return interpolate(pose, closed_lids(pose), closure);
}

void BlinkScheduler::start(double now, double arousal, std::mt19937_64 & rng)
{
  next_blink_ = now + blink_schedule(arousal, rng);
  started_ = true;
}

double BlinkScheduler::update(double now, double arousal, std::mt19937_64 & rng)
{
  if (!started_) {
    start(now, arousal, rng);
  }
  while (now >= next_blink_) {
    const double phase = (now - next_blink_) / kBlinkDuration;
    if (phase < 1.0) {
      return phase;
    }
    next_blink_ += kBlinkDuration + blink_schedule(arousal, rng);
  }
  return -1.0;
}

}  // namespace mascot
