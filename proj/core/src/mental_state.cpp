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

#include "mascot/mental_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mascot
{

namespace
{

double clamp_axis(double v) {return std::clamp(v, kMentalMin, kMentalMax);}

void require_finite(double v, const char * what)
{
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

MentalState apply_arousal_delta(const MentalState & state, double delta, double gain)
{
  require_finite(delta, "arousal delta");
  require_finite(gain, "gain");
  if (gain < 0.0) {
    throw std::invalid_argument("gain must be >= 0");
  }
  if (delta < -1.0 || delta > 1.0) {
    throw std::invalid_argument("arousal delta must lie in [-1, 1]");
  }
  MentalState out = state;
  out.arousal = clamp_axis(state.arousal + gain * delta);
  return out;
}

MentalState decay(const MentalState & state, double dt, double tau)
{
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("decay dt must be positive");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("decay tau must be positive");
  }
  const double factor = std::exp(-dt / tau);
  return {
    clamp_axis(state.pleasure * factor),
    clamp_axis(state.arousal * factor),
    clamp_axis(state.affinity * factor)};
}

MentalState set_axis(const MentalState & state, Axis axis, double value)
{
  require_finite(value, "axis value");
  MentalState out = state;
  switch (axis) {
    case Axis::pleasure: out.pleasure = clamp_axis(value); break;
    case Axis::arousal: out.arousal = clamp_axis(value); break;
    case Axis::affinity: out.affinity = clamp_axis(value); break;
  }
  return out;
}

MentalState set_axis(const MentalState & state, std::string_view axis, double value)
{
  return set_axis(state, parse_axis(axis), value);
}

Axis parse_axis(std::string_view name)
{
  if (name == "pleasure") {return Axis::pleasure;}
  if (name == "arousal") {return Axis::arousal;}
  if (name == "affinity") {return Axis::affinity;}
  throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

std::string_view to_string(Axis axis)
{
  switch (axis) {
    case Axis::pleasure: return "pleasure";
    case Axis::arousal: return "arousal";
    case Axis::affinity: return "affinity";
  }
  return "?";
}

double axis_value(const MentalState & state, Axis axis)
{
  switch (axis) {
    case Axis::pleasure: return state.pleasure;
    case Axis::arousal: return state.arousal;
    case Axis::affinity: return state.affinity;
  }
  return 0.0;
}

}  // namespace mascot
