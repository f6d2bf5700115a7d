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

#ifndef MASCOT__GEOMETRY_HPP_
#define MASCOT__GEOMETRY_HPP_

#include <cmath>

namespace mascot
{

/// Planar room coordinates in meters.
struct Vec2
{
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Vec2 &, const Vec2 &) = default;
};

inline double distance(const Vec2 & a, const Vec2 & b) noexcept
{
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double clamp01(double v) noexcept {return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);}

}  // namespace mascot

#endif  // MASCOT__GEOMETRY_HPP_
