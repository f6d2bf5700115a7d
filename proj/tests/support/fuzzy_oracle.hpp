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

// Brute-force reference for the default Mamdani configuration. Shares no
// code with the library: its own membership formula, its own rule table,
// per-rule clipping and trapezoid-rule integration.

#ifndef MASCOT_TESTS__FUZZY_ORACLE_HPP_
#define MASCOT_TESTS__FUZZY_ORACLE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle
{

struct Tri
{
  double a, b, c;
};

// min/max form of a triangle; shoulders (a == b or b == c) take the flat side.
inline double tri(const Tri & t, double x)
{
  if (x < t.a || x > t.c) {return 0.0;}
  const double rise = t.b > t.a ? (x - t.a) / (t.b - t.a) : 1.0;
  const double fall = t.c > t.b ? (t.c - x) / (t.c - t.b) : 1.0;
  return std::max(0.0, std::min({rise, fall, 1.0}));
}

inline const std::array<Tri, 3> & input_sets()
{
  static const std::array<Tri, 3> sets{{{0.0, 0.0, 0.5}, {0.0, 0.5, 1.0}, {0.5, 1.0, 1.0}}};
  return sets;
}

inline const std::array<Tri, 5> & output_sets()
{
  static const std::array<Tri, 5> sets{{
    {-1.0, -1.0, -0.5}, {-1.0, -0.5, 0.0}, {-0.5, 0.0, 0.5}, {0.0, 0.5, 1.0}, {0.5, 1.0, 1.0}}};
  return sets;
}

// Level-sum table: 0-1 NB, 2 NS, 3 ZE, 4 PS, 5-6 PB.
inline int consequent(int level_sum)
{
  static const int table[7] = {0, 0, 1, 2, 3, 4, 4};
  return table[level_sum];
}

// Aggregated output membership at y, clipping every one of the 27 rules.
inline double aggregate(double c, double r, double i, double y)
{
  const auto & in = input_sets();
  double mu = 0.0;
  for (int lc = 0; lc < 3; ++lc) {
    for (int lr = 0; lr < 3; ++lr) {
      for (int li = 0; li < 3; ++li) {
        const double w = std::min({tri(in[lc], c), tri(in[lr], r), tri(in[li], i)});
        if (w <= 0.0) {continue;}
        const double clipped = std::min(w, tri(output_sets()[consequent(lc + lr + li)], y));
        mu = std::max(mu, clipped);
      }
    }
  }
  return mu;
}

// Continuous centroid by the trapezoid rule at the given step over [-1, 1].
inline double centroid_trapezoid(double c, double r, double i, double step = 1e-4)
{
  const long n = std::lround(2.0 / step);
  long double moment = 0.0L;
  long double area = 0.0L;
  for (long k = 0; k <= n; ++k) {
    const double y = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(n);
    const double w = (k == 0 || k == n) ? 0.5 : 1.0;
    const double mu = aggregate(c, r, i, y);
    moment += w * y * mu;
    area += w * mu;
  }
  if (area == 0.0L) {return 0.0;}
  return static_cast<double>(moment / area);
}

// Samples the oracle aggregate on the same uniform grid the engine uses.
inline std::vector<double> sampled_aggregate(double c, double r, double i, std::size_t n)
{
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double y = -1.0L + 2.0L * static_cast<long double>(k) / static_cast<long double>(n - 1);
    out[k] = aggregate(c, r, i, static_cast<double>(y));
  }
  return out;
}

// Discrete centroid at equal resolution, extended precision.
inline double centroid_discrete(const std::vector<double> & mu)
{
  const std::size_t n = mu.size();
  long double moment = 0.0L;
  long double area = 0.0L;
  for (std::size_t k = 0; k < n; ++k) {
    const long double y = -1.0L + 2.0L * static_cast<long double>(k) / static_cast<long double>(n - 1);
    moment += y * mu[k];
    area += mu[k];
  }
  if (area == 0.0L) {return 0.0;}
  return static_cast<double>(moment / area);
}

}  // namespace oracle

#endif  // MASCOT_TESTS__FUZZY_ORACLE_HPP_
