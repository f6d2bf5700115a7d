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

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>
#include <nlohmann/json.hpp>

#include "mascot/bus.hpp"
#include "mascot/config.hpp"
#include "mascot/fuzzy_intent.hpp"
#include "mascot/recommender.hpp"
#include "mascot/scenario.hpp"
#include "mascot/system.hpp"

namespace
{

using namespace mascot;

void BM_InferArousalDelta(benchmark::State & state)
{
  const auto rules = default_rulebase();
  const auto resolution = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto _ : state) {
    const IntentSignal s{u(rng), u(rng), u(rng)};
    benchmark::DoNotOptimize(infer_arousal_delta(s, rules, resolution));
  }
}
BENCHMARK(BM_InferArousalDelta)->Arg(kMinResolution)->Arg(kDefaultResolution);

void BM_Rank(benchmark::State & state)
{
  const auto corpus = load_corpus(std::string(MASCOT_DATA_DIR) + "/corpus.json");
  const InterestProfile p{{{"sports", 0.6}, {"news", 0.2}, {"weather", 0.1}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(p, corpus, 3));
  }
}
BENCHMARK(BM_Rank);

void BM_BusStep(benchmark::State & state)
{
  Bus bus;
  std::vector<ComponentHandle> h;
  for (int k = 0; k < 8; ++k) {
    h.push_back(bus.register_component({"c" + std::to_string(k), ComponentKind::robot},
      [](const Envelope &) {}));
    bus.subscribe(h.back(), "robot/*/pose");
  }
  const nlohmann::json payload{{"lid_upper", 10.0}};
  for (auto _ : state) {
    for (std::size_t k = 0; k < h.size(); ++k) {
      bus.publish(h[k], "robot/R" + std::to_string(k) + "/pose", payload);
    }
    benchmark::DoNotOptimize(bus.step());
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_BusStep);

void BM_ScenarioRun(benchmark::State & state)
{
  const auto scenario =
    load_scenario(std::string(MASCOT_DATA_DIR) + "/scenarios/single_utterance.jsonl");
  const auto cfg = default_config();
  const auto res = load_resources(cfg);
  for (auto _ : state) {
    std::ostringstream out;
    benchmark::DoNotOptimize(run_scenario(scenario, cfg, res, 1, out));
  }
}
BENCHMARK(BM_ScenarioRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
