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

// mascotd: scenario runner, live server and fuzzy calibration tool.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mascot/config.hpp"
#include "mascot/fuzzy_intent.hpp"
#include "mascot/scenario.hpp"
#include "mascot/system.hpp"
#ifdef MASCOT_HAVE_SERVER
#include "mascot/server.hpp"
#endif

namespace
{

struct ResourceFlags
{
  std::string config;
  std::string corpus;
  std::string rules;
  std::string keywords;

  void attach(CLI::App * app)
  {
    app->add_option("--config", config, "Config JSON (defaults are embedded)");
    app->add_option("--corpus", corpus, "Document corpus JSON");
    app->add_option("--rules", rules, "Fuzzy rule base JSON");
    app->add_option("--keywords", keywords, "Keyword dictionary JSON");
  }

  mascot::Config load() const
  {
    auto cfg = config.empty() ? mascot::default_config() : mascot::load_config(config);
    if (!corpus.empty()) {cfg.corpus_path = corpus;}
    if (!rules.empty()) {cfg.rules_path = rules;}
    if (!keywords.empty()) {cfg.keywords_path = keywords;}
    return cfg;
  }
};

int run_scenario_cmd(
  const ResourceFlags & res, const std::string & file, std::uint64_t seed,
  const std::string & out_path, std::uint64_t ticks)
{
  const auto config = res.load();
  const auto resources = mascot::load_resources(config);
  const auto scenario = mascot::load_scenario(file);
  // Serialize fully before touching the output so a failed run leaves no partial trace.
  std::ostringstream trace;
  const auto n = mascot::run_scenario(scenario, config, resources, seed, trace, ticks);
  if (out_path == "-") {
    std::cout << trace.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write trace '" + out_path + "'");
    }
    out << trace.str();
  }
  std::cerr << "mascotd: wrote " << n << " records (seed " << seed << ")\n";
  return 0;
}

int run_fuzzy_cmd(double c, double r, double i, const std::string & rules_path, std::size_t resolution)
{
  const auto rules = rules_path.empty() ? mascot::default_rulebase() : mascot::load_rulebase(rules_path);
  const double delta = mascot::infer_arousal_delta({c, r, i}, rules, resolution);
  std::cout.precision(17);
  std::cout << delta << '\n';
  return 0;
}

#ifdef MASCOT_HAVE_SERVER
int run_serve_cmd(const ResourceFlags & res, std::uint16_t port, std::uint64_t seed)
{
  const auto config = res.load();
  auto system = std::make_unique<mascot::MascotSystem>(
    config, mascot::load_resources(config), seed);
  mascot::Server server(std::move(system), {port, 64, true});
  server.start();
  std::cerr << "mascotd: serving on port " << server.port() << " (seed " << seed
            << ", tick " << config.tick_period_ms << " ms)\n";
  server.wait();
  std::cerr << "mascotd: shut down\n";
  return 0;
}
#endif

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Mascot robot system: eye-robot intent expression simulator"};
  app.require_subcommand(1);

  ResourceFlags scenario_res;
  std::string scenario_file;
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t ticks = 0;
  auto * scenario = app.add_subcommand("scenario", "Run a JSON Lines scenario and write a trace");
  scenario->add_option("--file", scenario_file, "Scenario file (JSON Lines)")->required();
  scenario->add_option("--seed", seed, "Seed for all randomness")->required();
  scenario->add_option("--out", out_path, "Trace output path, '-' for stdout")->required();
  scenario->add_option("--ticks", ticks, "Run length in ticks (default: through the last step)");
  scenario_res.attach(scenario);

  ResourceFlags serve_res;
  std::uint16_t port = 8080;
  std::uint64_t serve_seed = 1;
  auto * serve = app.add_subcommand("serve", "Serve GET /state and the /ws state stream");
  serve->add_option("--port", port, "TCP port")->capture_default_str();
  serve->add_option("--seed", serve_seed, "Seed for all randomness")->capture_default_str();
  serve_res.attach(serve);

  double c = 0.0;
  double r = 0.0;
  double i = 0.0;
  std::string rules_path;
  std::size_t resolution = mascot::kDefaultResolution;
  auto * fuzzy = app.add_subcommand("fuzzy", "Print the arousal delta for one intent signal");
  fuzzy->add_option("--c", c, "Certainty in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  fuzzy->add_option("--r", r, "Reliability in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  fuzzy->add_option("--i", i, "Importance in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  fuzzy->add_option("--rules", rules_path, "Fuzzy rule base JSON");
  fuzzy->add_option("--resolution", resolution, "Centroid sample count")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scenario) {
      return run_scenario_cmd(scenario_res, scenario_file, seed, out_path, ticks);
    }
    if (*fuzzy) {
      return run_fuzzy_cmd(c, r, i, rules_path, resolution);
    }
    if (*serve) {
#ifdef MASCOT_HAVE_SERVER
      return run_serve_cmd(serve_res, port, serve_seed);
#else
      std::cerr << "mascotd: built without server support\n";
      return 2;
#endif
    }
  } catch (const std::exception & e) {
    std::cerr << "mascotd: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
