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

#include "mascot/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "json_util.hpp"

namespace mascot
{

namespace
{

constexpr std::string_view kWhat = "config";

double number(const nlohmann::json & v, const std::string & path)
{
  return detail::as_number<ConfigError>(v, kWhat, path);
}

std::string resolve(const std::string & base_dir, const std::string & p)
{
  if (p.empty() || base_dir.empty() || std::filesystem::path(p).is_absolute()) {
    return p;
  }
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

Vec2 parse_vec2(const nlohmann::json & v, const std::string & path)
{
  if (!v.is_array() || v.size() != 2) {
    detail::field_error<ConfigError>(kWhat, path, "expected [x, y]");
  }
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

std::size_t count(const nlohmann::json & v, const std::string & path)
{
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    detail::field_error<ConfigError>(kWhat, path, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

void Config::validate() const
{
  const auto fail = [](const std::string & msg) {throw ConfigError("config: " + msg);};
  if (!(gains.presenter >= 0.0) || !(gains.ambient >= 0.0) ||
    !std::isfinite(gains.presenter) || !std::isfinite(gains.ambient))
  {
    fail("gains must be finite and >= 0");
  }
  if (!(tau > 0.0)) {fail("tau must be > 0");}
  if (!(d_max > 0.0)) {fail("d_max must be > 0");}
  if (!(alpha > 0.0 && alpha <= 1.0)) {fail("alpha must lie in (0, 1]");}
  if (k < 1) {fail("k must be >= 1");}
  if (!(speed > 0.0)) {fail("speed must be > 0");}
  if (tick_period_ms <= 0) {fail("tick_period_ms must be > 0");}
  if (resolution < kMinResolution) {fail("resolution must be >= 101");}
  if (!std::isfinite(gaze_height)) {fail("gaze_height must be finite");}
  if (robots.empty()) {fail("at least one robot is required");}
  std::set<std::string> ids;
  std::size_t mobile = 0;
  for (const auto & r : robots) {
    if (r.id.empty()) {fail("robot id must be non-empty");}
    if (!ids.insert(r.id).second) {fail("duplicate robot id '" + r.id + "'");}
    mobile += r.mobile ? 1 : 0;
  }
  if (mobile != 1) {fail("exactly one robot must be mobile");}
}

Config config_from_json(std::string_view text, const std::string & base_dir)
{
  const auto doc = detail::parse_json<ConfigError>(text, kWhat);
  if (!doc.is_object()) {
    detail::field_error<ConfigError>(kWhat, "$", "expected an object");
  }
  Config cfg;
  bool robots_given = false;
  for (const auto & [key, v] : doc.items()) {
    const std::string path = "$." + key;
    if (key == "gains") {
      if (!v.is_object()) {detail::field_error<ConfigError>(kWhat, path, "expected an object");}
      for (const auto & [gk, gv] : v.items()) {
        if (gk == "presenter") {
          cfg.gains.presenter = number(gv, path + ".presenter");
        } else if (gk == "ambient") {
          cfg.gains.ambient = number(gv, path + ".ambient");
        } else {
          detail::field_error<ConfigError>(kWhat, path + "." + gk, "unknown key");
        }
      }
    } else if (key == "tau") {
      cfg.tau = number(v, path);
    } else if (key == "d_max") {
      cfg.d_max = number(v, path);
    } else if (key == "alpha") {
      cfg.alpha = number(v, path);
    } else if (key == "k") {
      cfg.k = count(v, path);
    } else if (key == "speed") {
      cfg.speed = number(v, path);
    } else if (key == "tick_period_ms") {
      cfg.tick_period_ms = static_cast<int>(count(v, path));
    } else if (key == "resolution") {
      cfg.resolution = count(v, path);
    } else if (key == "gaze_height") {
      cfg.gaze_height = number(v, path);
    } else if (key == "corpus") {
      cfg.corpus_path = resolve(base_dir, detail::as_string<ConfigError>(v, kWhat, path));
    } else if (key == "rules") {
      cfg.rules_path = resolve(base_dir, detail::as_string<ConfigError>(v, kWhat, path));
    } else if (key == "keywords") {
      cfg.keywords_path = resolve(base_dir, detail::as_string<ConfigError>(v, kWhat, path));
    } else if (key == "robots") {
      robots_given = true;
      if (!v.is_array()) {detail::field_error<ConfigError>(kWhat, path, "expected an array");}
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        const auto & r = v[i];
        if (!r.is_object()) {detail::field_error<ConfigError>(kWhat, rp, "expected an object");}
        RobotConfig rc;
        rc.id = detail::as_string<ConfigError>(
          detail::require<ConfigError>(r, "id", kWhat, rp), kWhat, rp + ".id");
        rc.position = parse_vec2(detail::require<ConfigError>(r, "pos", kWhat, rp), rp + ".pos");
        for (const auto & [rk, rv] : r.items()) {
          if (rk == "mobile") {
            if (!rv.is_boolean()) {
              detail::field_error<ConfigError>(kWhat, rp + ".mobile", "expected a boolean");
            }
            rc.mobile = rv.get<bool>();
          } else if (rk == "heading") {
            rc.heading = number(rv, rp + ".heading");
          } else if (rk != "id" && rk != "pos") {
            detail::field_error<ConfigError>(kWhat, rp + "." + rk, "unknown key");
          }
        }
        cfg.robots.push_back(std::move(rc));
      }
    } else {
      detail::field_error<ConfigError>(kWhat, path, "unknown key");
    }
  }
  if (!robots_given) {
    cfg.robots = default_config().robots;
  }
  cfg.validate();
  return cfg;
}

Config default_config()
{
  static const Config cfg = [] {
      // The embedded document always lists robots, so this does not recurse.
      return config_from_json(embedded_config_json());
    }();
  return cfg;
}

std::string read_text_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Config load_config(const std::string & path)
{
  const auto dir = std::filesystem::path(path).parent_path().string();
  return config_from_json(read_text_file(path), dir);
}

Resources load_resources(const Config & config)
{
  const auto load = [](const std::string & path, std::string_view embedded, auto parse) {
      if (path.empty()) {
        return parse(embedded);
      }
      if (!std::filesystem::exists(path)) {
        throw ConfigError("resource file '" + path + "' does not exist");
      }
      return parse(std::string_view(read_text_file(path)));
    };
  Resources res;
  res.rules = load(config.rules_path, embedded_rules_json(), rulebase_from_json);
  res.keywords = load(config.keywords_path, embedded_keywords_json(), keywords_from_json);
  res.corpus = load(config.corpus_path, embedded_corpus_json(), corpus_from_json);
  if (res.corpus.empty()) {
    throw ConfigError("corpus must contain at least one document");
  }
  return res;
}

}  // namespace mascot
