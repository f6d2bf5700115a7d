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

#ifndef MASCOT__SRC__JSON_UTIL_HPP_
#define MASCOT__SRC__JSON_UTIL_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace mascot::detail
{

// 1-based line of a byte offset.
inline std::size_t line_of(std::string_view text, std::size_t byte)
{
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {++line;}
  }
  return line;
}

// Parses or throws Error("<what>: line N: <reason>").
template<typename Error>
nlohmann::json parse_json(std::string_view text, std::string_view what)
{
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error & e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(
      std::string(what) + ": line " + std::to_string(line_of(text, byte)) +
      ": malformed JSON (" + e.what() + ")");
  }
}

template<typename Error>
[[noreturn]] void field_error(std::string_view what, const std::string & path, std::string_view why)
{
  throw Error(std::string(what) + ": field " + path + ": " + std::string(why));
}

template<typename Error>
const nlohmann::json & require(
  const nlohmann::json & obj, const char * key, std::string_view what, const std::string & path)
{
  auto it = obj.find(key);
  if (it == obj.end()) {
    field_error<Error>(what, path + "." + key, "missing");
  }
  return *it;
}

template<typename Error>
double as_number(const nlohmann::json & v, std::string_view what, const std::string & path)
{
  if (!v.is_number()) {
    field_error<Error>(what, path, "expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    field_error<Error>(what, path, "expected a finite number");
  }
  return d;
}

template<typename Error>
std::string as_string(const nlohmann::json & v, std::string_view what, const std::string & path)
{
  if (!v.is_string()) {
    field_error<Error>(what, path, "expected a string");
  }
  return v.get<std::string>();
}

}  // namespace mascot::detail

#endif  // MASCOT__SRC__JSON_UTIL_HPP_
