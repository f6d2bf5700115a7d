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

#include "mascot/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json_util.hpp"

namespace mascot
{

void validate_document(const Document & doc)
{
  if (doc.id.empty()) {
    throw std::invalid_argument("document id must be non-empty");
  }
  bool positive = false;
  for (const auto & [topic, w] : doc.topics) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("document '" + doc.id + "': topic weights must be finite and >= 0");
    }
    positive = positive || w > 0.0;
  }
  if (!positive) {
    throw std::invalid_argument("document '" + doc.id + "': needs a positive topic weight");
  }
}

std::vector<Document> corpus_from_json(std::string_view text)
{
  using Error = std::runtime_error;
  constexpr std::string_view what = "corpus";
  const auto doc = detail::parse_json<Error>(text, what);
  if (!doc.is_array()) {
    detail::field_error<Error>(what, "$", "expected an array of documents");
  }
  std::vector<Document> corpus;
  std::set<std::string> ids;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const std::string path = "$[" + std::to_string(k) + "]";
    const auto & j = doc[k];
    if (!j.is_object()) {
      detail::field_error<Error>(what, path, "expected an object");
    }
    Document d;
    d.id = detail::as_string<Error>(detail::require<Error>(j, "id", what, path), what, path + ".id");
    if (auto it = j.find("title"); it != j.end()) {
      d.title = detail::as_string<Error>(*it, what, path + ".title");
    }
    if (auto it = j.find("body"); it != j.end()) {
      d.body = detail::as_string<Error>(*it, what, path + ".body");
    }
    const auto & topics = detail::require<Error>(j, "topics", what, path);
    if (!topics.is_object()) {
      detail::field_error<Error>(what, path + ".topics", "expected an object");
    }
    for (const auto & [topic, w] : topics.items()) {
      d.topics[topic] = detail::as_number<Error>(w, what, path + ".topics." + topic);
    }
    try {
      validate_document(d);
    } catch (const std::invalid_argument & e) {
      detail::field_error<Error>(what, path, e.what());
    }
    if (!ids.insert(d.id).second) {
      detail::field_error<Error>(what, path + ".id", "duplicate document id '" + d.id + "'");
    }
    corpus.push_back(std::move(d));
  }
  return corpus;
}

std::vector<Document> load_corpus(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("corpus: cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return corpus_from_json(ss.str());
}

double cosine_similarity(
  const std::map<std::string, double> & lhs, const std::map<std::string, double> & rhs)
{
  // Topics missing on one side contribute zero to the dot product, so only
  // the shared keys matter there; the norms run over each side's own keys.
  double dot = 0.0;
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() && b != rhs.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      dot += a->second * b->second;
      ++a;
      ++b;
    }
  }
  const auto norm = [](const std::map<std::string, double> & v) {
      double s = 0.0;
      for (const auto & [k, w] : v) {s += w * w;}
      return std::sqrt(s);
    };
  const double denom = norm(lhs) * norm(rhs);
  if (denom == 0.0) {
    return 0.0;
  }
  return std::clamp(dot / denom, 0.0, 1.0);
}

double importance_from_rank(int rank, int k)
{
  if (k < 1 || rank < 1 || rank > k) {
    throw std::out_of_range(
      "rank " + std::to_string(rank) + " outside 1.." + std::to_string(k));
  }
  return 1.0 - static_cast<double>(rank - 1) / static_cast<double>(k);
}

std::vector<Recommendation> rank(
  const InterestProfile & profile, const std::vector<Document> & corpus, std::size_t k)
{
  if (corpus.empty()) {
    throw std::invalid_argument("cannot rank an empty corpus");
  }
  if (k < 1) {
    throw std::invalid_argument("result count k must be >= 1");
  }
  std::vector<double> reliability(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    reliability[d] = cosine_similarity(profile.weights, corpus[d].topics);
  }
  std::vector<std::size_t> order(corpus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      if (reliability[l] != reliability[r]) {
        return reliability[l] > reliability[r];
      }
      return corpus[l].id < corpus[r].id;
    });

  const int count = static_cast<int>(std::min(k, corpus.size()));
  std::vector<Recommendation> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int r = 1; r <= count; ++r) {
    const std::size_t d = order[static_cast<std::size_t>(r - 1)];
    out.push_back({corpus[d].id, r, reliability[d], importance_from_rank(r, count)});
  }
  return out;
}

}  // namespace mascot
