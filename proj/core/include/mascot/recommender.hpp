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

#ifndef MASCOT__RECOMMENDER_HPP_
#define MASCOT__RECOMMENDER_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mascot/dialog_pipeline.hpp"

namespace mascot
{

constexpr std::size_t kDefaultResultCount = 3;

struct Document
{
  std::string id;
  std::string title;
  std::map<std::string, double> topics;
  std::string body;
};

struct Recommendation
{
  std::string doc;
  int rank{1};
  double reliability{0.0};
  double importance{1.0};
};

/// Throws std::invalid_argument unless the document has an id and at least
/// one positive, finite topic weight.
void validate_document(const Document & doc);

std::vector<Document> corpus_from_json(std::string_view text);
std::vector<Document> load_corpus(const std::string & path);

/// Cosine similarity over the union of topics; 0 when either side is all zero.
double cosine_similarity(
  const std::map<std::string, double> & lhs, const std::map<std::string, double> & rhs);

/// 1 - (rank - 1) / k. Throws std::out_of_range unless 1 <= rank <= k.
double importance_from_rank(int rank, int k);

/// Top-k documents by reliability (ties by ascending id), ranked 1..k with
/// rank-derived importance. Returns min(k, corpus size) entries.
std::vector<Recommendation> rank(
  const InterestProfile & profile, const std::vector<Document> & corpus,
  std::size_t k = kDefaultResultCount);

}  // namespace mascot

#endif  // MASCOT__RECOMMENDER_HPP_
