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
//
// Copyright 2026 The syntex authors.

#include "features.hpp"

#include <cmath>
#include <set>

#include "error.hpp"
#include "text.hpp"

namespace syntex {

std::vector<std::string> FeatureSpace::terms_of(const std::string& text,
                                                const FeatureConfig& config) {
  const TokenSequence tokens = tokenize(text, config.lowercase);
  std::vector<std::string> terms(tokens.begin(), tokens.end());
  if (config.bigrams) {
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
      terms.push_back(tokens[i] + " " + tokens[i + 1]);
    }
  }
  return terms;
}

FeatureSpace FeatureSpace::fit(const Corpus& corpus, const FeatureConfig& config) {
  if (corpus.empty()) {
    throw Error::data("EmptyCorpus", "cannot fit features on an empty corpus");
  }
  std::map<std::string, int> df;
  for (const Document& doc : corpus.documents) {
    std::set<std::string> seen;
    for (const std::string& term : terms_of(doc.text, config)) {
      seen.insert(term);
    }
    for (const std::string& term : seen) df[term] += 1;
  }
  const double n_docs = static_cast<double>(corpus.size());
  std::map<std::string, size_t> vocabulary;
  std::vector<double> idf;
  for (const auto& [term, count] : df) {
    if (count < config.min_df) continue;
    vocabulary[term] = idf.size();
    idf.push_back(std::log((1.0 + n_docs) / (1.0 + count)) + 1.0);
  }
  return FeatureSpace(std::move(vocabulary), std::move(idf), config);
}

SparseVector FeatureSpace::vectorize(const std::string& text) const {
  std::map<size_t, double> tf;
  for (const std::string& term : terms_of(text, config_)) {
    auto it = vocabulary_.find(term);
    if (it != vocabulary_.end()) tf[it->second] += 1.0;
  }
  SparseVector vec;
  vec.reserve(tf.size());
  double norm_sq = 0.0;
  for (const auto& [col, count] : tf) {
    const double v = count * idf_[col];
    vec.emplace_back(col, v);
    norm_sq += v * v;
  }
  if (norm_sq > 0.0) {
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& [col, v] : vec) v *= inv;
  }
  return vec;
}

}  // namespace syntex
