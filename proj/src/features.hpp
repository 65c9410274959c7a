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

#ifndef SYNTEX_FEATURES_HPP
#define SYNTEX_FEATURES_HPP

#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"

namespace syntex {

struct FeatureConfig {
  bool bigrams = true;     // unigrams always on
  bool lowercase = true;   // featurizer-level, independent of corpus casing
  int min_df = 2;          // document frequency threshold
};

// Sparse feature vector: (column, value) sorted by column.
using SparseVector = std::vector<std::pair<size_t, double>>;

// TF-IDF vector space with smoothed idf = ln((1+N)/(1+df)) + 1 and
// per-document L2 normalization. Only a document's `text` field is ever
// read: disclaimers and meta stay invisible to downstream models.
class FeatureSpace {
 public:
  static FeatureSpace fit(const Corpus& corpus, const FeatureConfig& config = {});

  SparseVector vectorize(const std::string& text) const;

  size_t dim() const { return idf_.size(); }
  const std::map<std::string, size_t>& vocabulary() const { return vocabulary_; }
  const std::vector<double>& idf() const { return idf_; }
  const FeatureConfig& config() const { return config_; }

  // Terms of a single text under this configuration (unigrams + bigrams).
  static std::vector<std::string> terms_of(const std::string& text,
                                           const FeatureConfig& config);

  FeatureSpace() = default;
  FeatureSpace(std::map<std::string, size_t> vocabulary, std::vector<double> idf,
               FeatureConfig config)
      : vocabulary_(std::move(vocabulary)), idf_(std::move(idf)), config_(config) {}

 private:
  std::map<std::string, size_t> vocabulary_;  // term -> dense column
  std::vector<double> idf_;
  FeatureConfig config_;
};

}  // namespace syntex

#endif  // SYNTEX_FEATURES_HPP
