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

#ifndef SYNTEX_NGRAM_HPP
#define SYNTEX_NGRAM_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "text.hpp"

namespace syntex {

// Next-token probabilities keyed by token. std::map keeps token order
// lexicographic, which fixes every tie-break in the sampler.
using Distribution = std::map<std::string, double>;

// Order-k backoff language model with absolute discounting.
//
// Counts are kept for every context length 0..order-1. A context with mass
// predicts p(w|ctx) = max(c(ctx,w)-D, 0)/c(ctx) + lambda(ctx) * p(w|ctx'),
// where ctx' drops the leftmost token and lambda is the exact leftover mass;
// a context with no mass backs off entirely. The recursion bottoms out at a
// uniform distribution over the vocabulary, so every probability is strictly
// positive when D > 0. Counts are reals: adaptation produces fractional mass.
//
// Documents are independent units, padded with order-1 BOS markers and
// terminated with EOS. Reserved markers are injected here, never by the
// tokenizer (they contain punctuation the tokenizer would split, so user
// text cannot collide with them).
//
// Models are immutable after construction; concurrent reads are safe.
class NGramModel {
 public:
  static constexpr const char* kBos = "<s>";
  static constexpr const char* kEos = "</s>";
  static constexpr const char* kUnk = "<unk>";

  using ContextKey = std::vector<std::string>;
  struct ContextCounts {
    double total = 0.0;
    std::map<std::string, double> tokens;
  };
  using CountTable = std::map<ContextKey, ContextCounts>;

  // Empirical counts with discount smoothing. Throws EmptyCorpus.
  static NGramModel train(const Corpus& corpus, int order, double discount,
                          bool lowercase = false);

  // Count interpolation: both tables normalized to equal total mass, mixed
  // with weight mu on the adaptation side, then rescaled to the interpolated
  // raw mass. mu=0 and mu=1 return exact copies of the respective tables.
  // Throws OrderMismatch, EmptyCorpus.
  static NGramModel adapt(const NGramModel& base, const Corpus& adaptation,
                          double mix_weight, bool lowercase = false);

  // Uses only the last order-1 tokens; shorter contexts are BOS-padded.
  // Unknown tokens in the context are mapped to UNK before lookup.
  Distribution next_token_distribution(const TokenSequence& context) const;

  // exp(mean negative log-probability per token, EOS included).
  // Throws ZeroProbability when an unseen event has probability zero.
  double perplexity(const Corpus& corpus, bool lowercase = false) const;

  void save(const std::string& path) const;
  static NGramModel load(const std::string& path);

  int order() const { return order_; }
  double discount() const { return discount_; }
  const std::set<std::string>& vocab() const { return vocab_; }
  const CountTable& counts() const { return counts_; }
  // Sum of counts over the whole table (all context lengths).
  double total_mass() const;

 private:
  NGramModel(int order, double discount) : order_(order), discount_(discount) {}

  void count_document(const TokenSequence& tokens);
  void finalize_totals();
  Distribution distribution_for(const ContextKey& ctx) const;

  int order_ = 1;
  double discount_ = 0.0;
  CountTable counts_;
  std::set<std::string> vocab_;  // predictable tokens: seen + EOS + UNK
};

}  // namespace syntex

#endif  // SYNTEX_NGRAM_HPP
