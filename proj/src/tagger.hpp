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

#ifndef SYNTEX_TAGGER_HPP
#define SYNTEX_TAGGER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "text.hpp"

namespace syntex {

struct TaggedSequence {
  TokenSequence tokens;
  std::vector<std::string> bio_tags;  // O, B-<T>, I-<T>
};

// BIO tags for a document's tokens from its span annotations (missing spans
// mean all-O). Throws InvalidSpan via corpus validation rules.
TaggedSequence tagged_sequence_of(const Document& doc);

std::vector<Span> spans_from_bio(const std::vector<std::string>& bio_tags);
std::vector<std::string> bio_from_spans(size_t n_tokens,
                                        const std::vector<Span>& spans);

// Averaged perceptron over greedy left-to-right decoding. Features per
// position: token, lowercased token, previous token, next token, previous
// tag, token shape. Ties prefer O, then the lexicographically smaller tag,
// so a zero-weight tagger predicts all O.
class PerceptronTagger {
 public:
  // Documents without spans count as negative examples. Throws NoSpans when
  // the corpus has no spans at all.
  static PerceptronTagger train(const Corpus& corpus, int epochs, uint64_t seed);

  // Greedy decode; invalid I- tags are repaired to B- afterwards, so output
  // is always valid BIO.
  TaggedSequence tag(const TokenSequence& tokens) const;

  // Copy of the corpus with predicted spans on every document.
  Corpus tag_corpus(const Corpus& corpus) const;

  void save(const std::string& path) const;
  static PerceptronTagger load(const std::string& path);

  const std::set<std::string>& tag_set() const { return tags_; }
  const std::map<std::string, std::map<std::string, double>>& weights() const {
    return weights_;
  }

  PerceptronTagger() = default;

 private:
  std::string predict_one(const TokenSequence& tokens, size_t i,
                          const std::string& prev_tag) const;

  std::map<std::string, std::map<std::string, double>> weights_;
  std::set<std::string> tags_;  // includes "O"
  int epochs_ = 0;
  uint64_t seed_ = 0;
};

struct SpanScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Exact (start, end, type) matching. With zero predicted spans precision is
// 0 unless gold is also empty, in which case all three scores are 1.
// Throws AlignmentMismatch on length disagreements.
SpanScores span_f1(const std::vector<TaggedSequence>& pred,
                   const std::vector<TaggedSequence>& gold);

// Convenience over two span-annotated corpora (scorer CLI path).
SpanScores span_f1(const Corpus& pred, const Corpus& gold);

}  // namespace syntex

#endif  // SYNTEX_TAGGER_HPP
