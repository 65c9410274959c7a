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

#ifndef SYNTEX_SAMPLING_HPP
#define SYNTEX_SAMPLING_HPP

#include <cstdint>
#include <optional>

#include "ngram.hpp"
#include "rng.hpp"

namespace syntex {

// Generation knobs. temperature == 0 means greedy decoding.
struct SamplingParams {
  double temperature = 1.0;
  std::optional<int> top_k;
  std::optional<double> top_p;
  uint64_t seed = 0;
  int max_tokens = 64;

  // Throws InvalidSamplingParams on out-of-range values.
  void validate() const;
};

// temperature == 0 collapses to a one-hot argmax (ties broken by
// lexicographically smallest token); otherwise p_i' propto p_i^(1/T).
Distribution apply_temperature(const Distribution& dist, double temperature);

// Keeps the k highest-probability tokens (ties by token order), renormalized.
Distribution apply_top_k(const Distribution& dist, int k);

// Keeps the smallest descending-probability prefix with cumulative mass >= p
// (the crossing token included), renormalized.
Distribution apply_top_p(const Distribution& dist, double p);

// Fixed transform order: temperature, then top_k, then top_p.
Distribution apply_transforms(const Distribution& dist, const SamplingParams& params);

// One categorical draw after the transform pipeline.
std::string sample_next(const Distribution& dist, const SamplingParams& params,
                        Rng& rng);

}  // namespace syntex

#endif  // SYNTEX_SAMPLING_HPP
