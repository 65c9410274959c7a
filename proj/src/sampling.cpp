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

#include "sampling.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace syntex {

void SamplingParams::validate() const {
  if (temperature < 0.0 || !std::isfinite(temperature)) {
    throw Error::validation("InvalidSamplingParams",
                            "temperature must be >= 0");
  }
  if (top_k && *top_k < 1) {
    throw Error::validation("InvalidSamplingParams", "top_k must be >= 1");
  }
  if (top_p && (*top_p <= 0.0 || *top_p > 1.0)) {
    throw Error::validation("InvalidSamplingParams",
                            "top_p must be in (0, 1]");
  }
  if (max_tokens < 1) {
    throw Error::validation("InvalidSamplingParams", "max_tokens must be >= 1");
  }
}

namespace {

Distribution renormalize(Distribution dist) {
  double sum = 0.0;
  for (const auto& [tok, p] : dist) sum += p;
  if (sum > 0.0) {
    for (auto& [tok, p] : dist) p /= sum;
  }
  return dist;
}

// Entries sorted by descending probability, ties by token order.
std::vector<std::pair<std::string, double>> sorted_desc(const Distribution& dist) {
  std::vector<std::pair<std::string, double>> items(dist.begin(), dist.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return items;
}

}  // namespace

Distribution apply_temperature(const Distribution& dist, double temperature) {
  if (dist.empty()) return dist;
  if (temperature == 0.0) {
    auto best = dist.begin();
    for (auto it = dist.begin(); it != dist.end(); ++it) {
      if (it->second > best->second) best = it;  // map order breaks ties low
    }
    return {{best->first, 1.0}};
  }
  if (temperature == 1.0) return dist;

  double max_log = -HUGE_VAL;
  for (const auto& [tok, p] : dist) {
    if (p > 0.0) max_log = std::max(max_log, std::log(p));
  }
  Distribution out;
  for (const auto& [tok, p] : dist) {
    if (p > 0.0) {
      out[tok] = std::exp((std::log(p) - max_log) / temperature);
    }
  }
  return renormalize(std::move(out));
}

Distribution apply_top_k(const Distribution& dist, int k) {
  if (k < 1) throw Error::validation("InvalidSamplingParams", "top_k must be >= 1");
  if (static_cast<size_t>(k) >= dist.size()) return dist;
  auto items = sorted_desc(dist);
  Distribution out;
  for (int i = 0; i < k; ++i) out[items[i].first] = items[i].second;
  return renormalize(std::move(out));
}

Distribution apply_top_p(const Distribution& dist, double p) {
  if (p <= 0.0 || p > 1.0) {
    throw Error::validation("InvalidSamplingParams", "top_p must be in (0, 1]");
  }
  if (p == 1.0) return dist;
  auto items = sorted_desc(dist);
  Distribution out;
  double cum = 0.0;
  for (const auto& [tok, prob] : items) {
    out[tok] = prob;
    cum += prob;
    if (cum >= p) break;
  }
  return renormalize(std::move(out));
}

Distribution apply_transforms(const Distribution& dist, const SamplingParams& params) {
  Distribution out = apply_temperature(dist, params.temperature);
  if (params.top_k) out = apply_top_k(out, *params.top_k);
  if (params.top_p) out = apply_top_p(out, *params.top_p);
  return out;
}

std::string sample_next(const Distribution& dist, const SamplingParams& params,
                        Rng& rng) {
  Distribution shaped = apply_transforms(dist, params);
  if (shaped.empty()) {
    throw Error::data("EmptyDistribution", "cannot sample from empty distribution");
  }
  const double u = rng.next_double();
  double cum = 0.0;
  for (const auto& [tok, p] : shaped) {
    cum += p;
    if (u < cum) return tok;
  }
  return shaped.rbegin()->first;  // floating-point slack
}

}  // namespace syntex
