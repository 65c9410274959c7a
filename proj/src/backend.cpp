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

#include "backend.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "error.hpp"
#include "rng.hpp"

namespace syntex {

using nlohmann::json;

std::string LocalBackend::id() const {
  return "local-ngram-order" + std::to_string(model_->order());
}

std::string LocalBackend::complete(const std::string& prompt,
                                   const SamplingParams& params) const {
  params.validate();
  Rng rng(params.seed);
  TokenSequence context = tokenize(prompt, lowercase_);
  TokenSequence emitted;
  for (int step = 0; step < params.max_tokens; ++step) {
    Distribution dist = model_->next_token_distribution(context);
    dist.erase(NGramModel::kUnk);
    double sum = 0.0;
    for (const auto& [tok, p] : dist) sum += p;
    if (sum <= 0.0) break;
    for (auto& [tok, p] : dist) p /= sum;
    const std::string token = sample_next(dist, params, rng);
    if (token == NGramModel::kEos) break;
    emitted.push_back(token);
    context.push_back(token);
  }
  return detokenize(emitted);
}

RemoteBackend::RemoteBackend(std::string base_url, std::string model_name)
    : base_url_(std::move(base_url)), model_name_(std::move(model_name)) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

std::string RemoteBackend::id() const { return "remote:" + model_name_; }

namespace {

int retry_base_ms() {
  // Test hook; the contract default is 500 ms.
  if (const char* env = std::getenv("SYNTEX_BACKEND_RETRY_MS")) {
    const int v = std::atoi(env);
    if (v >= 0) return v;
  }
  return 500;
}

}  // namespace

std::string RemoteBackend::complete(const std::string& prompt,
                                    const SamplingParams& params) const {
  params.validate();
  json body;
  body["model"] = model_name_;
  body["prompt"] = prompt;
  body["max_tokens"] = params.max_tokens;
  body["temperature"] = params.temperature;
  body["top_k"] = params.top_k ? json(*params.top_k) : json(nullptr);
  body["top_p"] = params.top_p ? json(*params.top_p) : json(nullptr);
  body["seed"] = json(params.seed);
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (const char* token = std::getenv("SYNTEX_BACKEND_TOKEN")) {
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }

  std::string last_failure = "no attempt made";
  const int base_ms = retry_base_ms();
  for (int attempt = 0; attempt <= 3; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(base_ms << (attempt - 1)));
    }
    httplib::Client client(base_url_);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(60, 0);
    auto res = client.Post("/v1/complete", headers, payload, "application/json");
    if (!res) {
      last_failure = "connection failed";
      continue;
    }
    if (res->status != 200) {
      last_failure = "HTTP status " + std::to_string(res->status);
      continue;
    }
    try {
      json reply = json::parse(res->body);
      return reply.at("text").get<std::string>();
    } catch (const json::exception& e) {
      last_failure = std::string("malformed response: ") + e.what();
    }
  }
  throw Error::backend("BackendUnavailable",
                       base_url_ + "/v1/complete: " + last_failure);
}

namespace {

std::string format_gamma(const SamplingParams& params, Document& doc) {
  doc.meta["temperature"] = format_double(params.temperature);
  doc.meta["top_k"] = params.top_k ? std::to_string(*params.top_k) : "null";
  doc.meta["top_p"] = params.top_p ? format_double(*params.top_p) : "null";
  doc.meta["max_tokens"] = std::to_string(params.max_tokens);
  doc.meta["seed"] = std::to_string(params.seed);
  return doc.meta["seed"];
}

}  // namespace

Document generate(const GenerationBackend& backend, const TokenSequence& prompt,
                  const SamplingParams& params, const DisclaimerInfo& disclaimer,
                  const std::string& prompt_id, const std::string& doc_id,
                  const std::optional<std::string>& label) {
  params.validate();
  Document doc;
  doc.provenance = Provenance::synthetic;
  doc.text = backend.complete(detokenize(prompt), params);
  doc.id = doc_id.empty() ? "gen-" + std::to_string(params.seed) : doc_id;
  doc.meta["backend"] = backend.id();
  doc.meta["prompt_id"] = prompt_id;
  format_gamma(params, doc);
  if (label) {
    doc.label = label;
    doc.meta["label_source"] = "prompt";
  }
  return apply_disclaimer(doc, disclaimer.tmpl, disclaimer.author,
                          disclaimer.contact, disclaimer.purpose);
}

Corpus generate_batch(const GenerationBackend& backend,
                      const std::vector<PromptInstance>& prompts,
                      const SamplingParams& params, int count_per_prompt,
                      const DisclaimerInfo& disclaimer) {
  params.validate();
  if (count_per_prompt < 1) {
    throw Error::validation("InvalidCount", "count_per_prompt must be >= 1");
  }
  Corpus corpus;
  corpus.name = "generated";
  for (size_t p = 0; p < prompts.size(); ++p) {
    const PromptInstance& inst = prompts[p];
    const std::string instance_id = inst.template_id + "#" + std::to_string(p);
    for (int r = 0; r < count_per_prompt; ++r) {
      SamplingParams doc_params = params;
      doc_params.seed =
          params.seed ^ fnv1a_u64(static_cast<uint64_t>(r), fnv1a(instance_id));
      const std::string doc_id =
          instance_id + "-" + std::to_string(r);
      Document doc = generate(backend, tokenize(inst.filled_text), doc_params,
                              disclaimer, instance_id, doc_id, label_of(inst));
      corpus.documents.push_back(std::move(doc));
    }
  }
  validate_corpus(corpus);
  return corpus;
}

}  // namespace syntex
