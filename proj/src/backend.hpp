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

#ifndef SYNTEX_BACKEND_HPP
#define SYNTEX_BACKEND_HPP

#include <memory>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ngram.hpp"
#include "prompts.hpp"
#include "sampling.hpp"

namespace syntex {

// A completion source. Local backends apply the sampling params themselves;
// remote backends receive them verbatim and are trusted to apply them.
class GenerationBackend {
 public:
  virtual ~GenerationBackend() = default;
  virtual std::string id() const = 0;
  // Continuation text for a prompt (prompt excluded from the result).
  virtual std::string complete(const std::string& prompt,
                               const SamplingParams& params) const = 0;
};

class LocalBackend final : public GenerationBackend {
 public:
  explicit LocalBackend(std::shared_ptr<const NGramModel> model,
                        bool lowercase = false)
      : model_(std::move(model)), lowercase_(lowercase) {}

  std::string id() const override;
  // Samples token by token until EOS or max_tokens. Reserved markers are
  // never emitted: UNK is dropped from each step's distribution (mass
  // renormalized) and EOS terminates generation.
  std::string complete(const std::string& prompt,
                       const SamplingParams& params) const override;

  const NGramModel& model() const { return *model_; }

 private:
  std::shared_ptr<const NGramModel> model_;
  bool lowercase_;
};

// HTTP client for the completion protocol:
//   POST <base>/v1/complete
//   {"model", "prompt", "max_tokens", "temperature", "top_k", "top_p", "seed"}
//   -> {"text": string}
// Non-200 or malformed responses raise BackendUnavailable after 3 retries
// with exponential backoff starting at 500 ms. The bearer token comes from
// the SYNTEX_BACKEND_TOKEN environment variable.
class RemoteBackend final : public GenerationBackend {
 public:
  RemoteBackend(std::string base_url, std::string model_name);

  std::string id() const override;
  std::string complete(const std::string& prompt,
                       const SamplingParams& params) const override;

 private:
  std::string base_url_;
  std::string model_name_;
};

// Fields substituted into the disclaimer template for generated documents.
struct DisclaimerInfo {
  std::string tmpl = kDefaultDisclaimerTemplate;
  std::string author = "syntex";
  std::string contact = "syntex@localhost";
  std::string purpose = "train models on synthetic text";
};

// One synthetic document. Every returned document carries a disclaimer and
// meta entries for the backend id, sampling params, seed and prompt id.
Document generate(const GenerationBackend& backend, const TokenSequence& prompt,
                  const SamplingParams& params,
                  const DisclaimerInfo& disclaimer = {},
                  const std::string& prompt_id = "", const std::string& doc_id = "",
                  const std::optional<std::string>& label = {});

// count_per_prompt documents per instance. Per-document seeds are
// params.seed XOR hash(prompt instance id, replica index), where the
// instance id is positional ("<template_id>#<position>"), so duplicate
// instances still get distinct seeds and output is schedule-independent.
// Prompt intended labels are copied into Document.label with
// meta.label_source = "prompt".
Corpus generate_batch(const GenerationBackend& backend,
                      const std::vector<PromptInstance>& prompts,
                      const SamplingParams& params, int count_per_prompt,
                      const DisclaimerInfo& disclaimer = {});

}  // namespace syntex

#endif  // SYNTEX_BACKEND_HPP
