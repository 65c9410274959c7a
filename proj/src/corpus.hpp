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

#ifndef SYNTEX_CORPUS_HPP
#define SYNTEX_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "text.hpp"

namespace syntex {

enum class Provenance { real, synthetic };

// Token-indexed annotation span: [start, end) with a type tag.
struct Span {
  int start = 0;
  int end = 0;  // exclusive
  std::string tag;

  bool operator==(const Span&) const = default;
};

// One text unit. Immutable by convention: build new values instead of
// mutating shared ones.
struct Document {
  std::string id;
  std::string text;
  std::optional<std::string> label;
  std::optional<std::vector<Span>> spans;
  Provenance provenance = Provenance::real;
  std::optional<std::string> disclaimer;
  std::map<std::string, std::string> meta;

  bool operator==(const Document&) const = default;

  bool is_synthetic() const { return provenance == Provenance::synthetic; }
};

struct Corpus {
  std::string name;
  std::vector<Document> documents;

  size_t size() const { return documents.size(); }
  bool empty() const { return documents.empty(); }
};

// Every synthetic document must carry a non-empty disclaimer, and spans
// must be valid for the document's token count. Throws MissingDisclaimer /
// InvalidSpan / DuplicateId.
void validate_document(const Document& doc);
void validate_corpus(const Corpus& corpus);

// JSONL persistence. Field set is fixed; unknown fields are rejected.
// Both directions enforce the disclaimer policy.
Corpus load_jsonl(const std::string& path);
void save_jsonl(const Corpus& corpus, const std::string& path);

// (De)serialization of a single document; line_no only affects messages.
Document document_from_json_line(const std::string& line, size_t line_no);
std::string document_to_json_line(const Document& doc);

inline constexpr const char* kDefaultDisclaimerTemplate =
    "SYNTHETIC TEXT! Do not trust the factual content of this text. "
    "Generated by {author}, {contact} to {purpose}.";

// Fills {author},{contact},{purpose} into the template and returns a copy of
// the document with the disclaimer set. Throws NotSynthetic for real docs.
Document apply_disclaimer(const Document& doc, const std::string& tmpl,
                          const std::string& author, const std::string& contact,
                          const std::string& purpose);

// Display form: synthetic documents are prefixed with "[SYNTH] ".
std::string render_marked(const Document& doc);

}  // namespace syntex

#endif  // SYNTEX_CORPUS_HPP
