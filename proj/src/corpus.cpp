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

#include "corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

namespace syntex {

using nlohmann::json;

void validate_document(const Document& doc) {
  if (doc.id.empty()) {
    throw Error::data("InvalidDocument", "document has empty id");
  }
  if (doc.is_synthetic() && (!doc.disclaimer || doc.disclaimer->empty())) {
    throw Error::data("MissingDisclaimer",
                      "synthetic document '" + doc.id + "' has no disclaimer");
  }
  if (doc.spans) {
    const int n_tokens = static_cast<int>(tokenize(doc.text).size());
    std::vector<Span> sorted = *doc.spans;
    std::sort(sorted.begin(), sorted.end(),
              [](const Span& a, const Span& b) { return a.start < b.start; });
    int prev_end = 0;
    for (const Span& s : sorted) {
      if (s.start < 0 || s.end > n_tokens || s.start >= s.end) {
        throw Error::data("InvalidSpan",
                          "document '" + doc.id + "' span [" +
                              std::to_string(s.start) + "," +
                              std::to_string(s.end) + ") out of bounds");
      }
      if (s.start < prev_end) {
        throw Error::data("InvalidSpan",
                          "document '" + doc.id + "' has overlapping spans");
      }
      prev_end = s.end;
    }
  }
}

void validate_corpus(const Corpus& corpus) {
  std::unordered_set<std::string> ids;
  for (const Document& doc : corpus.documents) {
    validate_document(doc);
    if (!ids.insert(doc.id).second) {
      throw Error::data("DuplicateId", "duplicate document id '" + doc.id + "'");
    }
  }
}

namespace {

const char* provenance_name(Provenance p) {
  return p == Provenance::real ? "real" : "synthetic";
}

Provenance provenance_from(const std::string& s, size_t line_no) {
  if (s == "real") return Provenance::real;
  if (s == "synthetic") return Provenance::synthetic;
  throw Error::data("MalformedLine", "line " + std::to_string(line_no) +
                                         ": unknown provenance '" + s + "'");
}

[[noreturn]] void malformed(size_t line_no, const std::string& what) {
  throw Error::data("MalformedLine",
                    "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Document document_from_json_line(const std::string& line, size_t line_no) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    malformed(line_no, e.what());
  }
  if (!j.is_object()) malformed(line_no, "not a JSON object");

  static const std::unordered_set<std::string> known = {
      "id", "text", "label", "spans", "provenance", "disclaimer", "meta"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) malformed(line_no, "unknown field '" + key + "'");
  }
  for (const char* req : {"id", "text", "provenance"}) {
    if (!j.contains(req)) malformed(line_no, std::string("missing field '") + req + "'");
  }

  Document doc;
  try {
    doc.id = j.at("id").get<std::string>();
    doc.text = j.at("text").get<std::string>();
    doc.provenance = provenance_from(j.at("provenance").get<std::string>(), line_no);
    if (j.contains("label") && !j["label"].is_null()) {
      doc.label = j["label"].get<std::string>();
    }
    if (j.contains("spans") && !j["spans"].is_null()) {
      std::vector<Span> spans;
      for (const auto& row : j["spans"]) {
        if (!row.is_array() || row.size() != 3) {
          malformed(line_no, "span is not [start, end, tag]");
        }
        spans.push_back({row[0].get<int>(), row[1].get<int>(),
                         row[2].get<std::string>()});
      }
      doc.spans = std::move(spans);
    }
    if (j.contains("disclaimer") && !j["disclaimer"].is_null()) {
      doc.disclaimer = j["disclaimer"].get<std::string>();
    }
    if (j.contains("meta") && !j["meta"].is_null()) {
      for (const auto& [key, value] : j["meta"].items()) {
        if (!value.is_string()) malformed(line_no, "meta values must be strings");
        doc.meta[key] = value.get<std::string>();
      }
    }
  } catch (const json::exception& e) {
    malformed(line_no, e.what());
  }
  validate_document(doc);
  return doc;
}

std::string document_to_json_line(const Document& doc) {
  validate_document(doc);
  json j;
  j["id"] = doc.id;
  j["text"] = doc.text;
  j["label"] = doc.label ? json(*doc.label) : json(nullptr);
  if (doc.spans) {
    json spans = json::array();
    for (const Span& s : *doc.spans) {
      spans.push_back(json::array({s.start, s.end, s.tag}));
    }
    j["spans"] = spans;
  } else {
    j["spans"] = nullptr;
  }
  j["provenance"] = provenance_name(doc.provenance);
  j["disclaimer"] = doc.disclaimer ? json(*doc.disclaimer) : json(nullptr);
  j["meta"] = json::object();
  for (const auto& [k, v] : doc.meta) j["meta"][k] = v;
  return j.dump();
}

Corpus load_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("FileUnreadable", "cannot open '" + path + "'");
  Corpus corpus;
  corpus.name = path;
  std::string line;
  size_t line_no = 0;
  std::unordered_set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Document doc = document_from_json_line(line, line_no);
    if (!ids.insert(doc.id).second) {
      throw Error::data("DuplicateId", "duplicate document id '" + doc.id + "'");
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

void save_jsonl(const Corpus& corpus, const std::string& path) {
  validate_corpus(corpus);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error::io("FileUnwritable", "cannot write '" + path + "'");
  for (const Document& doc : corpus.documents) {
    out << document_to_json_line(doc) << '\n';
  }
  if (!out) throw Error::io("FileUnwritable", "write failed for '" + path + "'");
}

namespace {

std::string substitute(std::string tmpl, const std::string& key,
                       const std::string& value) {
  const std::string slot = "{" + key + "}";
  size_t pos = 0;
  while ((pos = tmpl.find(slot, pos)) != std::string::npos) {
    tmpl.replace(pos, slot.size(), value);
    pos += value.size();
  }
  return tmpl;
}

}  // namespace

Document apply_disclaimer(const Document& doc, const std::string& tmpl,
                          const std::string& author, const std::string& contact,
                          const std::string& purpose) {
  if (!doc.is_synthetic()) {
    throw Error::data("NotSynthetic",
                      "document '" + doc.id + "' is not synthetic");
  }
  Document out = doc;
  std::string text = substitute(tmpl, "author", author);
  text = substitute(text, "contact", contact);
  text = substitute(text, "purpose", purpose);
  out.disclaimer = text;
  return out;
}

std::string render_marked(const Document& doc) {
  if (doc.is_synthetic()) return "[SYNTH] " + doc.text;
  return doc.text;
}

}  // namespace syntex
