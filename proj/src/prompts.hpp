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

#ifndef SYNTEX_PROMPTS_HPP
#define SYNTEX_PROMPTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syntex {

// Parameterized prompt. Every {placeholder} in body needs a slot domain.
struct PromptTemplate {
  std::string id;
  std::string body;
  std::optional<std::string> intended_label;
  std::map<std::string, std::vector<std::string>> slot_domains;
};

struct PromptInstance {
  std::string template_id;
  std::string filled_text;
  std::map<std::string, std::string> bindings;
  std::optional<std::string> intended_label;
};

struct ExpandMode {
  enum class Kind { full_cartesian, sampled };
  Kind kind = Kind::full_cartesian;
  // sampled mode: draw n_per_axis distinct values of sampled_axis. The draw
  // is keyed by the bindings of group_by axes (empty: one shared draw), so
  // e.g. each headline can get its own city sample that is stable across
  // the other axes.
  std::string sampled_axis;
  int n_per_axis = 1;
  uint64_t seed = 0;
  std::vector<std::string> group_by;

  static ExpandMode full_cartesian() { return {}; }
  static ExpandMode sampled(std::string axis, int n, uint64_t seed,
                            std::vector<std::string> group_by = {});
};

// Deterministic expansion: axes in lexicographic name order, values in listed
// order, last axis fastest. Throws UnboundPlaceholder / EmptyDomain.
std::vector<PromptInstance> expand(const PromptTemplate& tmpl, const ExpandMode& mode);

// "<headline>\n<CITY> (<source>) -- " with the city ASCII-uppercased.
std::string render_news_prompt(const std::string& headline, const std::string& city,
                               const std::string& source);

inline std::optional<std::string> label_of(const PromptInstance& instance) {
  return instance.intended_label;
}

// Template file: JSON array of
// {"id", "body", "intended_label", "slot_domains": {name: [values]}}.
std::vector<PromptTemplate> templates_from_json(const std::string& json_text);
std::vector<PromptTemplate> load_templates(const std::string& path);

// News-prompt preset data: one entry per line, UTF-8.
struct NewsPromptData {
  std::vector<std::string> headlines;
  std::vector<std::string> cities;
  std::vector<std::string> sources;
};

NewsPromptData load_news_prompt_data(const std::string& headlines_path,
                                     const std::string& cities_path,
                                     const std::string& sources_path);

// The shipped scheme: for each headline, sample n_cities cities (stable
// across sources), take every source, render the dateline prompt. Instances
// carry intended_label "ASSAULT".
std::vector<PromptInstance> expand_news_preset(const NewsPromptData& data,
                                               int n_cities, uint64_t seed);

}  // namespace syntex

#endif  // SYNTEX_PROMPTS_HPP
