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

#include "prompts.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "error.hpp"
#include "rng.hpp"
#include "text.hpp"

namespace syntex {

using nlohmann::json;

ExpandMode ExpandMode::sampled(std::string axis, int n, uint64_t seed,
                               std::vector<std::string> group_by) {
  ExpandMode m;
  m.kind = Kind::sampled;
  m.sampled_axis = std::move(axis);
  m.n_per_axis = n;
  m.seed = seed;
  m.group_by = std::move(group_by);
  return m;
}

namespace {

std::set<std::string> placeholders_in(const std::string& body) {
  std::set<std::string> names;
  size_t pos = 0;
  while ((pos = body.find('{', pos)) != std::string::npos) {
    const size_t close = body.find('}', pos + 1);
    if (close == std::string::npos) break;
    names.insert(body.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  return names;
}

std::string fill(const std::string& body,
                 const std::map<std::string, std::string>& bindings) {
  std::string out = body;
  for (const auto& [name, value] : bindings) {
    const std::string slot = "{" + name + "}";
    size_t pos = 0;
    while ((pos = out.find(slot, pos)) != std::string::npos) {
      out.replace(pos, slot.size(), value);
      pos += value.size();
    }
  }
  return out;
}

// Indices of a without-replacement draw, in draw order.
std::vector<size_t> sample_indices(size_t domain_size, size_t n, uint64_t seed) {
  std::vector<size_t> idx(domain_size);
  for (size_t i = 0; i < domain_size; ++i) idx[i] = i;
  Rng rng(seed);
  rng.shuffle(idx);
  idx.resize(std::min(n, domain_size));
  return idx;
}

}  // namespace

std::vector<PromptInstance> expand(const PromptTemplate& tmpl, const ExpandMode& mode) {
  for (const std::string& name : placeholders_in(tmpl.body)) {
    if (!tmpl.slot_domains.count(name)) {
      throw Error::data("UnboundPlaceholder",
                        "placeholder '" + name + "' in template '" + tmpl.id +
                            "' has no slot domain");
    }
  }
  std::vector<std::string> axes;
  for (const auto& [name, domain] : tmpl.slot_domains) {
    if (domain.empty()) {
      throw Error::data("EmptyDomain", "slot domain '" + name + "' is empty");
    }
    axes.push_back(name);  // std::map: lexicographic order
  }
  if (mode.kind == ExpandMode::Kind::sampled) {
    if (!tmpl.slot_domains.count(mode.sampled_axis)) {
      throw Error::data("UnboundPlaceholder",
                        "sampled axis '" + mode.sampled_axis + "' is not a slot");
    }
    if (mode.n_per_axis < 1) {
      throw Error::validation("InvalidExpandMode", "n_per_axis must be >= 1");
    }
  }

  std::vector<PromptInstance> out;
  std::map<std::string, std::string> bindings;

  // Recursive cartesian walk over axes; the sampled axis resolves its value
  // list from the group_by bindings chosen so far (axes are visited in
  // lexicographic order, so group_by axes should sort before the sampled one).
  auto walk = [&](auto&& self, size_t axis_idx) -> void {
    if (axis_idx == axes.size()) {
      PromptInstance inst;
      inst.template_id = tmpl.id;
      inst.bindings = bindings;
      inst.intended_label = tmpl.intended_label;
      inst.filled_text = fill(tmpl.body, bindings);
      out.push_back(std::move(inst));
      return;
    }
    const std::string& axis = axes[axis_idx];
    const std::vector<std::string>& domain = tmpl.slot_domains.at(axis);
    if (mode.kind == ExpandMode::Kind::sampled && axis == mode.sampled_axis) {
      uint64_t seed = mode.seed;
      for (const std::string& g : mode.group_by) {
        auto it = bindings.find(g);
        if (it != bindings.end()) {
          seed = fnv1a(it->second, fnv1a(g, seed));
        }
      }
      for (size_t i : sample_indices(domain.size(),
                                     static_cast<size_t>(mode.n_per_axis), seed)) {
        bindings[axis] = domain[i];
        self(self, axis_idx + 1);
      }
    } else {
      for (const std::string& value : domain) {
        bindings[axis] = value;
        self(self, axis_idx + 1);
      }
    }
    bindings.erase(axis);
  };
  walk(walk, 0);
  return out;
}

std::string render_news_prompt(const std::string& headline, const std::string& city,
                               const std::string& source) {
  return headline + "\n" + ascii_upper(city) + " (" + source + ") -- ";
}

namespace {

PromptTemplate template_from_json(const json& j) {
  if (!j.is_object()) {
    throw Error::data("MalformedTemplate", "template entry is not an object");
  }
  PromptTemplate t;
  try {
    t.id = j.at("id").get<std::string>();
    t.body = j.at("body").get<std::string>();
    if (j.contains("intended_label") && !j["intended_label"].is_null()) {
      t.intended_label = j["intended_label"].get<std::string>();
    }
    if (j.contains("slot_domains") && !j["slot_domains"].is_null()) {
      for (const auto& [name, values] : j["slot_domains"].items()) {
        std::vector<std::string> domain;
        for (const auto& v : values) domain.push_back(v.get<std::string>());
        t.slot_domains[name] = std::move(domain);
      }
    }
  } catch (const json::exception& e) {
    throw Error::data("MalformedTemplate", e.what());
  }
  return t;
}

}  // namespace

std::vector<PromptTemplate> templates_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error::data("MalformedTemplate", e.what());
  }
  if (!j.is_array()) {
    throw Error::data("MalformedTemplate", "template file must be a JSON array");
  }
  std::vector<PromptTemplate> out;
  for (const auto& entry : j) out.push_back(template_from_json(entry));
  return out;
}

std::vector<PromptTemplate> load_templates(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("FileUnreadable", "cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return templates_from_json(text);
}

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("FileUnreadable", "cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

NewsPromptData load_news_prompt_data(const std::string& headlines_path,
                                     const std::string& cities_path,
                                     const std::string& sources_path) {
  NewsPromptData data;
  data.headlines = read_lines(headlines_path);
  data.cities = read_lines(cities_path);
  data.sources = read_lines(sources_path);
  return data;
}

std::vector<PromptInstance> expand_news_preset(const NewsPromptData& data,
                                               int n_cities, uint64_t seed) {
  if (data.headlines.empty() || data.cities.empty() || data.sources.empty()) {
    throw Error::data("EmptyDomain", "news preset data has an empty list");
  }
  if (n_cities < 1) {
    throw Error::validation("InvalidExpandMode", "n_cities must be >= 1");
  }
  std::vector<PromptInstance> out;
  for (const std::string& headline : data.headlines) {
    const uint64_t headline_seed = fnv1a(headline, fnv1a("city", seed));
    const auto city_idx = sample_indices(
        data.cities.size(), static_cast<size_t>(n_cities), headline_seed);
    for (size_t ci : city_idx) {
      for (const std::string& source : data.sources) {
        PromptInstance inst;
        inst.template_id = "si_b_news";
        inst.intended_label = "ASSAULT";
        inst.bindings = {{"headline", headline},
                         {"city", data.cities[ci]},
                         {"source", source}};
        inst.filled_text = render_news_prompt(headline, data.cities[ci], source);
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

}  // namespace syntex
