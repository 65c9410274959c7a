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

#include "ngram.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace syntex {

namespace {

void check_order_discount(int order, double discount) {
  if (order < 1) {
    throw Error::validation("InvalidOrder", "order must be >= 1, got " +
                                                std::to_string(order));
  }
  if (discount < 0.0 || discount >= 1.0) {
    throw Error::validation("InvalidDiscount",
                            "discount must be in [0,1), got " +
                                format_double(discount));
  }
}

}  // namespace

void NGramModel::count_document(const TokenSequence& tokens) {
  TokenSequence padded;
  padded.reserve(tokens.size() + order_);
  for (int i = 0; i + 1 < order_; ++i) padded.push_back(kBos);
  padded.insert(padded.end(), tokens.begin(), tokens.end());
  padded.push_back(kEos);

  const size_t first_target = static_cast<size_t>(order_ - 1);
  for (size_t i = first_target; i < padded.size(); ++i) {
    const std::string& target = padded[i];
    for (int len = 0; len <= order_ - 1; ++len) {
      ContextKey ctx(padded.begin() + (i - len), padded.begin() + i);
      counts_[ctx].tokens[target] += 1.0;
    }
  }
  for (const std::string& tok : tokens) vocab_.insert(tok);
}

void NGramModel::finalize_totals() {
  vocab_.insert(kEos);
  vocab_.insert(kUnk);
  for (auto& [ctx, cc] : counts_) {
    double total = 0.0;
    for (const auto& [tok, c] : cc.tokens) total += c;
    cc.total = total;
  }
}

NGramModel NGramModel::train(const Corpus& corpus, int order, double discount,
                             bool lowercase) {
  check_order_discount(order, discount);
  if (corpus.empty()) {
    throw Error::data("EmptyCorpus", "cannot train on an empty corpus");
  }
  NGramModel model(order, discount);
  for (const Document& doc : corpus.documents) {
    model.count_document(tokenize(doc.text, lowercase));
  }
  model.finalize_totals();
  return model;
}

double NGramModel::total_mass() const {
  double mass = 0.0;
  for (const auto& [ctx, cc] : counts_) mass += cc.total;
  return mass;
}

NGramModel NGramModel::adapt(const NGramModel& base, const Corpus& adaptation,
                             double mix_weight, bool lowercase) {
  if (mix_weight < 0.0 || mix_weight > 1.0) {
    throw Error::validation("InvalidMixWeight", "mix weight must be in [0,1]");
  }
  NGramModel other = train(adaptation, base.order_, base.discount_, lowercase);
  if (mix_weight == 0.0) return base;
  if (mix_weight == 1.0) return other;
  if (other.order_ != base.order_) {
    throw Error::data("OrderMismatch", "models have different orders");
  }

  const double mass_base = base.total_mass();
  const double mass_other = other.total_mass();
  if (mass_base <= 0.0 || mass_other <= 0.0) {
    throw Error::data("EmptyCorpus", "cannot adapt with zero total mass");
  }
  // Normalize both tables to unit mass, mix, then rescale to the
  // mu-interpolated raw mass so counts stay commensurate with data size.
  const double target_mass =
      (1.0 - mix_weight) * mass_base + mix_weight * mass_other;
  const double scale_base = (1.0 - mix_weight) / mass_base * target_mass;
  const double scale_other = mix_weight / mass_other * target_mass;

  NGramModel mixed(base.order_, base.discount_);
  for (const auto& [ctx, cc] : base.counts_) {
    for (const auto& [tok, c] : cc.tokens) {
      mixed.counts_[ctx].tokens[tok] += c * scale_base;
    }
  }
  for (const auto& [ctx, cc] : other.counts_) {
    for (const auto& [tok, c] : cc.tokens) {
      mixed.counts_[ctx].tokens[tok] += c * scale_other;
    }
  }
  mixed.vocab_ = base.vocab_;
  mixed.vocab_.insert(other.vocab_.begin(), other.vocab_.end());
  mixed.finalize_totals();
  return mixed;
}

Distribution NGramModel::distribution_for(const ContextKey& ctx) const {
  Distribution lower;
  if (ctx.empty()) {
    const double u = 1.0 / static_cast<double>(vocab_.size());
    for (const std::string& tok : vocab_) lower[tok] = u;
  } else {
    lower = distribution_for(ContextKey(ctx.begin() + 1, ctx.end()));
  }

  auto it = counts_.find(ctx);
  if (it == counts_.end() || it->second.total <= 0.0) {
    return lower;  // unseen context: full backoff
  }

  const ContextCounts& cc = it->second;
  double kept_mass = 0.0;
  Distribution dist;
  for (const auto& [tok, c] : cc.tokens) {
    const double kept = std::max(c - discount_, 0.0) / cc.total;
    if (kept > 0.0) dist[tok] = kept;
    kept_mass += kept;
  }
  const double lambda = 1.0 - kept_mass;
  if (lambda > 0.0) {
    for (const auto& [tok, p] : lower) {
      if (p > 0.0) dist[tok] += lambda * p;
    }
  }
  return dist;
}

Distribution NGramModel::next_token_distribution(const TokenSequence& context) const {
  // BOS-pad, truncate to the Markov window, map unknowns to UNK.
  ContextKey ctx;
  const int window = order_ - 1;
  for (int i = 0; i < window - static_cast<int>(context.size()); ++i) {
    ctx.push_back(kBos);
  }
  const size_t take = std::min(context.size(), static_cast<size_t>(window));
  for (size_t i = context.size() - take; i < context.size(); ++i) {
    const std::string& tok = context[i];
    if (tok == kBos || vocab_.count(tok)) {
      ctx.push_back(tok);
    } else {
      ctx.push_back(kUnk);
    }
  }
  return distribution_for(ctx);
}

double NGramModel::perplexity(const Corpus& corpus, bool lowercase) const {
  double neg_log_sum = 0.0;
  size_t n_events = 0;
  for (const Document& doc : corpus.documents) {
    TokenSequence tokens = tokenize(doc.text, lowercase);
    tokens.push_back(kEos);
    TokenSequence context;
    for (const std::string& tok : tokens) {
      Distribution dist = next_token_distribution(context);
      auto it = dist.find(vocab_.count(tok) ? tok : kUnk);
      const double p = it == dist.end() ? 0.0 : it->second;
      if (p <= 0.0) {
        throw Error::data("ZeroProbability",
                          "token '" + tok + "' has zero probability");
      }
      neg_log_sum -= std::log(p);
      ++n_events;
      context.push_back(tok);
    }
  }
  if (n_events == 0) {
    throw Error::data("EmptyCorpus", "perplexity of an empty corpus");
  }
  return std::exp(neg_log_sum / static_cast<double>(n_events));
}

void NGramModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error::io("FileUnwritable", "cannot write '" + path + "'");
  out << "NGLM v1 order=" << order_ << " discount=" << format_double(discount_)
      << "\n";
  for (const auto& [ctx, cc] : counts_) {
    for (const auto& [tok, c] : cc.tokens) {
      std::string ctx_field;
      for (size_t i = 0; i < ctx.size(); ++i) {
        if (i) ctx_field.push_back(' ');
        ctx_field += percent_encode(ctx[i]);
      }
      out << ctx_field << '\t' << percent_encode(tok) << '\t'
          << format_double(c) << '\n';
    }
  }
  if (!out) throw Error::io("FileUnwritable", "write failed for '" + path + "'");
}

NGramModel NGramModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("FileUnreadable", "cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) {
    throw Error::data("MalformedModel", "empty model file '" + path + "'");
  }
  int order = 0;
  double discount = -1.0;
  {
    std::istringstream hs(header);
    std::string magic, version, field;
    hs >> magic >> version;
    if (magic != "NGLM" || version != "v1") {
      throw Error::data("MalformedModel", "bad header in '" + path + "'");
    }
    while (hs >> field) {
      if (field.rfind("order=", 0) == 0) {
        order = std::atoi(field.c_str() + 6);
      } else if (field.rfind("discount=", 0) == 0) {
        discount = std::atof(field.c_str() + 9);
      }
    }
  }
  check_order_discount(order, discount);

  NGramModel model(order, discount);
  std::string line;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t t1 = line.find('\t');
    const size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) {
      throw Error::data("MalformedModel",
                        "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    ContextKey ctx;
    const std::string ctx_field = line.substr(0, t1);
    if (!ctx_field.empty()) {
      std::istringstream cs(ctx_field);
      std::string part;
      while (cs >> part) ctx.push_back(percent_decode(part));
    }
    const std::string tok = percent_decode(line.substr(t1 + 1, t2 - t1 - 1));
    const double c = std::atof(line.c_str() + t2 + 1);
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw Error::data("MalformedModel",
                        "line " + std::to_string(line_no) + ": bad count");
    }
    if (static_cast<int>(ctx.size()) > order - 1) {
      throw Error::data("MalformedModel",
                        "line " + std::to_string(line_no) + ": context too long");
    }
    model.counts_[ctx].tokens[tok] += c;
    if (tok != kBos) model.vocab_.insert(tok);
  }
  model.finalize_totals();

  // Normalization check on every stored context.
  for (const auto& [ctx, cc] : model.counts_) {
    Distribution dist = model.distribution_for(ctx);
    double sum = 0.0;
    for (const auto& [tok, p] : dist) sum += p;
    if (std::fabs(sum - 1.0) > 1e-9) {
      throw Error::data("MalformedModel",
                        "loaded model violates normalization for a context");
    }
  }
  return model;
}

}  // namespace syntex
