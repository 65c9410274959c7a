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

#include "linear.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"
#include "text.hpp"

namespace syntex {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(t)) without overflow.
double log1pexp(double t) {
  if (t > 0.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

double dot(const SparseVector& row, const std::vector<double>& w) {
  double z = 0.0;
  for (const auto& [col, v] : row) z += v * w[col];
  return z;
}

}  // namespace

std::pair<std::vector<size_t>, std::vector<size_t>> stratified_split(
    const std::vector<std::string>& labels, const EvalSplit& split) {
  if (split.train_fraction <= 0.0 || split.train_fraction >= 1.0) {
    throw Error::validation("InvalidSplit", "train_fraction must be in (0,1)");
  }
  std::map<std::string, std::vector<size_t>> by_label;
  for (size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);

  std::vector<size_t> train, eval;
  for (auto& [label, idx] : by_label) {
    Rng rng(split.seed ^ fnv1a(label));
    rng.shuffle(idx);
    size_t n_train = static_cast<size_t>(
        std::llround(split.train_fraction * static_cast<double>(idx.size())));
    if (idx.size() >= 2) {
      n_train = std::clamp<size_t>(n_train, 1, idx.size() - 1);
    }
    if (n_train == 0 || n_train == idx.size()) {
      throw Error::data("DegenerateSplit",
                        "class '" + label + "' cannot appear on both sides");
    }
    train.insert(train.end(), idx.begin(), idx.begin() + n_train);
    eval.insert(eval.end(), idx.begin() + n_train, idx.end());
  }
  std::sort(train.begin(), train.end());
  std::sort(eval.begin(), eval.end());
  return {train, eval};
}

double LinearModel::loss_and_gradient(const std::vector<SparseVector>& rows,
                                      const std::vector<int>& targets,
                                      const std::vector<double>& weights,
                                      double bias, double l2_lambda, bool hinge,
                                      std::vector<double>* grad_w, double* grad_b) {
  const double n = static_cast<double>(rows.size());
  grad_w->assign(weights.size(), 0.0);
  *grad_b = 0.0;
  double loss = 0.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const double y = targets[i];
    const double z = dot(rows[i], weights) + bias;
    if (hinge) {
      const double margin = 1.0 - y * z;
      if (margin > 0.0) {
        loss += margin;
        for (const auto& [col, v] : rows[i]) (*grad_w)[col] -= y * v;
        *grad_b -= y;
      }
    } else {
      loss += log1pexp(-y * z);
      const double g = -y * sigmoid(-y * z);
      for (const auto& [col, v] : rows[i]) (*grad_w)[col] += g * v;
      *grad_b += g;
    }
  }
  loss /= n;
  *grad_b /= n;
  double w_sq = 0.0;
  for (size_t c = 0; c < weights.size(); ++c) {
    (*grad_w)[c] = (*grad_w)[c] / n + l2_lambda * weights[c];
    w_sq += weights[c] * weights[c];
  }
  return loss + 0.5 * l2_lambda * w_sq;
}

std::pair<LinearModel, double> LinearModel::fit(const Corpus& corpus,
                                                const EvalSplit& split,
                                                const FitHyper& hyper) {
  if (corpus.empty()) throw Error::data("EmptyCorpus", "cannot fit on empty corpus");
  std::vector<std::string> labels;
  labels.reserve(corpus.size());
  std::set<std::string> classes;
  for (const Document& doc : corpus.documents) {
    if (!doc.label) {
      throw Error::data("MissingLabel", "document '" + doc.id + "' has no label");
    }
    labels.push_back(*doc.label);
    classes.insert(*doc.label);
  }
  if (classes.size() < 2) {
    throw Error::data("SingleClass", "need two classes, got " +
                                         std::to_string(classes.size()));
  }
  if (classes.size() > 2) {
    throw Error::data("NotBinary", "expected binary labels, got " +
                                       std::to_string(classes.size()));
  }

  auto [train_idx, eval_idx] = stratified_split(labels, split);

  LinearModel model;
  model.negative_label_ = *classes.begin();
  model.positive_label_ = *std::next(classes.begin());
  model.l2_lambda_ = hyper.l2_lambda;
  model.train_seed_ = split.seed;

  Corpus train_corpus;
  for (size_t i : train_idx) train_corpus.documents.push_back(corpus.documents[i]);
  model.space_ = FeatureSpace::fit(train_corpus, hyper.features);

  std::vector<SparseVector> rows;
  std::vector<int> targets;
  size_t n_pos = 0;
  for (size_t i : train_idx) {
    rows.push_back(model.space_.vectorize(corpus.documents[i].text));
    const bool pos = labels[i] == model.positive_label_;
    targets.push_back(pos ? 1 : -1);
    n_pos += pos;
  }
  const size_t n_neg = rows.size() - n_pos;

  model.weights_.assign(model.space_.dim(), 0.0);
  // Prior log-odds; an untrained (0-epoch) model predicts the majority class.
  model.bias_ = std::log(static_cast<double>(n_pos) / static_cast<double>(n_neg));

  std::vector<double> grad_w;
  double grad_b = 0.0;
  for (int epoch = 0; epoch < hyper.max_epochs; ++epoch) {
    loss_and_gradient(rows, targets, model.weights_, model.bias_,
                      hyper.l2_lambda, hyper.hinge, &grad_w, &grad_b);
    double norm_sq = grad_b * grad_b;
    for (double g : grad_w) norm_sq += g * g;
    if (std::sqrt(norm_sq) < hyper.grad_tol) break;
    for (size_t c = 0; c < model.weights_.size(); ++c) {
      model.weights_[c] -= hyper.learning_rate * grad_w[c];
    }
    model.bias_ -= hyper.learning_rate * grad_b;
  }

  size_t correct = 0;
  for (size_t i : eval_idx) {
    if (model.predict_label(corpus.documents[i].text) == labels[i]) ++correct;
  }
  const double held_out =
      eval_idx.empty() ? 0.0
                       : static_cast<double>(correct) / static_cast<double>(eval_idx.size());
  return {std::move(model), held_out};
}

double LinearModel::predict_proba(const std::string& text) const {
  const SparseVector row = space_.vectorize(text);
  return sigmoid(dot(row, weights_) + bias_);
}

const std::string& LinearModel::predict_label(const std::string& text) const {
  return predict_proba(text) > 0.5 ? positive_label_ : negative_label_;
}

void LinearModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error::io("FileUnwritable", "cannot write '" + path + "'");
  const FeatureConfig& fc = space_.config();
  out << "LINMODEL v1 lambda=" << format_double(l2_lambda_)
      << " seed=" << train_seed_ << " bias=" << format_double(bias_)
      << " lowercase=" << (fc.lowercase ? 1 : 0)
      << " bigrams=" << (fc.bigrams ? 1 : 0) << " min_df=" << fc.min_df
      << " neg=" << percent_encode(negative_label_)
      << " pos=" << percent_encode(positive_label_) << "\n";
  for (const auto& [term, col] : space_.vocabulary()) {
    out << percent_encode(term) << '\t' << format_double(space_.idf()[col])
        << '\t' << format_double(weights_[col]) << '\n';
  }
  if (!out) throw Error::io("FileUnwritable", "write failed for '" + path + "'");
}

LinearModel LinearModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("FileUnreadable", "cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) {
    throw Error::data("MalformedModel", "empty model file '" + path + "'");
  }
  std::istringstream hs(header);
  std::string magic, version, field;
  hs >> magic >> version;
  if (magic != "LINMODEL" || version != "v1") {
    throw Error::data("MalformedModel", "bad header in '" + path + "'");
  }
  LinearModel model;
  FeatureConfig fc;
  while (hs >> field) {
    const size_t eq = field.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "lambda") model.l2_lambda_ = std::atof(value.c_str());
    else if (key == "seed") model.train_seed_ = std::strtoull(value.c_str(), nullptr, 10);
    else if (key == "bias") model.bias_ = std::atof(value.c_str());
    else if (key == "lowercase") fc.lowercase = value == "1";
    else if (key == "bigrams") fc.bigrams = value == "1";
    else if (key == "min_df") fc.min_df = std::atoi(value.c_str());
    else if (key == "neg") model.negative_label_ = percent_decode(value);
    else if (key == "pos") model.positive_label_ = percent_decode(value);
  }
  std::map<std::string, size_t> vocabulary;
  std::vector<double> idf;
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
    const std::string term = percent_decode(line.substr(0, t1));
    vocabulary[term] = idf.size();
    idf.push_back(std::atof(line.substr(t1 + 1, t2 - t1 - 1).c_str()));
    model.weights_.push_back(std::atof(line.c_str() + t2 + 1));
  }
  model.space_ = FeatureSpace(std::move(vocabulary), std::move(idf), fc);
  if (model.space_.dim() != model.weights_.size()) {
    throw Error::data("MalformedModel", "weight/vocabulary size mismatch");
  }
  return model;
}

// ---- Metrics ----

namespace {

void check_lengths(size_t a, size_t b) {
  if (a != b) {
    throw Error::data("LengthMismatch", std::to_string(a) + " predictions vs " +
                                            std::to_string(b) + " golds");
  }
}

}  // namespace

double accuracy(const std::vector<std::string>& preds,
                const std::vector<std::string>& golds) {
  check_lengths(preds.size(), golds.size());
  if (preds.empty()) return 0.0;
  size_t correct = 0;
  for (size_t i = 0; i < preds.size(); ++i) correct += preds[i] == golds[i];
  return static_cast<double>(correct) / static_cast<double>(preds.size());
}

Prf binary_prf(const std::vector<std::string>& preds,
               const std::vector<std::string>& golds,
               const std::string& positive) {
  check_lengths(preds.size(), golds.size());
  size_t tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < preds.size(); ++i) {
    const bool p = preds[i] == positive;
    const bool g = golds[i] == positive;
    tp += p && g;
    fp += p && !g;
    fn += !p && g;
  }
  Prf out;
  out.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  out.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  out.f1 = out.precision + out.recall == 0.0
               ? 0.0
               : 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

double macro_f1(const std::vector<std::string>& preds,
                const std::vector<std::string>& golds) {
  check_lengths(preds.size(), golds.size());
  std::set<std::string> classes(golds.begin(), golds.end());
  classes.insert(preds.begin(), preds.end());
  if (classes.empty()) return 0.0;
  double sum = 0.0;
  for (const std::string& c : classes) sum += binary_prf(preds, golds, c).f1;
  return sum / static_cast<double>(classes.size());
}

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  check_lengths(scores.size(), labels.size());
  std::vector<double> pos, neg;
  for (size_t i = 0; i < scores.size(); ++i) {
    (labels[i] ? pos : neg).push_back(scores[i]);
  }
  if (pos.empty() || neg.empty()) {
    throw Error::data("SingleClass", "AUC needs both classes");
  }
  double wins = 0.0;
  for (double p : pos) {
    for (double n : neg) {
      if (p > n) wins += 1.0;
      else if (p == n) wins += 0.5;
    }
  }
  return wins / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

UnivariateLogistic fit_univariate_logistic(const std::vector<double>& x,
                                           const std::vector<int>& y) {
  check_lengths(x.size(), y.size());
  size_t n_pos = 0;
  for (double v : x) {
    if (!std::isfinite(v)) throw Error::data("NonFinite", "non-finite input");
  }
  for (int v : y) n_pos += v != 0;
  if (n_pos < 2 || x.size() - n_pos < 2) {
    throw Error::data("SingleClass", "need at least two points per class");
  }

  double a = 0.0;
  double b = std::log(static_cast<double>(n_pos) /
                      static_cast<double>(x.size() - n_pos));
  for (int iter = 0; iter < 100; ++iter) {
    double g_a = 0.0, g_b = 0.0, h_aa = 1e-9, h_ab = 0.0, h_bb = 1e-9;
    for (size_t i = 0; i < x.size(); ++i) {
      const double p = sigmoid(a * x[i] + b);
      const double r = p - (y[i] ? 1.0 : 0.0);
      const double w = std::max(p * (1.0 - p), 1e-12);
      g_a += r * x[i];
      g_b += r;
      h_aa += w * x[i] * x[i];
      h_ab += w * x[i];
      h_bb += w;
    }
    const double det = h_aa * h_bb - h_ab * h_ab;
    const double step_a = (h_bb * g_a - h_ab * g_b) / det;
    const double step_b = (h_aa * g_b - h_ab * g_a) / det;
    a -= step_a;
    b -= step_b;
    // Separable data walks off to infinity; stop once decisions are saturated.
    if (std::fabs(step_a) + std::fabs(step_b) < 1e-12 || std::fabs(a) > 50.0) break;
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw Error::data("NonFinite", "univariate fit diverged");
  }

  UnivariateLogistic out;
  out.coef = a;
  out.intercept = b;
  std::vector<double> fitted(x.size());
  for (size_t i = 0; i < x.size(); ++i) fitted[i] = sigmoid(a * x[i] + b);
  out.auc = auc(fitted, y);
  return out;
}

}  // namespace syntex
