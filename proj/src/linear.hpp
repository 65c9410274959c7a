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

#ifndef SYNTEX_LINEAR_HPP
#define SYNTEX_LINEAR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "features.hpp"

namespace syntex {

// 75/25 by default, stratified by label.
struct EvalSplit {
  double train_fraction = 0.75;
  uint64_t seed = 0;
};

struct FitHyper {
  double l2_lambda = 1e-3;
  double learning_rate = 1.5;  // full-batch; rows are L2-normalized
  int max_epochs = 500;
  double grad_tol = 1e-6;
  bool hinge = false;  // optional SVM-style loss; logistic is the default
  FeatureConfig features;
};

// Binary linear classifier over TF-IDF features, trained by full-batch
// gradient descent on logistic loss + L2. The negative/positive classes are
// the lexicographically smaller/larger label; a score of exactly 0.5
// resolves to the negative class. Bias starts at the train-set prior
// log-odds, so a 0-epoch model predicts the majority class.
class LinearModel {
 public:
  // Labels are read from Document.label. Returns the fitted model and the
  // held-out accuracy on the eval side of the split.
  // Throws SingleClass, DegenerateSplit, EmptyCorpus.
  static std::pair<LinearModel, double> fit(const Corpus& corpus,
                                            const EvalSplit& split = {},
                                            const FitHyper& hyper = {});

  double predict_proba(const std::string& text) const;
  // Label under the 0.5 threshold rule.
  const std::string& predict_label(const std::string& text) const;

  void save(const std::string& path) const;
  static LinearModel load(const std::string& path);

  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }
  const FeatureSpace& feature_space() const { return space_; }
  const std::string& negative_label() const { return negative_label_; }
  const std::string& positive_label() const { return positive_label_; }
  double l2_lambda() const { return l2_lambda_; }
  uint64_t train_seed() const { return train_seed_; }

  // Mean loss and gradient at (weights, bias) for rows given as sparse
  // vectors with +/-1 targets. Exposed for gradient verification.
  static double loss_and_gradient(const std::vector<SparseVector>& rows,
                                  const std::vector<int>& targets,
                                  const std::vector<double>& weights, double bias,
                                  double l2_lambda, bool hinge,
                                  std::vector<double>* grad_w, double* grad_b);

  LinearModel() = default;

 private:
  std::vector<double> weights_;
  double bias_ = 0.0;
  FeatureSpace space_;
  double l2_lambda_ = 0.0;
  uint64_t train_seed_ = 0;
  std::string negative_label_;
  std::string positive_label_;
};

// Stratified index split; returns (train, eval). Throws DegenerateSplit when
// either side misses a class.
std::pair<std::vector<size_t>, std::vector<size_t>> stratified_split(
    const std::vector<std::string>& labels, const EvalSplit& split);

// ---- Metrics ----

double accuracy(const std::vector<std::string>& preds,
                const std::vector<std::string>& golds);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

Prf binary_prf(const std::vector<std::string>& preds,
               const std::vector<std::string>& golds,
               const std::string& positive);

// Unweighted mean of per-class F1 over the classes present in golds or preds.
double macro_f1(const std::vector<std::string>& preds,
                const std::vector<std::string>& golds);

// P(score+ > score-) + 0.5 P(tie), by exact pairwise comparison.
// labels are 0/1; throws SingleClass.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct UnivariateLogistic {
  double coef = 0.0;
  double intercept = 0.0;
  double auc = 0.5;  // in-sample AUC of the fitted scores
};

// Newton fit of p(y=1|x) = sigmoid(coef*x + intercept).
// Throws SingleClass, NonFinite.
UnivariateLogistic fit_univariate_logistic(const std::vector<double>& x,
                                           const std::vector<int>& y);

}  // namespace syntex

#endif  // SYNTEX_LINEAR_HPP
