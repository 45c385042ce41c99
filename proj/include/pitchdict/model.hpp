// Copyright 2026 The pitchdict Authors.
//
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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pitchdict/features.hpp"
#include "pitchdict/lexicon.hpp"
#include "pitchdict/mora.hpp"
#include "pitchdict/rng.hpp"

namespace pitchdict {

struct ModelConfig {
  int channels = 64;
  int kernel = 3;
  std::vector<int> dilations = {1, 3, 1, 3};  // per highway layer, all three stacks
  double dropout = 0.5;
  double target_gold = 0.4;  // smoothed target; the two wrong labels share the rest
  double guide_width = 0.2;
  double guide_weight = 1.0;
  double renorm_momentum = 0.99;
  double renorm_eps = 1e-5;
  int renorm_warmup = 5000;  // steps until r_max and d_max reach their limits
  double renorm_r_max = 3.0;
  double renorm_d_max = 5.0;
  double gate_bias = -1.0;

  void validate() const;
};

// Label order of the three logits.
inline constexpr std::array<Accent, 3> kLabelOrder = {Accent::kLower, Accent::kNone,
                                                      Accent::kRaise};
inline int label_index(Accent a) { return static_cast<int>(a) + 1; }

template <typename T>
struct Tensor {
  std::string name;
  std::vector<int> shape;
  std::vector<T> data;

  std::size_t size() const { return data.size(); }
};

// Ordered list of named tensors. Parameters, gradients and optimizer moments
// share one layout.
template <typename T>
struct TensorSet {
  std::vector<Tensor<T>> tensors;

  Tensor<T>& operator[](std::size_t i) { return tensors[i]; }
  const Tensor<T>& operator[](std::size_t i) const { return tensors[i]; }
  std::size_t size() const { return tensors.size(); }
  std::size_t find(const std::string& name) const;  // throws std::out_of_range
  TensorSet zeros_like() const;
  void fill(T value);
};

struct Example {
  FeaturePair features;
  AccentVector gold;
};

struct WordOutput {
  std::vector<std::array<double, 3>> logits;  // |y| rows in kLabelOrder
  std::vector<std::vector<double>> attention;  // |y| x |surface morae|
};

struct LossParts {
  double total = 0.0;
  double cross_entropy = 0.0;
  double attention = 0.0;
};

// Loss of one word: mean smoothed cross entropy over yomi morae plus
// guide_weight * mean(A * W).
LossParts word_loss(const WordOutput& out, const AccentVector& gold, const ModelConfig& cfg);

// Guide weights W[n][t] = 1 - exp(-(n/N - t/T)^2 / (2 g^2)).
std::vector<std::vector<double>> guide_weights(std::size_t n, std::size_t t, double g);

template <typename T>
class Network {
 public:
  explicit Network(ModelConfig cfg = {});

  const ModelConfig& config() const { return cfg_; }
  TensorSet<T>& params() { return params_; }
  const TensorSet<T>& params() const { return params_; }
  // Renormalization moving statistics (mean, var per normalized layer).
  TensorSet<T>& stats() { return stats_; }
  const TensorSet<T>& stats() const { return stats_; }

  void init(Rng& rng);

  // Moving statistics and no dropout. Throws std::invalid_argument on an
  // empty side.
  std::vector<WordOutput> infer(const std::vector<FeaturePair>& batch) const;

  // Training-mode pass with dropout masks drawn from `dropout_seed` and
  // renorm clipping set by `step`. Returns the mean batch loss. Accumulates
  // the gradient into `grad` when non-null and updates the moving statistics
  // when `update_stats`.
  double train_pass(const std::vector<Example>& batch, std::int64_t step,
                    std::uint64_t dropout_seed, TensorSet<T>* grad, bool update_stats,
                    std::vector<WordOutput>* outputs = nullptr);

  template <typename U>
  Network<U> cast() const;

 private:
  template <typename>
  friend class Network;

  ModelConfig cfg_;
  TensorSet<T> params_;
  TensorSet<T> stats_;
};

extern template class Network<float>;
extern template class Network<double>;

struct AdamConfig {
  double alpha = 2e-4;
  double beta1 = 0.5;
  double beta2 = 0.9;
  double eps = 1e-5;
  double decay = 1e-6;  // w -= decay * (w + sign(w)) after each step
};

struct TrainState {
  Network<float> net;
  TensorSet<float> m;
  TensorSet<float> v;
  std::int64_t step = 0;

  explicit TrainState(ModelConfig cfg = {});
};

// One bias-corrected Adam step followed by the L1+L2 decay. Throws
// std::runtime_error naming the tensor when a gradient is not finite; the
// state is left untouched in that case.
void adam_step(TrainState& state, const TensorSet<float>& grad, const AdamConfig& cfg = {});

void save_checkpoint(const TrainState& state, const std::filesystem::path& path);
TrainState load_checkpoint(const std::filesystem::path& path);

// Argmax per yomi mora followed by repair_accent.
AccentVector decode(const WordOutput& out);

AccentVector predict(const Network<float>& net, std::string_view surface, const MoraSeq& yomi,
                     const Lexicon& lex, const SelectionConfig& sel = {});

}  // namespace pitchdict
