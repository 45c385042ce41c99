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

// Central finite-difference check of Network<double>::train_pass.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pitchdict/model.hpp"

namespace pitchdict::testing {

inline FeaturePair random_features(Rng& rng, std::size_t ns, std::size_t ny) {
  FeaturePair fp;
  for (std::size_t i = 0; i < ns; ++i) {
    SurfaceFeature f;
    f.consonant = static_cast<std::uint8_t>(rng.below(kConsonantVocab));
    f.vowel = static_cast<std::uint8_t>(rng.below(kVowelVocab));
    f.pos = static_cast<std::uint8_t>(rng.below(kPosVocab));
    f.goshu = static_cast<std::uint8_t>(rng.below(kGoshuVocab));
    f.accent = static_cast<std::uint8_t>(rng.below(kAccentVocab));
    f.sandhi = static_cast<std::uint8_t>(rng.below(kSandhiVocab));
    fp.surface_side.push_back(f);
  }
  for (std::size_t i = 0; i < ny; ++i) {
    fp.yomi_side.push_back(YomiFeature{static_cast<std::uint8_t>(rng.below(kConsonantVocab)),
                                       static_cast<std::uint8_t>(rng.below(kVowelVocab))});
  }
  return fp;
}

inline Example random_example(Rng& rng, std::size_t max_len) {
  Example e;
  const std::size_t ns = 1 + rng.below(max_len);
  const std::size_t ny = 1 + rng.below(max_len);
  e.features = random_features(rng, ns, ny);
  for (std::size_t j = 0; j < ny; ++j) e.gold.push_back(static_cast<Accent>(int(rng.below(3)) - 1));
  e.gold = repair_accent(e.gold);
  return e;
}

struct GradCheckResult {
  std::size_t checked = 0;
  double worst = 0.0;
  std::string worst_at;
};

// Relative error |a - n| / max(|a|, |n|, floor) over every parameter.
inline GradCheckResult gradient_check(Network<double>& net, const std::vector<Example>& batch,
                                      double h = 1e-4, double floor = 1e-6) {
  const std::uint64_t seed = 77;
  TensorSet<double> grad = net.params().zeros_like();
  net.train_pass(batch, 0, seed, &grad, false);
  GradCheckResult res;
  for (std::size_t t = 0; t < grad.size(); ++t) {
    for (std::size_t i = 0; i < grad[t].size(); ++i) {
      double& w = net.params()[t].data[i];
      const double orig = w;
      w = orig + h;
      const double lp = net.train_pass(batch, 0, seed, nullptr, false);
      w = orig - h;
      const double lm = net.train_pass(batch, 0, seed, nullptr, false);
      w = orig;
      const double numeric = (lp - lm) / (2 * h);
      const double analytic = grad[t].data[i];
      const double rel = std::abs(analytic - numeric) /
                         std::max({std::abs(analytic), std::abs(numeric), floor});
      ++res.checked;
      if (rel > res.worst) {
        res.worst = rel;
        res.worst_at = grad[t].name + "[" + std::to_string(i) + "]";
      }
    }
  }
  return res;
}

}  // namespace pitchdict::testing
