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

// A model trained on the annotated fixture, cached in the build tree so that
// several test binaries can share one training run.

#pragma once

#include <filesystem>

#include "pitchdict/train.hpp"
#include "test_util.hpp"

namespace pitchdict::testing {

inline constexpr std::int64_t kFixtureSteps = 1000;

inline TrainState train_fixture_model(const Lexicon& lex) {
  DatasetConfig dc;
  dc.annotated = {data_path("fixtures/annotated.tsv")};
  dc.eval_fraction = 0.0;
  dc.seed = 1;
  TrainConfig tc;
  tc.steps = kFixtureSteps;
  tc.eval_interval = 0;
  tc.seed = 1;
  return train_loop(tc, build_dataset(dc, &lex), lex).state;
}

inline std::filesystem::path fixture_model_path(const Lexicon& lex) {
  const auto path = std::filesystem::path(PITCHDICT_BINARY_DIR) / "fixture_model.ckpt";
  if (!std::filesystem::exists(path)) {
    const auto tmp = path.string() + ".tmp";
    save_checkpoint(train_fixture_model(lex), tmp);
    std::filesystem::rename(tmp, path);
  }
  return path;
}

}  // namespace pitchdict::testing
