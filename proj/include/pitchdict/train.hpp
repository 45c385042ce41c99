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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pitchdict/error.hpp"
#include "pitchdict/features.hpp"
#include "pitchdict/lexicon.hpp"
#include "pitchdict/metrics.hpp"
#include "pitchdict/model.hpp"
#include "pitchdict/sagisaka.hpp"

namespace pitchdict {

enum class Source { kAnnotated, kLexicon, kSynthetic };

std::string_view to_string(Source s);

struct Item {
  std::string surface;
  MoraSeq yomi;
  AccentVector gold;
  std::string category;
  Source source = Source::kAnnotated;
  std::size_t id = 0;  // unique within a Dataset
};

// Sample TSV: surface, yomi, marked reading, optional category. Lines
// starting with '#' and blank lines are skipped. Throws FormatError with the
// line number on a malformed row.
std::vector<Item> read_samples(const std::filesystem::path& path,
                               Source source = Source::kAnnotated);
void write_samples(const std::filesystem::path& path, const std::vector<Item>& items);
std::string sample_row(const Item& item);

struct DatasetConfig {
  std::vector<std::filesystem::path> annotated;
  std::size_t lexicon_words = 0;  // lexicon nouns added to the training split
  std::size_t synthetic = 0;      // synthetic compounds added to the training split
  double eval_fraction = 0.2;
  std::uint64_t seed = 0;
};

struct Dataset {
  std::vector<Item> train;
  std::vector<Item> eval;
};

// Annotated rows are deduplicated on (surface, yomi) and split by a seeded
// shuffle; lexicon words and synthetic compounds only ever join the training
// split and are dropped when they duplicate an item already present. Throws
// std::invalid_argument when the result is empty.
Dataset build_dataset(const DatasetConfig& cfg, const Lexicon* lex);

// `count` distinct items (by surface and reading). Each draw picks its own
// rule with even odds unless `rule` is given; draw i depends only on
// (seed, i), and repeats of earlier items are skipped.
std::vector<Item> synthesize_items(const Lexicon& lex, std::size_t count, std::uint64_t seed,
                                   std::optional<SynthRule> rule = std::nullopt);

struct TrainConfig {
  std::int64_t steps = 10000;
  int batch = 32;
  std::uint64_t seed = 0;
  std::int64_t eval_interval = 500;
  std::int64_t checkpoint_interval = 0;  // 0 writes only the final checkpoint
  std::filesystem::path checkpoint;      // empty disables checkpoint files
  std::filesystem::path log;             // empty disables the log file
  SelectionConfig selection;
  AdamConfig adam;
  ModelConfig model;
};

struct LogRecord {
  std::int64_t step = 0;
  double loss = 0.0;  // mean training loss since the previous record
  std::optional<double> emr;
  std::optional<double> ahd;
};

std::string to_json_line(const LogRecord& r);

struct TrainResult {
  TrainState state;
  std::vector<LogRecord> log;
  std::set<std::size_t> trained_ids;  // ids of items that produced gradients
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

// Candidate feature pairs for one item: the top m_train segmentations in
// training, the top one for evaluation.
struct PreparedItem {
  std::vector<FeaturePair> candidates;
  AccentVector gold;
  std::size_t id = 0;
};

PreparedItem prepare(const Item& item, const Lexicon& lex, const SelectionConfig& sel, Mode mode);

// Runs from `resume` (or a fresh initialization) up to cfg.steps. Batches,
// candidate choices and dropout masks depend only on (seed, step), so a
// resumed run continues bit for bit. A non-finite loss writes the last good
// state to the checkpoint path and throws TrainingError.
TrainResult train_loop(const TrainConfig& cfg, const Dataset& ds, const Lexicon& lex,
                       std::optional<TrainState> resume = std::nullopt,
                       const std::function<void(const LogRecord&)>& on_log = {});

// Infer-mode predictions for every item, batched.
std::vector<AccentVector> predict_items(const Network<float>& net, const std::vector<Item>& items,
                                        const Lexicon& lex, const SelectionConfig& sel = {});

CategoryReport evaluate_items(const Network<float>& net, const std::vector<Item>& items,
                              const Lexicon& lex, const SelectionConfig& sel = {});

}  // namespace pitchdict
