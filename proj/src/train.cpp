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

#include "pitchdict/train.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_set>

#include "json.hpp"
#include "pitchdict/text.hpp"

namespace pitchdict {

std::string_view to_string(Source s) {
  switch (s) {
    case Source::kAnnotated:
      return "annotated";
    case Source::kLexicon:
      return "lexicon";
    case Source::kSynthetic:
      return "synthetic";
  }
  return "?";
}

std::vector<Item> read_samples(const std::filesystem::path& path, Source source) {
  const auto lines = text::read_lines(path);
  const std::string file = path.string();
  std::vector<Item> items;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view line = lines[ln];
    if (text::trim(line).empty() || line.front() == '#') continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() < 3 || cols.size() > 4) {
      throw FormatError(file, ln + 1, "expected 3 or 4 tab-separated columns");
    }
    Item it;
    it.surface = cols[0];
    it.source = source;
    if (it.surface.empty()) throw FormatError(file, ln + 1, "empty surface");
    try {
      it.yomi = parse_kana(cols[1]);
      const AccentedReading r = parse_marked(cols[2]);
      if (r.morae.size() != it.yomi.size()) {
        throw FormatError(file, ln + 1, "marked reading does not match the yomi");
      }
      for (std::size_t i = 0; i < r.morae.size(); ++i) {
        if (!r.morae[i].same_sound(it.yomi[i])) {
          throw FormatError(file, ln + 1, "marked reading does not match the yomi");
        }
      }
      it.gold = r.accent;
    } catch (const NotationError& e) {
      throw FormatError(file, ln + 1, e.what());
    }
    if (it.yomi.empty()) throw FormatError(file, ln + 1, "empty yomi");
    if (cols.size() == 4) it.category = cols[3];
    items.push_back(std::move(it));
  }
  return items;
}

std::string sample_row(const Item& item) {
  std::string row = item.surface + '\t' + kana_of(item.yomi) + '\t' +
                    render_marked({item.yomi, item.gold});
  if (!item.category.empty()) row += '\t' + item.category;
  return row;
}

void write_samples(const std::filesystem::path& path, const std::vector<Item>& items) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string() + ": cannot write file");
  out << "# surface\tyomi\tmarked\tcategory\n";
  for (const auto& it : items) out << sample_row(it) << '\n';
  if (!out) throw IoError(path.string() + ": write failed");
}

namespace {

std::string key_of(const Item& it) { return it.surface + '\t' + kana_of(it.yomi); }

bool is_noun(Pos p) {
  return p == Pos::kNoun || p == Pos::kProperNoun || p == Pos::kPlaceName || p == Pos::kSurname;
}

}  // namespace

namespace {

// Appends `count` items whose key is not in `seen`, drawing stream indices
// 0, 1, 2, ... in order.
void draw_distinct(const Lexicon& lex, std::size_t count, std::uint64_t seed,
                   std::optional<SynthRule> fixed, std::unordered_set<std::string>& seen,
                   std::vector<Item>& out) {
  const Synthesizer syn(lex);
  const std::size_t max_draws = 100 * count + 1000;
  std::size_t added = 0;
  for (std::size_t i = 0; added < count; ++i) {
    if (i == max_draws) {
      throw std::invalid_argument("lexicon too small for " + std::to_string(count) +
                                  " distinct synthetic items");
    }
    Rng rng = Rng::derive(seed, 13, i);
    const SynthRule rule =
        fixed ? *fixed : (rng.below(2) ? SynthRule::kQuad : SynthRule::kPair);
    SyntheticSample s = syn.draw(rng, rule);
    Item it;
    it.surface = std::move(s.surface);
    it.yomi = std::move(s.yomi);
    it.gold = std::move(s.accent);
    it.category = "synthetic-" + std::string(to_string(rule));
    it.source = Source::kSynthetic;
    if (!seen.insert(key_of(it)).second) continue;
    out.push_back(std::move(it));
    ++added;
  }
}

}  // namespace

std::vector<Item> synthesize_items(const Lexicon& lex, std::size_t count, std::uint64_t seed,
                                   std::optional<SynthRule> fixed) {
  std::unordered_set<std::string> seen;
  std::vector<Item> items;
  items.reserve(count);
  draw_distinct(lex, count, seed, fixed, seen, items);
  return items;
}

Dataset build_dataset(const DatasetConfig& cfg, const Lexicon* lex) {
  if (cfg.eval_fraction < 0.0 || cfg.eval_fraction > 1.0) {
    throw std::invalid_argument("eval fraction must be in [0, 1]");
  }
  std::unordered_set<std::string> seen;
  std::vector<Item> annotated;
  for (const auto& path : cfg.annotated) {
    for (auto& it : read_samples(path, Source::kAnnotated)) {
      if (seen.insert(key_of(it)).second) annotated.push_back(std::move(it));
    }
  }

  std::vector<std::size_t> order(annotated.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng = Rng::derive(cfg.seed, 11);
  rng.shuffle(order);
  const auto n_eval = static_cast<std::size_t>(std::llround(cfg.eval_fraction * annotated.size()));
  std::vector<bool> is_eval(annotated.size(), false);
  for (std::size_t i = 0; i < n_eval; ++i) is_eval[order[i]] = true;

  Dataset ds;
  for (std::size_t i = 0; i < annotated.size(); ++i) {
    (is_eval[i] ? ds.eval : ds.train).push_back(std::move(annotated[i]));
  }

  if ((cfg.lexicon_words > 0 || cfg.synthetic > 0) && !lex) {
    throw std::invalid_argument("lexicon words and synthetic items need a lexicon");
  }
  if (cfg.lexicon_words > 0) {
    std::vector<std::size_t> nouns;
    for (std::size_t i = 0; i < lex->entries().size(); ++i) {
      if (is_noun(lex->entries()[i].pos)) nouns.push_back(i);
    }
    Rng pick = Rng::derive(cfg.seed, 12);
    pick.shuffle(nouns);
    nouns.resize(std::min(nouns.size(), cfg.lexicon_words));
    std::sort(nouns.begin(), nouns.end());
    for (std::size_t idx : nouns) {
      const LexEntry& e = lex->entries()[idx];
      Item it{e.surface, e.yomi, e.accent, "lexicon", Source::kLexicon, 0};
      if (seen.insert(key_of(it)).second) ds.train.push_back(std::move(it));
    }
  }
  if (cfg.synthetic > 0) {
    draw_distinct(*lex, cfg.synthetic, Rng::derive(cfg.seed, 14).next(), std::nullopt, seen,
                  ds.train);
  }
  if (ds.train.empty() && ds.eval.empty()) throw std::invalid_argument("dataset is empty");
  std::size_t id = 0;
  for (auto& it : ds.train) it.id = id++;
  for (auto& it : ds.eval) it.id = id++;
  return ds;
}

std::string to_json_line(const LogRecord& r) {
  nlohmann::json j;
  j["step"] = r.step;
  j["loss"] = r.loss;
  j["emr"] = r.emr ? nlohmann::json(*r.emr) : nlohmann::json(nullptr);
  j["ahd"] = r.ahd ? nlohmann::json(*r.ahd) : nlohmann::json(nullptr);
  return j.dump();
}

PreparedItem prepare(const Item& item, const Lexicon& lex, const SelectionConfig& sel, Mode mode) {
  PreparedItem p;
  p.gold = item.gold;
  p.id = item.id;
  auto ranked = rank_candidates(item.surface, item.yomi, lex, sel);
  const std::size_t m = std::min<std::size_t>(
      ranked.size(), static_cast<std::size_t>(mode == Mode::kTrain ? sel.m_train : sel.m_infer));
  for (std::size_t i = 0; i < m; ++i) p.candidates.push_back(featurize(ranked[i].segmentation, item.yomi));
  return p;
}

namespace {

constexpr std::size_t kInferBatch = 64;

std::vector<AccentVector> predict_prepared(const Network<float>& net,
                                           const std::vector<PreparedItem>& items) {
  std::vector<AccentVector> out;
  out.reserve(items.size());
  for (std::size_t lo = 0; lo < items.size(); lo += kInferBatch) {
    std::vector<FeaturePair> batch;
    for (std::size_t i = lo; i < std::min(items.size(), lo + kInferBatch); ++i) {
      batch.push_back(items[i].candidates.front());
    }
    for (const auto& o : net.infer(batch)) out.push_back(decode(o));
  }
  return out;
}

}  // namespace

std::vector<AccentVector> predict_items(const Network<float>& net, const std::vector<Item>& items,
                                        const Lexicon& lex, const SelectionConfig& sel) {
  std::vector<PreparedItem> prepared;
  prepared.reserve(items.size());
  for (const auto& it : items) prepared.push_back(prepare(it, lex, sel, Mode::kInfer));
  return predict_prepared(net, prepared);
}

CategoryReport evaluate_items(const Network<float>& net, const std::vector<Item>& items,
                              const Lexicon& lex, const SelectionConfig& sel) {
  const auto pred = predict_items(net, items, lex, sel);
  std::vector<EvalPair> pairs;
  for (std::size_t i = 0; i < items.size(); ++i) {
    pairs.push_back({pred[i], items[i].gold, items[i].category});
  }
  return evaluate(pairs);
}

TrainResult train_loop(const TrainConfig& cfg, const Dataset& ds, const Lexicon& lex,
                       std::optional<TrainState> resume,
                       const std::function<void(const LogRecord&)>& on_log) {
  if (cfg.batch < 1) throw std::invalid_argument("batch size must be positive");
  if (cfg.steps < 0) throw std::invalid_argument("steps must not be negative");
  cfg.selection.validate();

  TrainResult result{resume ? std::move(*resume) : TrainState(cfg.model), {}, {}};
  TrainState& state = result.state;
  if (!resume) {
    Rng init = Rng::derive(cfg.seed, 21);
    state.net.init(init);
  }

  std::ofstream log_file;
  if (!cfg.log.empty()) {
    log_file.open(cfg.log, resume ? std::ios::app : std::ios::trunc);
    if (!log_file) throw IoError(cfg.log.string() + ": cannot write file");
  }
  auto save = [&](const TrainState& s) {
    if (!cfg.checkpoint.empty()) save_checkpoint(s, cfg.checkpoint);
  };

  std::vector<PreparedItem> train, eval;
  if (state.step < cfg.steps) {
    if (ds.train.empty()) throw std::invalid_argument("training split is empty");
    for (const auto& it : ds.train) train.push_back(prepare(it, lex, cfg.selection, Mode::kTrain));
  }
  for (const auto& it : ds.eval) eval.push_back(prepare(it, lex, cfg.selection, Mode::kInfer));

  const std::size_t n = train.size();
  const std::size_t bsz = static_cast<std::size_t>(cfg.batch);
  std::map<std::uint64_t, std::vector<std::size_t>> perms;
  auto slot = [&](std::uint64_t global) -> std::size_t {
    const std::uint64_t epoch = global / n;
    auto it = perms.find(epoch);
    if (it == perms.end()) {
      std::vector<std::size_t> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = i;
      Rng r = Rng::derive(cfg.seed, 31, epoch);
      r.shuffle(p);
      perms.erase(perms.begin(), perms.lower_bound(epoch));
      it = perms.emplace(epoch, std::move(p)).first;
    }
    return it->second[global % n];
  };

  double loss_sum = 0.0;
  std::int64_t loss_count = 0;
  auto emit = [&] {
    LogRecord rec;
    rec.step = state.step;
    rec.loss = loss_count ? loss_sum / static_cast<double>(loss_count) : 0.0;
    if (!eval.empty()) {
      const auto pred = predict_prepared(state.net, eval);
      EvalCounts c;
      for (std::size_t i = 0; i < eval.size(); ++i) c.add(pred[i], eval[i].gold);
      const EvalReport r = EvalReport::from(c);
      rec.emr = r.emr;
      rec.ahd = r.ahd;
    }
    loss_sum = 0.0;
    loss_count = 0;
    result.log.push_back(rec);
    if (log_file) log_file << to_json_line(rec) << '\n' << std::flush;
    if (on_log) on_log(rec);
  };

  TensorSet<float> grad = state.net.params().zeros_like();
  std::vector<Example> batch(bsz);
  while (state.step < cfg.steps) {
    const std::int64_t s = state.step;
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < bsz; ++j) {
      const std::uint64_t global = static_cast<std::uint64_t>(s) * bsz + j;
      const PreparedItem& p = train[slot(global)];
      Rng pick = Rng::derive(cfg.seed, 32, global);
      batch[j].features = p.candidates[pick.below(p.candidates.size())];
      batch[j].gold = p.gold;
      ids.push_back(p.id);
    }
    const TensorSet<float> stats_backup = state.net.stats();
    grad.fill(0.0f);
    const double loss = state.net.train_pass(batch, s, Rng::derive(cfg.seed, 41, s).next(), &grad,
                                             true);
    try {
      if (!std::isfinite(loss)) throw TrainingError("non-finite loss");
      adam_step(state, grad, cfg.adam);
    } catch (const std::exception& e) {
      state.net.stats() = stats_backup;
      save(state);
      throw TrainingError("step " + std::to_string(s) + ": " + e.what());
    }
    result.trained_ids.insert(ids.begin(), ids.end());
    loss_sum += loss;
    ++loss_count;
    if ((cfg.eval_interval > 0 && state.step % cfg.eval_interval == 0) || state.step == cfg.steps) {
      emit();
    }
    if (cfg.checkpoint_interval > 0 && state.step % cfg.checkpoint_interval == 0 &&
        state.step != cfg.steps) {
      save(state);
    }
  }
  save(state);
  return result;
}

}  // namespace pitchdict
