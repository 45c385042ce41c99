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

#include "pitchdict/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pitchdict/dictgen.hpp"
#include "pitchdict/error.hpp"
#include "pitchdict/features.hpp"
#include "pitchdict/lattice.hpp"
#include "pitchdict/metrics.hpp"
#include "pitchdict/model.hpp"
#include "pitchdict/sagisaka.hpp"
#include "pitchdict/text.hpp"
#include "pitchdict/train.hpp"

#ifndef PITCHDICT_DEFAULT_LEXICON
#define PITCHDICT_DEFAULT_LEXICON "mini_lexicon.tsv"
#endif

namespace pitchdict::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void write_manifest(const fs::path& path, const json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(path.string() + ": cannot write file");
  f << j.dump(2) << '\n';
}

fs::path manifest_path(const fs::path& artifact) {
  return fs::path(artifact.string() + ".manifest.json");
}

json selection_json(const SelectionConfig& s) {
  return {{"r_max", s.r_max}, {"m_train", s.m_train}, {"m_infer", s.m_infer}};
}

json model_json(const ModelConfig& m) {
  return {{"channels", m.channels},       {"kernel", m.kernel},
          {"dilations", m.dilations},     {"dropout", m.dropout},
          {"target_gold", m.target_gold}, {"guide_width", m.guide_width},
          {"guide_weight", m.guide_weight}, {"renorm_warmup", m.renorm_warmup}};
}

SynthRule rule_of(const std::string& s) { return s == "pair" ? SynthRule::kPair : SynthRule::kQuad; }

struct Options {
  std::string lexicon = default_lexicon();
  std::uint64_t seed = 0;

  // morae
  std::string kana;
  // nbest, features, predict
  std::string surface, yomi;
  std::size_t k = 20;
  std::string mode = "infer";
  SelectionConfig selection;
  // synth
  std::size_t count = 100;
  std::string rule = "mixed";
  std::string out;
  // train
  std::vector<std::string> data;
  std::size_t synth = 0;
  std::size_t lexicon_words = 0;
  double eval_fraction = 0.2;
  std::int64_t steps = 10000;
  int batch = 32;
  std::int64_t eval_interval = 500;
  std::int64_t checkpoint_interval = 0;
  std::string ckpt;
  std::string log;
  std::string resume;
  std::string eval_split;
  int channels = 64;
  // eval
  bool by_category = false;
  // predict
  std::string input;
  // build-dict
  std::string wordlist;
  int base_cost = 5000;
  std::vector<std::string> offsets;
  bool detect_ignored = false;
};

int cmd_morae(const Options& o, std::ostream& out) {
  for (const Mora& m : parse_kana(o.kana)) {
    out << m.kana_text << '\t' << m.romaji() << '\t' << to_string(m.consonant) << '\t'
        << to_string(m.vowel) << '\t' << to_string(m.special) << '\n';
  }
  return 0;
}

int cmd_nbest(const Options& o, std::ostream& out) {
  const Lexicon lex = Lexicon::load(o.lexicon);
  if (o.k == 0) throw UsageError("-k must be positive");
  for (const auto& seg : nbest(Lattice(o.surface, lex), o.k)) {
    out << "# rank " << seg.rank << " cost " << seg.total_cost << '\n';
    for (const auto& e : seg.entries) {
      out << e.surface << '\t' << kana_of(e.yomi) << '\t' << render_marked(e.reading()) << '\t'
          << to_string(e.pos) << '\t' << to_string(e.sandhi) << (e.unknown ? "\tunknown" : "")
          << '\n';
    }
  }
  return 0;
}

int cmd_features(const Options& o, std::ostream& out) {
  const Lexicon lex = Lexicon::load(o.lexicon);
  const MoraSeq y = parse_kana(o.yomi);
  Rng rng(o.seed);
  const Segmentation seg = select_candidates(o.surface, y, lex, o.selection,
                                             o.mode == "train" ? Mode::kTrain : Mode::kInfer, rng);
  out << "# segmentation";
  for (const auto& e : seg.entries) out << ' ' << e.surface << '/' << kana_of(e.yomi);
  out << '\n' << features_to_tsv(featurize(seg, y));
  return 0;
}

int cmd_synth(const Options& o, std::ostream& out) {
  const Lexicon lex = Lexicon::load(o.lexicon);
  std::optional<SynthRule> rule;
  if (o.rule != "mixed") rule = rule_of(o.rule);
  const auto items = synthesize_items(lex, o.count, o.seed, rule);
  if (o.out.empty()) {
    for (const auto& it : items) out << sample_row(it) << '\n';
    return 0;
  }
  write_samples(o.out, items);
  write_manifest(manifest_path(o.out), {{"command", "synth"},
                                        {"lexicon", o.lexicon},
                                        {"seed", o.seed},
                                        {"count", o.count},
                                        {"rule", o.rule},
                                        {"output", o.out}});
  out << "wrote " << items.size() << " samples to " << o.out << '\n';
  return 0;
}

int cmd_train(const Options& o, std::ostream& out) {
  const Lexicon lex = Lexicon::load(o.lexicon);
  DatasetConfig dc;
  for (const auto& d : o.data) dc.annotated.emplace_back(d);
  dc.synthetic = o.synth;
  dc.lexicon_words = o.lexicon_words;
  dc.eval_fraction = o.eval_fraction;
  dc.seed = o.seed;
  const Dataset ds = build_dataset(dc, &lex);
  if (!o.eval_split.empty()) write_samples(o.eval_split, ds.eval);

  TrainConfig tc;
  tc.steps = o.steps;
  tc.batch = o.batch;
  tc.seed = o.seed;
  tc.eval_interval = o.eval_interval;
  tc.checkpoint_interval = o.checkpoint_interval;
  tc.checkpoint = o.ckpt;
  tc.log = o.log;
  tc.selection = o.selection;
  tc.model.channels = o.channels;
  std::optional<TrainState> resume;
  if (!o.resume.empty()) resume = load_checkpoint(o.resume);

  const TrainResult r = train_loop(tc, ds, lex, std::move(resume), [&](const LogRecord& rec) {
    out << to_json_line(rec) << '\n' << std::flush;
  });
  json manifest = {{"command", "train"},
                   {"lexicon", o.lexicon},
                   {"seed", o.seed},
                   {"data", o.data},
                   {"synthetic", o.synth},
                   {"lexicon_words", o.lexicon_words},
                   {"eval_fraction", o.eval_fraction},
                   {"train_items", ds.train.size()},
                   {"eval_items", ds.eval.size()},
                   {"steps", o.steps},
                   {"batch", o.batch},
                   {"eval_interval", o.eval_interval},
                   {"checkpoint_interval", o.checkpoint_interval},
                   {"resume", o.resume},
                   {"selection", selection_json(o.selection)},
                   {"model", model_json(tc.model)},
                   {"final_step", r.state.step}};
  if (!r.log.empty()) manifest["last_log"] = json::parse(to_json_line(r.log.back()));
  if (!o.ckpt.empty()) write_manifest(manifest_path(o.ckpt), manifest);
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Lexicon lex = Lexicon::load(o.lexicon);
  const TrainState state = load_checkpoint(o.ckpt);
  std::vector<Item> items;
  for (const auto& d : o.data) {
    auto part = read_samples(d);
    items.insert(items.end(), part.begin(), part.end());
  }
  const CategoryReport r = evaluate_items(state.net, items, lex, o.selection);
  out << format_report(r.overall);
  if (o.by_category) out << '\n' << format_category_table(r);
  return 0;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const Lexicon lex = Lexicon::load(o.lexicon);
  const TrainState state = load_checkpoint(o.ckpt);
  if (o.input.empty()) {
    if (o.surface.empty() || o.yomi.empty()) {
      throw UsageError("predict needs --surface and --yomi, or --input");
    }
    const MoraSeq y = parse_kana(o.yomi);
    out << render_marked({y, predict(state.net, o.surface, y, lex, o.selection)}) << '\n';
    return 0;
  }
  std::vector<Item> items;
  const auto lines = text::read_lines(o.input);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (text::trim(lines[i]).empty() || lines[i].front() == '#') continue;
    const auto cols = text::split(lines[i], '\t');
    if (cols.size() < 2) throw FormatError(o.input, i + 1, "expected surface TAB yomi");
    Item it;
    it.surface = cols[0];
    try {
      it.yomi = parse_kana(cols[1]);
    } catch (const NotationError& e) {
      throw FormatError(o.input, i + 1, e.what());
    }
    items.push_back(std::move(it));
  }
  const auto pred = predict_items(state.net, items, lex, o.selection);
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << items[i].surface << '\t' << kana_of(items[i].yomi) << '\t'
        << render_marked({items[i].yomi, pred[i]}) << '\n';
  }
  return 0;
}

int cmd_build_dict(const Options& o, std::ostream& out) {
  const Lexicon lex = Lexicon::load(o.lexicon);
  const TrainState state = load_checkpoint(o.ckpt);
  DictConfig cfg;
  cfg.cost.base_cost = o.base_cost;
  cfg.classify.detect_ignored = o.detect_ignored;
  cfg.selection = o.selection;
  json offsets = json::object();
  for (const auto& spec : o.offsets) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("--offset expects CATEGORY=INT, got " + spec);
    const auto cat = parse_category(spec.substr(0, eq));
    if (!cat) throw UsageError("unknown category in --offset: " + spec.substr(0, eq));
    int v;
    try {
      v = text::parse_int(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad offset value in " + spec);
    }
    cfg.cost.offsets[*cat] = v;
    offsets[std::string(to_string(*cat))] = v;
  }
  const DictResult r = build_dictionary(fs::path(o.wordlist), state.net, lex, cfg);
  write_dictionary(r, o.out);
  json skipped = json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back({{"line", s.line}, {"text", s.text}, {"reason", s.reason}});
  }
  std::map<std::string, std::size_t> per_cat;
  for (const auto& row : r.rows) ++per_cat[std::string(to_string(row.category))];
  write_manifest(manifest_path(o.out), {{"command", "build-dict"},
                                        {"lexicon", o.lexicon},
                                        {"checkpoint", o.ckpt},
                                        {"wordlist", o.wordlist},
                                        {"output", o.out},
                                        {"base_cost", o.base_cost},
                                        {"offsets", offsets},
                                        {"detect_ignored", o.detect_ignored},
                                        {"selection", selection_json(o.selection)},
                                        {"input_rows", r.input_rows},
                                        {"written_rows", r.rows.size()},
                                        {"categories", per_cat},
                                        {"skipped", skipped}});
  out << "wrote " << r.rows.size() << " rows to " << o.out << ", skipped " << r.skipped.size()
      << '\n';
  for (const auto& s : r.skipped) out << "skipped line " << s.line << ": " << s.reason << '\n';
  return 0;
}

}  // namespace

std::string default_lexicon() {
  if (const char* env = std::getenv("PITCHDICT_LEXICON"); env && *env) return env;
  return PITCHDICT_DEFAULT_LEXICON;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Japanese pitch-accent estimation and dictionary building", "pitchdict"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_lexicon = [&](CLI::App* c) {
    c->add_option("--lexicon", o.lexicon, "Lexicon TSV (or dictionary CSV)");
  };
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed"); };
  auto add_selection = [&](CLI::App* c) {
    c->add_option("--r-max", o.selection.r_max, "Depth of the n-best analysis")
        ->check(CLI::PositiveNumber);
    c->add_option("--m-train", o.selection.m_train, "Candidates sampled in training")
        ->check(CLI::PositiveNumber);
    c->add_option("--m-infer", o.selection.m_infer, "Candidates kept at inference")
        ->check(CLI::PositiveNumber);
  };

  auto* morae = app.add_subcommand("morae", "Split kana into morae");
  morae->add_option("kana", o.kana, "Kana text")->required();

  auto* nb = app.add_subcommand("nbest", "N-best segmentations of a surface");
  add_lexicon(nb);
  nb->add_option("--surface", o.surface)->required();
  nb->add_option("-k", o.k, "Number of paths");

  auto* feat = app.add_subcommand("features", "Dump the feature pair of a word as TSV");
  add_lexicon(feat);
  add_seed(feat);
  add_selection(feat);
  feat->add_option("--surface", o.surface)->required();
  feat->add_option("--yomi", o.yomi)->required();
  feat->add_option("--mode", o.mode)->check(CLI::IsMember({"train", "infer"}));

  auto* synth = app.add_subcommand("synth", "Generate synthetic compounds");
  add_lexicon(synth);
  add_seed(synth);
  synth->add_option("--count", o.count);
  synth->add_option("--rule", o.rule)->check(CLI::IsMember({"pair", "quad", "mixed"}));
  synth->add_option("--out", o.out, "Output TSV (stdout when omitted)");

  auto* train = app.add_subcommand("train", "Train a model");
  add_lexicon(train);
  add_seed(train);
  add_selection(train);
  train->add_option("--data", o.data, "Annotated sample TSV (repeatable)");
  train->add_option("--synth", o.synth, "Synthetic compounds added to training");
  train->add_option("--lexicon-words", o.lexicon_words, "Lexicon nouns added to training");
  train->add_option("--eval-fraction", o.eval_fraction)->check(CLI::Range(0.0, 1.0));
  train->add_option("--steps", o.steps)->check(CLI::NonNegativeNumber);
  train->add_option("--batch", o.batch)->check(CLI::PositiveNumber);
  train->add_option("--eval-interval", o.eval_interval)->check(CLI::NonNegativeNumber);
  train->add_option("--checkpoint-interval", o.checkpoint_interval)
      ->check(CLI::NonNegativeNumber);
  train->add_option("--ckpt", o.ckpt, "Checkpoint output")->required();
  train->add_option("--log", o.log, "Metrics log (JSON lines)");
  train->add_option("--resume", o.resume, "Checkpoint to continue from");
  train->add_option("--eval-split", o.eval_split, "Write the held-out items here");
  train->add_option("--channels", o.channels)->check(CLI::PositiveNumber);

  auto* ev = app.add_subcommand("eval", "Evaluate a checkpoint on sample files");
  add_lexicon(ev);
  add_selection(ev);
  ev->add_option("--data", o.data)->required();
  ev->add_option("--ckpt", o.ckpt)->required();
  ev->add_flag("--by-category", o.by_category, "Print the per-category table");

  auto* pred = app.add_subcommand("predict", "Predict accent marks");
  add_lexicon(pred);
  add_selection(pred);
  pred->add_option("--ckpt", o.ckpt)->required();
  pred->add_option("--surface", o.surface);
  pred->add_option("--yomi", o.yomi);
  pred->add_option("--input", o.input, "TSV of surface TAB yomi");

  auto* bd = app.add_subcommand("build-dict", "Build an accent dictionary from a word list");
  add_lexicon(bd);
  add_selection(bd);
  bd->add_option("--wordlist", o.wordlist)->required();
  bd->add_option("--ckpt", o.ckpt)->required();
  bd->add_option("--out", o.out)->required();
  bd->add_option("--base-cost", o.base_cost)->check(CLI::Range(kMinCost, kMaxCost));
  bd->add_option("--offset", o.offsets, "Cost offset CATEGORY=INT (repeatable)");
  bd->add_flag("--detect-ignored", o.detect_ignored, "Skip likely noisy katakana words");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*morae) return cmd_morae(o, out);
    if (*nb) return cmd_nbest(o, out);
    if (*feat) return cmd_features(o, out);
    if (*synth) return cmd_synth(o, out);
    if (*train) return cmd_train(o, out);
    if (*ev) return cmd_eval(o, out);
    if (*pred) return cmd_predict(o, out);
    if (*bd) return cmd_build_dict(o, out);
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: io: " << e.what() << '\n';
    return 1;
  } catch (const FormatError& e) {
    err << "error: format: " << e.what() << '\n';
    return 1;
  } catch (const NotationError& e) {
    err << "error: notation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace pitchdict::cli
