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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gradcheck.hpp"
#include "oracles.hpp"
#include "pitchdict/cli.hpp"
#include "pitchdict/features.hpp"
#include "pitchdict/lattice.hpp"
#include "pitchdict/train.hpp"
#include "test_util.hpp"

namespace pitchdict {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::data_path;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int prec = 4) {
  std::ostringstream s;
  s.precision(prec);
  s << v;
  return s.str();
}

const Lexicon& mini() {
  static const Lexicon lex = Lexicon::load(data_path("mini_lexicon.tsv"));
  return lex;
}

int cli_run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  if (code != 0) std::cerr << e.str();
  return code;
}

Verdict gradient() {
  const auto t0 = Clock::now();
  Rng rng(10);
  ModelConfig cfg;
  cfg.channels = 8;
  Network<double> net(cfg);
  net.init(rng);
  std::vector<Example> batch;
  for (int i = 0; i < 2; ++i) batch.push_back(testing::random_example(rng, 6));
  const auto res = testing::gradient_check(net, batch, 1e-4);
  const double t = seconds_since(t0);
  return {res.worst < 1e-3 && t < 60.0,
          std::to_string(res.checked) + " parameters, worst relative error " + fmt(res.worst) +
              " at " + res.worst_at + ", " + fmt(t, 3) + " s"};
}

Verdict learnability() {
  const auto t0 = Clock::now();
  const auto dir = testing::scratch_dir("accept_learn");
  const auto items = synthesize_items(mini(), 5000, 7);
  write_samples(dir / "synthetic.tsv", items);
  DatasetConfig dc;
  dc.annotated = {dir / "synthetic.tsv"};
  dc.eval_fraction = 0.2;
  dc.seed = 1;
  const Dataset ds = build_dataset(dc, &mini());

  TrainConfig tc;
  tc.batch = 32;
  tc.seed = 1;
  tc.eval_interval = 0;
  std::optional<TrainState> state;
  EvalReport rep;
  std::int64_t step = 0;
  bool met = false;
  while (step < 50000 && !met) {
    tc.steps = step + 1000;
    state = train_loop(tc, ds, mini(), std::move(state)).state;
    step = state->step;
    rep = evaluate_items(state->net, ds.eval, mini()).overall;
    met = rep.emr >= 0.80 && rep.ahd <= 0.40;
    std::cout << "  step " << step << ": emr " << fmt(rep.emr) << ", ahd " << fmt(rep.ahd)
              << ", " << fmt(seconds_since(t0), 4) << " s" << std::endl;
  }
  const double t = seconds_since(t0);
  return {met && t <= 1800.0,
          std::to_string(ds.train.size()) + "/" + std::to_string(ds.eval.size()) +
              " items, " + std::to_string(step) + " steps, held-out emr " + fmt(rep.emr) +
              ", ahd " + fmt(rep.ahd) + ", " + fmt(t, 4) + " s"};
}

Verdict nbest_exact() {
  const auto t0 = Clock::now();
  const auto surfaces = testing::short_surfaces(mini(), 6);
  std::size_t bad = 0;
  std::string first;
  for (const auto& s : surfaces) {
    const std::string diff = testing::compare_nbest(s, mini(), 20);
    if (!diff.empty() && bad++ == 0) first = s + ": " + diff;
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < 10.0, std::to_string(surfaces.size()) + " surfaces, " +
                                    std::to_string(bad) + " mismatches, " + fmt(t, 3) + " s" +
                                    (first.empty() ? "" : ", first: " + first)};
}

MoraSeq random_morae(Rng& rng, std::size_t max_len) {
  static const char* kAlphabet[] = {"か", "が", "さ", "し", "ん", "っ", "きゃ", "あ", "ー", "カ"};
  std::string s = "あ";
  const std::size_t n = rng.below(max_len + 1);
  for (std::size_t i = 0; i < n; ++i) s += kAlphabet[rng.below(10)];
  MoraSeq m = parse_kana(s);
  m.erase(m.begin());
  return m;
}

Verdict levenshtein_pairs() {
  Rng rng(2024);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const MoraSeq a = random_morae(rng, 8), b = random_morae(rng, 8);
    if (levenshtein(a, b) != testing::levenshtein_recursive(a, b)) ++bad;
  }
  return {bad == 0, "1000 pairs, " + std::to_string(bad) + " mismatches"};
}

Verdict notation() {
  const auto path = data_path("fixtures/notation_500.tsv");
  std::size_t rows = 0, ok = 0;
  for (const auto& line : text::read_lines(path)) {
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    const auto cols = text::split(line, '\t');
    try {
      const AccentedReading r = parse_marked(cols.at(2));
      if (render_marked(r) == cols[2] && parse_marked(render_marked(r)) == r &&
          kana_of(r.morae) == cols[1]) {
        ++ok;
      }
    } catch (const std::exception&) {
    }
  }
  return {rows == 500 && ok == rows,
          std::to_string(ok) + "/" + std::to_string(rows) + " rows round trip"};
}

Verdict metrics_golden() {
  const auto r = evaluate(testing::read_eval_pairs(data_path("fixtures/metrics_5.tsv")));
  const bool overall =
      format_report(r.overall) == testing::slurp(data_path("fixtures/metrics_5.golden"));
  const bool table = format_category_table(r) ==
                     testing::slurp(data_path("fixtures/metrics_5_categories.golden"));
  return {overall && table, std::string("overall ") + (overall ? "matches" : "differs") +
                                ", per-category " + (table ? "matches" : "differs")};
}

struct PipelineRun {
  std::string synth, ckpt, predictions;
  fs::path ckpt_path;
};

PipelineRun pipeline(const fs::path& dir) {
  const std::string lex = data_path("mini_lexicon.tsv").string();
  const auto synth = (dir / "synth.tsv").string();
  const auto ckpt = (dir / "model.ckpt").string();
  PipelineRun r;
  r.ckpt_path = ckpt;
  if (cli_run({"synth", "--lexicon", lex, "--count", "300", "--seed", "5", "--out", synth}) != 0 ||
      cli_run({"train", "--lexicon", lex, "--data", synth, "--steps", "100", "--eval-interval",
               "50", "--seed", "5", "--ckpt", ckpt}) != 0 ||
      cli_run({"predict", "--lexicon", lex, "--ckpt", ckpt, "--input", synth},
              &r.predictions) != 0) {
    return {};
  }
  r.synth = testing::slurp(synth);
  r.ckpt = testing::slurp(ckpt);
  return r;
}

fs::path g_pipeline_ckpt;

Verdict determinism() {
  const PipelineRun a = pipeline(testing::scratch_dir("accept_det_a"));
  const PipelineRun b = pipeline(testing::scratch_dir("accept_det_b"));
  g_pipeline_ckpt = a.ckpt_path;
  const bool ran = !a.ckpt.empty() && !b.ckpt.empty() && !a.predictions.empty();
  return {ran && a.synth == b.synth && a.ckpt == b.ckpt && a.predictions == b.predictions,
          std::string(ran ? "" : "pipeline failed, ") + "synthetic data " +
              (a.synth == b.synth ? "identical" : "differs") + ", checkpoint (" +
              std::to_string(a.ckpt.size()) + " bytes) " +
              (a.ckpt == b.ckpt ? "identical" : "differs") + ", predictions " +
              (a.predictions == b.predictions ? "identical" : "differs")};
}

Verdict dictionary() {
  const auto dir = testing::scratch_dir("accept_dict");
  const auto out = dir / "user.csv";
  if (g_pipeline_ckpt.empty() || !fs::exists(g_pipeline_ckpt)) return {false, "no checkpoint"};
  if (cli_run({"build-dict", "--lexicon", data_path("mini_lexicon.tsv").string(), "--ckpt",
               g_pipeline_ckpt.string(), "--wordlist",
               data_path("fixtures/wordlist_50.tsv").string(), "--out", out.string()}) != 0) {
    return {false, "build-dict failed"};
  }
  const Lexicon back = Lexicon::load(out);
  std::size_t valid = 0;
  for (const auto& e : back.entries()) {
    if (!validate_accent(e.accent) && e.accent.size() == e.yomi.size() && !e.surface.empty()) {
      ++valid;
    }
  }
  return {back.size() == 50 && valid == 50,
          std::to_string(back.size()) + " entries reloaded, " + std::to_string(valid) + " valid"};
}

Verdict ichinichi_senshuu() {
  const MoraSeq y = parse_kana("いちじつせんしゅう");
  Rng rng(0);
  const auto chosen = select_candidates("一日千秋", y, mini(), {}, Mode::kInfer, rng);
  const auto top = nbest(build_lattice("一日千秋", mini()), 1).at(0);
  const std::size_t d_sel = levenshtein(chosen.yomi(), y);
  const std::size_t d_top = levenshtein(top.yomi(), y);
  return {d_sel == 0 && d_top > 0,
          "selected " + kana_of(chosen.yomi()) + " (distance " + std::to_string(d_sel) +
              "), rank-1 " + kana_of(top.yomi()) + " (distance " + std::to_string(d_top) + ")"};
}

}  // namespace
}  // namespace pitchdict

// Optional arguments select criteria by number; all run by default.
int main(int argc, char** argv) {
  using namespace pitchdict;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"gradient check", gradient},
      {"learnability", learnability},
      {"n-best exactness", nbest_exact},
      {"levenshtein oracle", levenshtein_pairs},
      {"notation round trip", notation},
      {"metrics golden file", metrics_golden},
      {"determinism", determinism},
      {"dictionary round trip", dictionary},
      {"一日千秋 demo", ichinichi_senshuu},
  };
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int a = 1; a < argc; ++a) {
    const int n = std::atoi(argv[a]);
    if (n >= 1 && n <= static_cast<int>(criteria.size())) selected[n - 1] = true;
  }
  int failed = 0, ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    ++ran;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << ": "
              << v.detail << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
