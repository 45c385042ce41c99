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

#include "pitchdict/metrics.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pitchdict {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void count_label(LabelCounts& c, bool pred, bool gold) {
  if (pred && gold) {
    ++c.tp;
  } else if (pred) {
    ++c.fp;
  } else if (gold) {
    ++c.fn;
  }
}

}  // namespace

double LabelCounts::precision() const { return ratio(tp, tp + fp); }
double LabelCounts::recall() const { return ratio(tp, tp + fn); }

void EvalCounts::add(const AccentVector& predicted, const AccentVector& gold) {
  if (predicted.size() != gold.size()) {
    throw std::invalid_argument("predicted and gold accents differ in length");
  }
  ++words;
  std::size_t diff = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predicted[i] != gold[i]) ++diff;
    count_label(raise, predicted[i] == Accent::kRaise, gold[i] == Accent::kRaise);
    count_label(lower, predicted[i] == Accent::kLower, gold[i] == Accent::kLower);
  }
  hamming += diff;
  if (diff == 0) ++exact;
}

EvalCounts& EvalCounts::operator+=(const EvalCounts& o) {
  words += o.words;
  exact += o.exact;
  hamming += o.hamming;
  for (auto [mine, theirs] : {std::pair{&raise, &o.raise}, std::pair{&lower, &o.lower}}) {
    mine->tp += theirs->tp;
    mine->fp += theirs->fp;
    mine->fn += theirs->fn;
  }
  return *this;
}

EvalReport EvalReport::from(const EvalCounts& c) {
  EvalReport r;
  r.counts = c;
  r.emr = c.words ? static_cast<double>(c.exact) / c.words : 0.0;
  r.ahd = c.words ? static_cast<double>(c.hamming) / c.words : 0.0;
  r.raise_precision = c.raise.precision();
  r.raise_recall = c.raise.recall();
  r.lower_precision = c.lower.precision();
  r.lower_recall = c.lower.recall();
  return r;
}

CategoryReport evaluate(const std::vector<EvalPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("nothing to evaluate");
  EvalCounts all;
  std::map<std::string, EvalCounts> cats;
  for (const auto& p : pairs) {
    all.add(p.predicted, p.gold);
    cats[p.category].add(p.predicted, p.gold);
  }
  CategoryReport r;
  r.overall = EvalReport::from(all);
  for (const auto& [name, c] : cats) r.by_category.emplace(name, EvalReport::from(c));
  return r;
}

std::string format_report(const EvalReport& r) {
  const auto& c = r.counts;
  std::ostringstream out;
  out << "words=" << c.words << '\n'
      << "exact=" << c.exact << '\n'
      << "hamming=" << c.hamming << '\n'
      << "emr=" << fixed6(r.emr) << '\n'
      << "ahd=" << fixed6(r.ahd) << '\n'
      << "raise_tp=" << c.raise.tp << '\n'
      << "raise_fp=" << c.raise.fp << '\n'
      << "raise_fn=" << c.raise.fn << '\n'
      << "raise_precision=" << fixed6(r.raise_precision) << '\n'
      << "raise_precision_support=" << c.raise.predicted() << '\n'
      << "raise_recall=" << fixed6(r.raise_recall) << '\n'
      << "raise_recall_support=" << c.raise.actual() << '\n'
      << "lower_tp=" << c.lower.tp << '\n'
      << "lower_fp=" << c.lower.fp << '\n'
      << "lower_fn=" << c.lower.fn << '\n'
      << "lower_precision=" << fixed6(r.lower_precision) << '\n'
      << "lower_precision_support=" << c.lower.predicted() << '\n'
      << "lower_recall=" << fixed6(r.lower_recall) << '\n'
      << "lower_recall_support=" << c.lower.actual() << '\n';
  return out.str();
}

std::string format_category_table(const CategoryReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& name, const EvalReport& e) {
    out << name << '\t' << e.counts.words << '\t' << fixed6(e.emr) << '\t' << fixed6(e.ahd) << '\t'
        << fixed6(e.raise_precision) << '\t' << fixed6(e.raise_recall) << '\t'
        << fixed6(e.lower_precision) << '\t' << fixed6(e.lower_recall) << '\n';
  };
  out << "category\twords\temr\tahd\traise_p\traise_r\tlower_p\tlower_r\n";
  for (const auto& [name, e] : r.by_category) row(name.empty() ? "-" : name, e);
  row("all", r.overall);
  return out.str();
}

}  // namespace pitchdict
