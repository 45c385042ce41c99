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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pitchdict/mora.hpp"

namespace pitchdict {

struct LabelCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  std::size_t predicted() const { return tp + fp; }
  std::size_t actual() const { return tp + fn; }
  // 1.0 when the denominator is zero; check predicted()/actual() for support.
  double precision() const;
  double recall() const;

  friend bool operator==(const LabelCounts&, const LabelCounts&) = default;
};

struct EvalCounts {
  std::size_t words = 0;
  std::size_t exact = 0;
  std::size_t hamming = 0;  // summed over words
  LabelCounts raise;
  LabelCounts lower;

  // Throws std::invalid_argument on a length mismatch.
  void add(const AccentVector& predicted, const AccentVector& gold);
  EvalCounts& operator+=(const EvalCounts& o);

  friend bool operator==(const EvalCounts&, const EvalCounts&) = default;
};

struct EvalReport {
  EvalCounts counts;
  double emr = 0.0;
  double ahd = 0.0;
  double raise_precision = 1.0;
  double raise_recall = 1.0;
  double lower_precision = 1.0;
  double lower_recall = 1.0;

  static EvalReport from(const EvalCounts& c);
};

struct EvalPair {
  AccentVector predicted;
  AccentVector gold;
  std::string category;
};

struct CategoryReport {
  EvalReport overall;
  std::map<std::string, EvalReport> by_category;
};

// Throws std::invalid_argument on an empty list or a length mismatch.
CategoryReport evaluate(const std::vector<EvalPair>& pairs);

// key=value lines; fractions printed with six decimals.
std::string format_report(const EvalReport& r);

// Columns: category, words, EMR, AHD, raise P, raise R, lower P, lower R.
std::string format_category_table(const CategoryReport& r);

}  // namespace pitchdict
