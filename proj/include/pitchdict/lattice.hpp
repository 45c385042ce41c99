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

#include <string>
#include <string_view>
#include <vector>

#include "pitchdict/lexicon.hpp"

namespace pitchdict {

// One ranked path through the lattice.
struct Segmentation {
  std::vector<LexEntry> entries;
  std::vector<std::size_t> spans;  // code points covered by each entry
  std::vector<int> entry_indices;  // lexicon indices, -1 for unknown nodes
  int total_cost = 0;
  int rank = 0;  // 1-based

  // Concatenated yomi of all entries.
  MoraSeq yomi() const;
  std::string surface() const;
};

// Sum of unigram costs plus every connection cost, including the sentence
// boundaries on both sides.
int path_cost(const Lexicon& lex, const std::vector<LexEntry>& entries);

class Lattice {
 public:
  struct Node {
    LexMatch match;
    std::size_t begin = 0;
    std::size_t end = 0;
  };

  // Throws std::invalid_argument for an empty surface.
  Lattice(std::string_view surface, const Lexicon& lex);

  const std::u32string& surface() const { return surface_; }
  const Lexicon& lexicon() const { return *lex_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  // Indices into nodes() of the nodes starting at a code point position.
  const std::vector<std::size_t>& starting_at(std::size_t pos) const { return begin_at_[pos]; }

 private:
  std::u32string surface_;
  const Lexicon* lex_;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::size_t>> begin_at_;
};

inline Lattice build_lattice(std::string_view surface, const Lexicon& lex) {
  return Lattice(surface, lex);
}

// Up to k lowest-cost paths in ascending cost. Equal costs are ordered by
// the sequence of entry spans, then by entry indices. Throws
// std::invalid_argument when k == 0.
std::vector<Segmentation> nbest(const Lattice& lattice, std::size_t k);

}  // namespace pitchdict
