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

#include "pitchdict/lattice.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "pitchdict/utf8.hpp"

namespace pitchdict {

MoraSeq Segmentation::yomi() const {
  MoraSeq out;
  for (const auto& e : entries) out.insert(out.end(), e.yomi.begin(), e.yomi.end());
  return out;
}

std::string Segmentation::surface() const {
  std::string out;
  for (const auto& e : entries) out += e.surface;
  return out;
}

int path_cost(const Lexicon& lex, const std::vector<LexEntry>& entries) {
  int cost = 0;
  int prev_right = kBoundaryId;
  for (const auto& e : entries) {
    cost += lex.connection_cost(prev_right, e.left_id) + e.cost;
    prev_right = e.right_id;
  }
  return cost + lex.connection_cost(prev_right, kBoundaryId);
}

Lattice::Lattice(std::string_view surface, const Lexicon& lex)
    : surface_(utf8::decode(surface)), lex_(&lex) {
  if (surface_.empty()) throw std::invalid_argument("cannot build a lattice for an empty surface");
  begin_at_.resize(surface_.size());
  for (std::size_t pos = 0; pos < surface_.size(); ++pos) {
    for (auto& m : lex.prefix_lookup(surface_, pos)) {
      const std::size_t end = pos + m.span;
      begin_at_[pos].push_back(nodes_.size());
      nodes_.push_back(Node{std::move(m), pos, end});
    }
  }
}

namespace {

struct Partial {
  long long f = 0;  // cost so far plus the best possible continuation
  long long g = 0;  // cost so far (without the trailing boundary)
  std::vector<std::size_t> spans;
  std::vector<int> indices;
  std::vector<std::size_t> nodes;
  bool complete = false;
};

// Heap order: f, then spans, then entry indices. A prefix sorts before its
// extensions, which keeps complete paths leaving the heap in exactly the
// order of their full keys.
bool key_less(const Partial& a, const Partial& b) {
  if (a.f != b.f) return a.f < b.f;
  if (a.spans != b.spans) return a.spans < b.spans;
  if (a.indices != b.indices) return a.indices < b.indices;
  return a.complete < b.complete;
}

struct HeapGreater {
  bool operator()(const Partial& a, const Partial& b) const { return key_less(b, a); }
};

}  // namespace

std::vector<Segmentation> nbest(const Lattice& lattice, std::size_t k) {
  if (k == 0) throw std::invalid_argument("nbest requires k >= 1");
  const auto& nodes = lattice.nodes();
  const Lexicon& lex = lattice.lexicon();
  const std::size_t len = lattice.surface().size();
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

  // rest[n]: cheapest continuation after node n up to and including EOS,
  // excluding n's own cost. Filled right to left.
  std::vector<long long> rest(nodes.size(), kInf);
  for (std::size_t pos = len; pos-- > 0;) {
    for (std::size_t n : lattice.starting_at(pos)) {
      const auto& node = nodes[n];
      if (node.end == len) {
        rest[n] = lex.connection_cost(node.match.entry.right_id, kBoundaryId);
        continue;
      }
      for (std::size_t next : lattice.starting_at(node.end)) {
        const auto& nn = nodes[next];
        const long long c = lex.connection_cost(node.match.entry.right_id, nn.match.entry.left_id) +
                            nn.match.entry.cost + rest[next];
        rest[n] = std::min(rest[n], c);
      }
    }
  }

  std::priority_queue<Partial, std::vector<Partial>, HeapGreater> heap;
  for (std::size_t n : lattice.starting_at(0)) {
    const auto& node = nodes[n];
    Partial p;
    p.g = lex.connection_cost(kBoundaryId, node.match.entry.left_id) + node.match.entry.cost;
    p.f = p.g + rest[n];
    p.spans = {node.match.span};
    p.indices = {node.match.index};
    p.nodes = {n};
    heap.push(std::move(p));
  }

  std::vector<Segmentation> out;
  constexpr std::size_t kMaxPops = 1'000'000;
  std::size_t pops = 0;
  while (!heap.empty() && out.size() < k && pops++ < kMaxPops) {
    Partial top = heap.top();
    heap.pop();
    if (top.complete) {
      Segmentation seg;
      for (std::size_t n : top.nodes) seg.entries.push_back(nodes[n].match.entry);
      seg.spans = std::move(top.spans);
      seg.entry_indices = std::move(top.indices);
      seg.total_cost = static_cast<int>(top.f);
      seg.rank = static_cast<int>(out.size()) + 1;
      out.push_back(std::move(seg));
      continue;
    }
    const auto& last = nodes[top.nodes.back()];
    if (last.end == len) {
      top.g += lex.connection_cost(last.match.entry.right_id, kBoundaryId);
      top.f = top.g;
      top.complete = true;
      heap.push(std::move(top));
      continue;
    }
    for (std::size_t next : lattice.starting_at(last.end)) {
      const auto& nn = nodes[next];
      Partial p;
      p.g = top.g + lex.connection_cost(last.match.entry.right_id, nn.match.entry.left_id) +
            nn.match.entry.cost;
      p.f = p.g + rest[next];
      p.spans = top.spans;
      p.spans.push_back(nn.match.span);
      p.indices = top.indices;
      p.indices.push_back(nn.match.index);
      p.nodes = top.nodes;
      p.nodes.push_back(next);
      heap.push(std::move(p));
    }
  }
  return out;
}

}  // namespace pitchdict
