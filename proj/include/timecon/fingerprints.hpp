#pragma once

#include <vector>

#include "timecon/conn_tree.hpp"
#include "timecon/twoecc_tree.hpp"

namespace timecon {

// Per-node integer labels encoding the full per-version component history of
// each vertex across the node's interval: two vertices of the same node get
// equal labels iff their histories agree at every version.  0 stands for the
// bottom value, assigned only to non-vanishing Path vertices of the
// 2-edge-connectivity tree.
struct FingerprintTable {
  std::vector<std::vector<int>> h;  // heap-indexed, values 1..count or 0

  static FingerprintTable conn(const ConnTree& tree);
  static FingerprintTable twoecc(const TwoEccTree& tree);

  int at(int idx, int vertex) const { return h[idx][vertex - 1]; }
};

// Relabels (a, b) pairs to dense ranks 1..K by a two-pass counting sort;
// both key components must lie in [0, bound].  Equal pairs get equal ranks.
std::vector<int> relabel_pairs(const std::vector<std::pair<int, int>>& keys, int bound);

// The concatenated block-symbol word: one symbol per (vertex, block of
// 2^depth versions), with a unique separator between the per-vertex runs so
// that no comparison can match across vertex boundaries.
struct SymbolWord {
  int num_blocks = 0;
  int stride = 0;  // num_blocks + 1
  std::vector<int> word;

  int pos(int v, int block) const { return (v - 1) * stride + block; }
  int symbol(int v, int block) const { return word[pos(v, block)]; }
};

// Builds the connectivity symbol word: symbol (H_P(s), P) per shortcut entry.
SymbolWord build_conn_symbol_word(const ConnTree& tree, const ShortcutTable& scut,
                                  const FingerprintTable& fp);

}  // namespace timecon
