#include "timecon/fingerprints.hpp"

#include <algorithm>
#include <cassert>

namespace timecon {

std::vector<int> relabel_pairs(const std::vector<std::pair<int, int>>& keys, int bound) {
  int k = static_cast<int>(keys.size());
  std::vector<int> order(k), tmp(k), count(bound + 2, 0);

  for (const auto& key : keys) ++count[key.second + 1];
  for (int i = 1; i <= bound + 1; ++i) count[i] += count[i - 1];
  for (int i = 0; i < k; ++i) tmp[count[keys[i].second]++] = i;

  std::fill(count.begin(), count.end(), 0);
  for (const auto& key : keys) ++count[key.first + 1];
  for (int i = 1; i <= bound + 1; ++i) count[i] += count[i - 1];
  for (int i = 0; i < k; ++i) order[count[keys[tmp[i]].first]++] = tmp[i];

  std::vector<int> rank(k, 0);
  int next = 0;
  for (int i = 0; i < k; ++i) {
    if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++next;
    rank[order[i]] = next;
  }
  return rank;
}

FingerprintTable FingerprintTable::conn(const ConnTree& tree) {
  FingerprintTable fp;
  fp.h.resize(tree.nodes.size());
  std::vector<std::pair<int, int>> keys;
  for (int idx = 2 * tree.t - 1; idx >= 1; --idx) {
    const ConnNode& node = tree.nodes[idx];
    keys.resize(node.count);
    for (int s = 1; s <= node.count; ++s) {
      int l = tree.child_ref(idx, s, false);
      int r = tree.child_ref(idx, s, true);
      if (l == 0 || r == 0)
        keys[s - 1] = {s, 0};
      else
        keys[s - 1] = {fp.h[2 * idx][l - 1], fp.h[2 * idx + 1][r - 1]};
    }
    fp.h[idx] = relabel_pairs(keys, node.count);
  }
  return fp;
}

FingerprintTable FingerprintTable::twoecc(const TwoEccTree& tree) {
  FingerprintTable fp;
  fp.h.resize(tree.nodes.size());
  constexpr int kBottom = -1;  // sentinel inside the key pass; emitted as 0
  std::vector<std::pair<int, int>> keys;
  std::vector<int> key_pos;
  for (int idx = 2 * tree.t - 1; idx >= 1; --idx) {
    const TwoEccNode& node = tree.nodes[idx];
    keys.clear();
    key_pos.assign(node.count, kBottom);
    fp.h[idx].assign(node.count, 0);
    for (int s = 1; s <= node.count; ++s) {
      bool simple = tree.is_simple(idx, s);
      int l = tree.child_ref(idx, s, false);
      int r = tree.child_ref(idx, s, true);
      int hl = l == 0 ? 0 : fp.h[2 * idx][l - 1];
      int hr = r == 0 ? 0 : fp.h[2 * idx + 1][r - 1];
      if (l == 0 || r == 0 || hl == 0 || hr == 0) {
        // A missing child reference or a bottom child fingerprint pins the
        // history: Simple vertices get a unique label, Path vertices are
        // non-vanishing and get bottom.
        if (simple) {
          key_pos[s - 1] = static_cast<int>(keys.size());
          keys.push_back({s, 0});
        }
      } else {
        key_pos[s - 1] = static_cast<int>(keys.size());
        keys.push_back({hl, hr});
      }
    }
    std::vector<int> ranks = relabel_pairs(keys, node.count);
    for (int s = 1; s <= node.count; ++s)
      if (key_pos[s - 1] != kBottom) fp.h[idx][s - 1] = ranks[key_pos[s - 1]];
  }
  return fp;
}

SymbolWord build_conn_symbol_word(const ConnTree& tree, const ShortcutTable& scut,
                                  const FingerprintTable& fp) {
  SymbolWord sw;
  sw.num_blocks = scut.num_blocks;
  sw.stride = scut.num_blocks + 1;

  int total = tree.n * scut.num_blocks;
  std::vector<std::pair<int, int>> keys;
  keys.reserve(total);
  for (int v = 1; v <= tree.n; ++v)
    for (int k = 0; k < scut.num_blocks; ++k) {
      auto [s, idx] = scut.lookup(v, k);
      keys.push_back({fp.at(idx, s), idx});
    }
  std::vector<int> ranks = relabel_pairs(keys, std::max(2 * tree.t, tree.n + 1));

  sw.word.assign(static_cast<size_t>(tree.n) * sw.stride - 1, 0);
  int alphabet = total == 0 ? 0 : *std::max_element(ranks.begin(), ranks.end());
  for (int v = 1; v <= tree.n; ++v) {
    for (int k = 0; k < scut.num_blocks; ++k)
      sw.word[sw.pos(v, k)] = ranks[static_cast<size_t>(v - 1) * scut.num_blocks + k];
    if (v < tree.n) sw.word[sw.pos(v, scut.num_blocks)] = alphabet + v;  // separator
  }
  return sw;
}

}  // namespace timecon
