#pragma once

#include <utility>
#include <vector>

#include "timecon/timeline.hpp"

namespace timecon {

struct QueryStats {
  long long nodes_visited = 0;
  long long block_probes = 0;
};

// Identifier of a connected component: a vertex of the node's contracted
// graph together with the heap index of the elementary interval.
struct CompId {
  int vertex = 0;
  int node = 0;
  bool operator==(const CompId&) const = default;
};

// One node of the hierarchy: the contracted component graph S_P of the
// intersection graph over the node's interval.  Vertices are 1..count; the
// child tables map them into the children's graphs, 0 meaning the component
// is untouched by updates in that half and is not tracked further down.
struct ConnNode {
  int count = 0;
  std::vector<int> lar;  // into lson's graph; empty at leaves
  std::vector<int> rar;  // into rson's graph; empty at leaves
};

class ConnTree {
 public:
  int n = 0;
  int t = 0;
  int B = 0;
  std::vector<ConnNode> nodes;  // heap-indexed, 1..2t-1
  std::vector<int> root_map;    // original vertex -> vertex of S_[1,t]; 1-based

  static ConnTree build(const Timeline& tl, const Lifespans& ls);

  int child_ref(int idx, int w, bool right) const {
    const std::vector<int>& tab = right ? nodes[idx].rar : nodes[idx].lar;
    return tab.empty() ? 0 : tab[w - 1];
  }

  // Descends from vertex w of node idx toward leaf [c,c], stopping at the
  // last node where the component is still represented.
  CompId comp_id(int w, int idx, int c, QueryStats* stats = nullptr) const;
};

// Precomputed top-of-tree descents: for every vertex and every block of
// 2^depth consecutive versions, where the descent through the first
// B - depth levels ends.
struct ShortcutTable {
  int depth = 0;       // 2^depth >= n > 2^(depth-1) (depth = 0 for n <= 1)
  int block_len = 0;   // 2^depth
  int num_blocks = 0;  // t / block_len
  std::vector<std::pair<int, int>> entries;  // (vertex, node), row-major by vertex

  static ShortcutTable build(const ConnTree& tree);

  std::pair<int, int> lookup(int v, int block) const {
    return entries[static_cast<size_t>(v - 1) * num_blocks + block];
  }
  int block_of(int version) const { return (version - 1) >> depth; }
};

// Component of original vertex v in version c, via the shortcut table plus
// at most `depth` descent steps.  Two vertices are connected in G_c iff
// their results compare equal.
CompId component_of(const ConnTree& tree, const ShortcutTable& scut, int v, int c,
                    QueryStats* stats = nullptr);

}  // namespace timecon
