#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "timecon/conn_tree.hpp"
#include "timecon/timeline.hpp"

namespace timecon {

// Per-block connectivity-over-time oracle.  Super-vertices of the block's
// contracted graph that are incident to updates inside the block are
// "marked"; for marked pairs whose connectivity changes during the block we
// store the sorted list of maximal connected sub-intervals, and pairs that
// never change are resolved from their labels at the block's first version.
struct BlockOracle {
  int lo = 0;
  int hi = 0;
  std::vector<int> marked_slot;   // node vertex -> slot+1, 0 = unmarked
  std::vector<int> slot_vertex;   // slot -> node vertex
  std::vector<int> label_start;   // per slot, component label at version lo

  std::vector<std::uint64_t> pair_keys;        // sorted, slotA * K + slotB (A < B)
  std::vector<int> pair_off;                   // CSR offsets into intervals
  std::vector<std::pair<int, int>> intervals;  // disjoint, maximal, sorted

  int marked_count() const { return static_cast<int>(slot_vertex.size()); }

  // True iff the marked super-vertices are connected in some version of
  // [c, d]; requires lo <= c <= d <= hi.
  bool connected_sometime(int slot_a, int slot_b, int c, int d) const;
};

// Block trade-off structure for EXISTS queries: the timeline is split into
// 2^depth elementary blocks with 2^depth <= t^alpha (block length clamped to
// at most 8n so that per-block graphs stay vertex-bounded), and each block
// gets a BlockOracle over its contracted graph.
struct ExistsStructure {
  double alpha = 0.0;
  int depth = 0;
  int block_len = 0;
  int num_blocks = 0;
  const ConnTree* tree = nullptr;
  std::vector<BlockOracle> blocks;

  static ExistsStructure build(const ConnTree& tree, const Timeline& tl, const Lifespans& ls,
                               double alpha);

  // True iff u and v are connected in some version of [x, y] (padded range).
  bool query(int u, int v, int x, int y, QueryStats* stats = nullptr) const;
};

}  // namespace timecon
