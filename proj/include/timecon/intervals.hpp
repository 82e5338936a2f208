#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace timecon {

// Closed integer interval [lo, hi].
struct Interval {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo + 1; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval&) const = default;
};

// Elementary intervals of [1, t] (t a power of two) form a complete binary
// tree addressed by heap indices: root = 1, children of k are 2k and 2k+1,
// leaves are t .. 2t-1.  Index 0 is the sentinel parent of the root, which
// stands for the unbounded interval [0, inf).
inline constexpr int kSentinelNode = 0;

inline bool is_power_of_two(int x) {
  return x > 0 && std::has_single_bit(static_cast<unsigned>(x));
}

inline int next_power_of_two(int x) {
  if (x <= 1) return 1;
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(x)));
}

inline int floor_log2(int x) { return std::bit_width(static_cast<unsigned>(x)) - 1; }

inline int node_depth(int idx) { return floor_log2(idx); }

inline bool is_leaf(int idx, int t) { return idx >= t; }

inline int leaf_index(int version, int t) { return t + version - 1; }

inline int ipar(int idx) { return idx >> 1; }

// Children of a leaf are absent; callers get 0 back.
inline int lson(int idx, int t) { return is_leaf(idx, t) ? 0 : 2 * idx; }
inline int rson(int idx, int t) { return is_leaf(idx, t) ? 0 : 2 * idx + 1; }

inline Interval node_interval(int idx, int t) {
  if (idx == kSentinelNode) return {0, std::numeric_limits<int>::max()};
  int depth = node_depth(idx);
  int len = t >> depth;
  int lo = (idx - (1 << depth)) * len + 1;
  return {lo, lo + len - 1};
}

inline int node_length(int idx, int t) { return t >> node_depth(idx); }

// Splits [c, d] into the unique partition of disjoint elementary intervals in
// which no two members are siblings in the segment tree.  Returns heap
// indices ordered by left endpoint.
std::vector<int> partition_interval(int c, int d, int t);

}  // namespace timecon
