#include "timecon/intervals.hpp"

namespace timecon {

namespace {

// Pushes a node onto a partition stack, replacing sibling pairs by their
// parent.  Lengths grow monotonically along each climb, so the only possible
// sibling of the incoming node is the current top.
void push_merged(std::vector<int>& stack, int idx) {
  while (!stack.empty() && (stack.back() ^ 1) == idx) {
    idx >>= 1;
    stack.pop_back();
  }
  stack.push_back(idx);
}

}  // namespace

std::vector<int> partition_interval(int c, int d, int t) {
  if (!is_power_of_two(t)) throw std::invalid_argument("partition_interval: t must be a power of two");
  if (c < 1 || d > t || c > d) throw std::invalid_argument("partition_interval: need 1 <= c <= d <= t");

  if (c == d) return {leaf_index(c, t)};

  std::vector<int> left, right;
  int l = leaf_index(c, t);
  int r = leaf_index(d, t);
  push_merged(left, l);
  push_merged(right, r);
  while ((l >> 1) != (r >> 1)) {
    if ((l & 1) == 0) push_merged(left, l + 1);
    if ((r & 1) == 1) push_merged(right, r - 1);
    l >>= 1;
    r >>= 1;
  }
  // The two climbs can leave one mergeable pair across the gap.
  while (!left.empty() && !right.empty() && (left.back() & 1) == 0 &&
         (left.back() ^ 1) == right.back()) {
    int parent = left.back() >> 1;
    left.pop_back();
    right.pop_back();
    push_merged(left, parent);
  }
  for (auto it = right.rbegin(); it != right.rend(); ++it) left.push_back(*it);
  return left;
}

}  // namespace timecon
