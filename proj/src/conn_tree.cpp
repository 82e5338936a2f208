#include "timecon/conn_tree.hpp"

#include <algorithm>
#include <cassert>

namespace timecon {

namespace {

// Executes the recursive construction: per node, reduce the parent graph to
// the components touched by updates in the interval, then contract the
// components joined by edges alive throughout it.  The repr table maps
// original vertices to their representative in the node currently being
// expanded and is saved/restored around each call.
class ConnBuilder {
 public:
  ConnBuilder(const Timeline& tl, const Lifespans& ls, ConnTree& out)
      : tl_(tl), ls_(ls), out_(out) {
    repr_.resize(tl.n + 1);
    for (int v = 1; v <= tl.n; ++v) repr_[v] = v;
    comp_.assign(tl.n + 1, 0);
    adj_head_.assign(tl.n + 1, -1);
    queue_.reserve(tl.n);
  }

  void run() { build(1); }

 private:
  const Timeline& tl_;
  const Lifespans& ls_;
  ConnTree& out_;

  std::vector<int> repr_;
  // contraction scratch, reused across nodes
  std::vector<int> comp_;
  std::vector<int> adj_head_;
  std::vector<std::pair<int, int>> adj_edges_;  // (target, next)
  std::vector<int> queue_;

  void for_each_ep_edge(int idx, auto&& fn) const {
    for (int k = ls_.ep_offsets[idx]; k < ls_.ep_offsets[idx + 1]; ++k) fn(ls_.ep_edges[k]);
  }

  void for_each_interior_delta(int lo, int hi, auto&& fn) const {
    for (int i = lo + 1; i <= hi; ++i)
      if (ls_.delta_plus_at[i] >= 0) fn(ls_.delta_plus_at[i]);
    for (int i = lo; i <= hi - 1; ++i)
      if (ls_.delta_minus_at[i] >= 0) fn(ls_.delta_minus_at[i]);
  }

  void build(int idx) {
    Interval iv = node_interval(idx, tl_.t);
    int parent_count = idx == 1 ? tl_.n : out_.nodes[ipar(idx)].count;
    bool reduce = iv.length() < tl_.n;

    std::vector<int> touched;           // original vertices whose repr changes here
    std::vector<int> mprime;            // parent-vertex -> reduced id, 0 = dropped
    std::vector<std::pair<int, int>> saved;
    int reduced_count = parent_count;

    if (reduce) {
      std::vector<char> marked(parent_count + 1, 0);
      auto mark_edge = [&](int e) {
        auto [u, v] = tl_.edges[e];
        touched.push_back(u);
        touched.push_back(v);
        int a = repr_[u], b = repr_[v];
        assert(a != 0 && b != 0);
        marked[a] = 1;
        marked[b] = 1;
      };
      for_each_ep_edge(idx, mark_edge);
      for_each_interior_delta(iv.lo, iv.hi, mark_edge);

      mprime.assign(parent_count + 1, 0);
      reduced_count = 0;
      for (int s = 1; s <= parent_count; ++s)
        if (marked[s]) mprime[s] = ++reduced_count;

      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    } else {
      touched.resize(tl_.n);
      for (int v = 1; v <= tl_.n; ++v) touched[v - 1] = v;
    }

    saved.reserve(touched.size());
    for (int u : touched) saved.push_back({u, repr_[u]});
    if (reduce)
      for (int u : touched) repr_[u] = mprime[repr_[u]];

    // Contraction: components of the reduced graph under the edges alive
    // throughout this interval.
    adj_edges_.clear();
    for (int s = 1; s <= reduced_count; ++s) adj_head_[s] = -1;
    for_each_ep_edge(idx, [&](int e) {
      auto [u, v] = tl_.edges[e];
      int a = repr_[u], b = repr_[v];
      assert(a != 0 && b != 0);
      if (a == b) return;
      adj_edges_.push_back({b, adj_head_[a]});
      adj_head_[a] = static_cast<int>(adj_edges_.size()) - 1;
      adj_edges_.push_back({a, adj_head_[b]});
      adj_head_[b] = static_cast<int>(adj_edges_.size()) - 1;
    });

    int count = 0;
    for (int s = 1; s <= reduced_count; ++s) comp_[s] = 0;
    for (int s = 1; s <= reduced_count; ++s) {
      if (comp_[s] != 0) continue;
      ++count;
      comp_[s] = count;
      queue_.clear();
      queue_.push_back(s);
      for (size_t qi = 0; qi < queue_.size(); ++qi) {
        int x = queue_[qi];
        for (int k = adj_head_[x]; k >= 0; k = adj_edges_[k].second) {
          int y = adj_edges_[k].first;
          if (comp_[y] == 0) {
            comp_[y] = count;
            queue_.push_back(y);
          }
        }
      }
    }

    ConnNode& node = out_.nodes[idx];
    node.count = count;
    if (!is_leaf(idx, tl_.t)) {
      node.lar.assign(count, 0);
      node.rar.assign(count, 0);
    }

    for (int u : touched)
      if (repr_[u] != 0) repr_[u] = comp_[repr_[u]];

    // Child reference table of the parent (root_map for the root itself).
    if (idx == 1) {
      for (int s = 1; s <= tl_.n; ++s) out_.root_map[s] = comp_[s];
    } else {
      ConnNode& parent = out_.nodes[ipar(idx)];
      std::vector<int>& tab = (idx & 1) ? parent.rar : parent.lar;
      for (int s = 1; s <= parent_count; ++s) {
        int x = reduce ? mprime[s] : s;
        if (x != 0) x = comp_[x];
        tab[s - 1] = x;
      }
    }

    if (!is_leaf(idx, tl_.t)) {
      build(2 * idx);
      build(2 * idx + 1);
    }
    for (auto [u, old] : saved) repr_[u] = old;
  }
};

}  // namespace

ConnTree ConnTree::build(const Timeline& tl, const Lifespans& ls) {
  if (!ls.partitioned()) throw std::logic_error("ConnTree::build: lifespans not partitioned");
  ConnTree tree;
  tree.n = tl.n;
  tree.t = tl.t;
  tree.B = tl.B;
  tree.nodes.resize(2 * tl.t);
  tree.root_map.assign(tl.n + 1, 0);
  ConnBuilder(tl, ls, tree).run();
  return tree;
}

CompId ConnTree::comp_id(int w, int idx, int c, QueryStats* stats) const {
  while (!is_leaf(idx, t)) {
    if (stats) ++stats->nodes_visited;
    Interval iv = node_interval(idx, t);
    int mid = (iv.lo + iv.hi) / 2;
    bool right = c > mid;
    int next = child_ref(idx, w, right);
    if (next == 0) break;
    w = next;
    idx = 2 * idx + (right ? 1 : 0);
  }
  if (stats) ++stats->nodes_visited;
  return {w, idx};
}

ShortcutTable ShortcutTable::build(const ConnTree& tree) {
  ShortcutTable scut;
  int depth = 0;
  while ((1 << depth) < tree.n) ++depth;
  scut.depth = depth;
  scut.block_len = 1 << depth;
  scut.num_blocks = tree.t >> depth;
  scut.entries.resize(static_cast<size_t>(tree.n) * scut.num_blocks);

  int levels = tree.B - depth;
  for (int v = 1; v <= tree.n; ++v) {
    for (int k = 0; k < scut.num_blocks; ++k) {
      int w = tree.root_map[v];
      int idx = 1;
      for (int d = 0; d < levels; ++d) {
        bool right = (k >> (levels - 1 - d)) & 1;
        int next = tree.child_ref(idx, w, right);
        if (next == 0) break;
        w = next;
        idx = 2 * idx + (right ? 1 : 0);
      }
      scut.entries[static_cast<size_t>(v - 1) * scut.num_blocks + k] = {w, idx};
    }
  }
  return scut;
}

CompId component_of(const ConnTree& tree, const ShortcutTable& scut, int v, int c,
                    QueryStats* stats) {
  if (v < 1 || v > tree.n || c < 1 || c > tree.t)
    throw std::invalid_argument("component_of: vertex or version out of range");
  auto [w, idx] = scut.lookup(v, scut.block_of(c));
  if (stats) ++stats->nodes_visited;
  if (node_length(idx, tree.t) > scut.block_len) return {w, idx};
  return tree.comp_id(w, idx, c, stats);
}

}  // namespace timecon
