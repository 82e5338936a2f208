#include "timecon/twoecc_tree.hpp"

#include <algorithm>
#include <cassert>

namespace timecon {

namespace {

// Reduction input/output at one node.  The parent forest is reduced in four
// phases: mark endpoints of interval-relevant edges, mark lowest common
// ancestors and roots, delete mark-free subtrees, and collapse maximal runs
// of unmarked degree-2 vertices into single Path vertices.
struct Reduced {
  int count = 0;
  std::vector<int> map;                      // parent vertex -> reduced id, 0 = dropped
  std::vector<int> parent;                   // reduced forest
  std::vector<std::uint8_t> kind;
  std::vector<std::pair<int, int>> chain;
  int marked_total = 0;
};

class TwoEccBuilder {
 public:
  TwoEccBuilder(const Timeline& tl, const Lifespans& ls, TwoEccTree& out)
      : tl_(tl), ls_(ls), out_(out) {
    repr_.resize(tl.n + 1);
    for (int v = 1; v <= tl.n; ++v) repr_[v] = v;
  }

  void run() { build(1); }

 private:
  const Timeline& tl_;
  const Lifespans& ls_;
  TwoEccTree& out_;
  std::vector<int> repr_;

  void for_each_ep_edge(int idx, auto&& fn) const {
    for (int k = ls_.ep_offsets[idx]; k < ls_.ep_offsets[idx + 1]; ++k) fn(ls_.ep_edges[k]);
  }

  void for_each_interior_delta(int lo, int hi, auto&& fn) const {
    for (int i = lo + 1; i <= hi; ++i)
      if (ls_.delta_plus_at[i] >= 0) fn(ls_.delta_plus_at[i]);
    for (int i = lo; i <= hi - 1; ++i)
      if (ls_.delta_minus_at[i] >= 0) fn(ls_.delta_minus_at[i]);
  }

  Reduced reduce(int parent_count, const std::vector<int>& par_parent,
                 const std::vector<std::uint8_t>& par_kind,
                 const std::vector<std::pair<int, int>>& f_pairs, int* marked_out) {
    Reduced red;
    std::vector<char> marked(parent_count + 1, 0);
    for (auto [a, b] : f_pairs) {
      if (a == b) continue;  // endpoints already share a component: no effect here
      assert(a != 0 && b != 0);
      marked[a] = 1;
      marked[b] = 1;
    }

    // Children lists of the parent forest.
    std::vector<int> child_off(parent_count + 2, 0);
    for (int s = 1; s <= parent_count; ++s)
      if (par_parent[s - 1] != 0) ++child_off[par_parent[s - 1] + 1];
    for (int s = 1; s <= parent_count + 1; ++s) child_off[s] += child_off[s - 1];
    std::vector<int> child_list(child_off[parent_count + 1]);
    {
      std::vector<int> fill(child_off.begin(), child_off.end() - 1);
      for (int s = 1; s <= parent_count; ++s)
        if (int p = par_parent[s - 1]; p != 0) child_list[fill[p]++] = s;
    }

    // Post-order marking of LCAs, plus roots of trees containing marks.
    std::vector<char> sub_mark(parent_count + 1, 0);
    std::vector<int> order;
    order.reserve(parent_count);
    std::vector<int> stack;
    for (int r = 1; r <= parent_count; ++r) {
      if (par_parent[r - 1] != 0) continue;
      stack.push_back(r);
      while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        order.push_back(s);
        for (int k = child_off[s]; k < child_off[s + 1]; ++k) stack.push_back(child_list[k]);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int s = *it;
      int marked_subtrees = 0;
      char any = marked[s];
      for (int k = child_off[s]; k < child_off[s + 1]; ++k) {
        if (sub_mark[child_list[k]]) {
          ++marked_subtrees;
          any = 1;
        }
      }
      if (marked_subtrees >= 2) marked[s] = 1;
      sub_mark[s] = any;
    }
    for (int r = 1; r <= parent_count; ++r)
      if (par_parent[r - 1] == 0 && sub_mark[r]) marked[r] = 1;

    if (marked_out) {
      *marked_out = 0;
      for (int s = 1; s <= parent_count; ++s)
        if (marked[s]) ++*marked_out;
    }

    // Phase 3: keep exactly the vertices with a mark somewhere below them.
    // Phase 4: collapse maximal kept runs of unmarked degree-2 vertices.
    std::vector<int> kept_deg(parent_count + 1, 0);
    for (int s = 1; s <= parent_count; ++s) {
      if (!sub_mark[s]) continue;
      if (par_parent[s - 1] != 0) ++kept_deg[s];
      for (int k = child_off[s]; k < child_off[s + 1]; ++k)
        if (sub_mark[child_list[k]]) ++kept_deg[s];
    }
    auto eligible = [&](int s) { return sub_mark[s] && !marked[s] && kept_deg[s] == 2; };

    red.map.assign(parent_count + 1, 0);
    for (int s = 1; s <= parent_count; ++s) {
      if (!sub_mark[s] || red.map[s] != 0) continue;
      if (!eligible(s)) {
        red.parent.push_back(0);  // fixed up below
        red.kind.push_back(par_kind[s - 1]);
        red.chain.push_back(par_kind[s - 1] == static_cast<std::uint8_t>(VertexKind::Path)
                                ? std::pair<int, int>{s, s}
                                : std::pair<int, int>{0, 0});
        red.map[s] = ++red.count;
        continue;
      }
      // Climb to the top of the eligible run, then walk down through the
      // single kept children collecting its members.
      int top = s;
      while (true) {
        int p = par_parent[top - 1];
        if (p == 0 || !eligible(p)) break;
        top = p;
      }
      int bottom = top;
      int run_len = 1;
      while (true) {
        int next = 0;
        for (int k = child_off[bottom]; k < child_off[bottom + 1]; ++k)
          if (sub_mark[child_list[k]]) next = child_list[k];
        if (next == 0 || !eligible(next)) break;
        bottom = next;
        ++run_len;
      }
      if (run_len == 1 && par_kind[top - 1] == static_cast<std::uint8_t>(VertexKind::Simple)) {
        // A lone unmarked degree-2 Simple vertex still represents a single
        // component; collapsing it would misclassify it as a chain.
        red.parent.push_back(0);
        red.kind.push_back(static_cast<std::uint8_t>(VertexKind::Simple));
        red.chain.push_back({0, 0});
        red.map[top] = ++red.count;
        continue;
      }
      int id = ++red.count;
      red.parent.push_back(0);
      red.kind.push_back(static_cast<std::uint8_t>(VertexKind::Path));
      red.chain.push_back({top, bottom});
      for (int cur = top;;) {
        red.map[cur] = id;
        if (cur == bottom) break;
        int next = 0;
        for (int k = child_off[cur]; k < child_off[cur + 1]; ++k)
          if (sub_mark[child_list[k]]) next = child_list[k];
        cur = next;
      }
    }

    // Reduced forest edges: surviving parent links between distinct images.
    for (int s = 1; s <= parent_count; ++s) {
      if (!sub_mark[s]) continue;
      int p = par_parent[s - 1];
      if (p == 0) continue;
      int a = red.map[s], b = red.map[p];
      if (a != b) red.parent[a - 1] = b;
    }
    return red;
  }

  // Contraction: add the node's alive-throughout edges to the reduced
  // forest, merge every 2-edge-connected component of the result into a new
  // Simple vertex, and re-root the quotient forest at Simple vertices.
  void contract(int idx, const Reduced& red, const std::vector<std::pair<int, int>>& ep_pairs,
                TwoEccNode& node, std::vector<int>& mpp) {
    int w = red.count;
    struct HalfEdge {
      int to;
      int eid;
      int next;
    };
    std::vector<int> head(w + 1, -1);
    std::vector<HalfEdge> half;
    std::vector<std::pair<int, int>> edge_list;
    auto add_edge = [&](int a, int b) {
      int eid = static_cast<int>(edge_list.size());
      edge_list.push_back({a, b});
      half.push_back({b, eid, head[a]});
      head[a] = static_cast<int>(half.size()) - 1;
      half.push_back({a, eid, head[b]});
      head[b] = static_cast<int>(half.size()) - 1;
    };
    for (int s = 1; s <= w; ++s)
      if (red.parent[s - 1] != 0) add_edge(s, red.parent[s - 1]);
    for (auto [a, b] : ep_pairs) {
      if (a == b) continue;
      assert(a != 0 && b != 0);
      add_edge(a, b);
    }

    // Bridges by iterative low-link; parallel edges count separately, so a
    // doubled edge is never a bridge.
    std::vector<int> disc(w + 1, 0), low(w + 1, 0);
    std::vector<char> is_bridge(edge_list.size(), 0);
    std::vector<std::pair<int, int>> dfs;  // (vertex, half-edge cursor)
    std::vector<int> in_edge(w + 1, -1);
    int timer = 0;
    for (int s0 = 1; s0 <= w; ++s0) {
      if (disc[s0] != 0) continue;
      dfs.push_back({s0, head[s0]});
      disc[s0] = low[s0] = ++timer;
      in_edge[s0] = -1;
      while (!dfs.empty()) {
        auto& [v, cursor] = dfs.back();
        if (cursor < 0) {
          dfs.pop_back();
          if (!dfs.empty()) {
            int p = dfs.back().first;
            low[p] = std::min(low[p], low[v]);
            if (low[v] > disc[p]) is_bridge[in_edge[v]] = 1;
          }
          continue;
        }
        const HalfEdge& he = half[cursor];
        cursor = he.next;
        if (he.eid == in_edge[v]) continue;
        if (disc[he.to] == 0) {
          disc[he.to] = low[he.to] = ++timer;
          in_edge[he.to] = he.eid;
          dfs.push_back({he.to, head[he.to]});
        } else {
          low[v] = std::min(low[v], disc[he.to]);
        }
      }
    }

    // 2ecc groups: components under non-bridge edges, numbered in scan order.
    mpp.assign(w + 1, 0);
    std::vector<int> group_size;
    std::vector<int> queue;
    for (int s = 1; s <= w; ++s) {
      if (mpp[s] != 0) continue;
      int id = static_cast<int>(group_size.size()) + 1;
      group_size.push_back(0);
      mpp[s] = id;
      queue.assign(1, s);
      while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        ++group_size[id - 1];
        for (int k = head[x]; k >= 0; k = half[k].next) {
          if (is_bridge[half[k].eid]) continue;
          if (mpp[half[k].to] == 0) {
            mpp[half[k].to] = id;
            queue.push_back(half[k].to);
          }
        }
      }
    }

    int count = static_cast<int>(group_size.size());
    node.count = count;
    node.kind.assign(count, static_cast<std::uint8_t>(VertexKind::Simple));
    node.chain.assign(count, {0, 0});
    node.parent.assign(count, 0);
    if (!is_leaf(idx, tl_.t)) {
      node.lar.assign(count, 0);
      node.rar.assign(count, 0);
    }
    for (int s = 1; s <= w; ++s) {
      if (group_size[mpp[s] - 1] == 1) {
        node.kind[mpp[s] - 1] = red.kind[s - 1];
        node.chain[mpp[s] - 1] = red.chain[s - 1];
      }
    }

    // Quotient forest from the bridges, re-rooted at the smallest Simple
    // vertex of each tree.
    std::vector<int> qhead(count + 1, -1);
    std::vector<std::pair<int, int>> qadj;  // (target, next)
    for (size_t e = 0; e < edge_list.size(); ++e) {
      if (!is_bridge[e]) continue;
      int a = mpp[edge_list[e].first], b = mpp[edge_list[e].second];
      assert(a != b);
      qadj.push_back({b, qhead[a]});
      qhead[a] = static_cast<int>(qadj.size()) - 1;
      qadj.push_back({a, qhead[b]});
      qhead[b] = static_cast<int>(qadj.size()) - 1;
    }
    std::vector<char> seen(count + 1, 0);
    std::vector<char> vis(count + 1, 0);
    std::vector<int> tree_members;
    std::vector<int> bfs;
    for (int s = 1; s <= count; ++s) {
      if (seen[s]) continue;
      tree_members.assign(1, s);
      seen[s] = 1;
      for (size_t qi = 0; qi < tree_members.size(); ++qi) {
        int x = tree_members[qi];
        for (int k = qhead[x]; k >= 0; k = qadj[k].second) {
          if (!seen[qadj[k].first]) {
            seen[qadj[k].first] = 1;
            tree_members.push_back(qadj[k].first);
          }
        }
      }
      int root = 0;
      for (int x : tree_members)
        if (node.kind[x - 1] == static_cast<std::uint8_t>(VertexKind::Simple)) {
          root = std::min(root == 0 ? x : root, x);
        }
      assert(root != 0);
      // BFS orientation away from the chosen root.
      bfs.assign(1, root);
      vis[root] = 1;
      node.parent[root - 1] = 0;
      for (size_t qi = 0; qi < bfs.size(); ++qi) {
        int x = bfs[qi];
        for (int k = qhead[x]; k >= 0; k = qadj[k].second) {
          int y = qadj[k].first;
          if (!vis[y]) {
            vis[y] = 1;
            node.parent[y - 1] = x;
            bfs.push_back(y);
          }
        }
      }
    }
  }

  void build(int idx) {
    Interval iv = node_interval(idx, tl_.t);
    bool is_root = idx == 1;
    int parent_count = is_root ? tl_.n : out_.nodes[ipar(idx)].count;
    bool do_reduce = iv.length() < tl_.n;

    // Collect the interval's edge sets with endpoints mapped through repr.
    std::vector<int> touched;
    std::vector<std::pair<int, int>> f_pairs;   // reduction input: E_P union C
    std::vector<int> ep_edge_ids;
    for_each_ep_edge(idx, [&](int e) { ep_edge_ids.push_back(e); });

    auto map_pair = [&](int e) {
      auto [u, v] = tl_.edges[e];
      touched.push_back(u);
      touched.push_back(v);
      return std::pair<int, int>{repr_[u], repr_[v]};
    };

    Reduced red;
    int marked_count = 0;
    if (do_reduce) {
      for (int e : ep_edge_ids) f_pairs.push_back(map_pair(e));
      for_each_interior_delta(iv.lo, iv.hi, [&](int e) { f_pairs.push_back(map_pair(e)); });
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

      const TwoEccNode& pn = out_.nodes[ipar(idx)];
      red = reduce(parent_count, pn.parent, pn.kind, f_pairs, &marked_count);
    } else {
      touched.resize(tl_.n);
      for (int v = 1; v <= tl_.n; ++v) touched[v - 1] = v;
      red.count = parent_count;
      red.map.resize(parent_count + 1);
      for (int s = 0; s <= parent_count; ++s) red.map[s] = s;
      if (is_root) {
        red.parent.assign(parent_count, 0);
        red.kind.assign(parent_count, static_cast<std::uint8_t>(VertexKind::Simple));
        red.chain.assign(parent_count, {0, 0});
      } else {
        const TwoEccNode& pn = out_.nodes[ipar(idx)];
        red.parent = pn.parent;
        red.kind = pn.kind;
        red.chain.assign(parent_count, {0, 0});
        for (int s = 1; s <= parent_count; ++s)
          if (pn.kind[s - 1] == static_cast<std::uint8_t>(VertexKind::Path))
            red.chain[s - 1] = {s, s};
      }
    }

    std::vector<std::pair<int, int>> saved;
    saved.reserve(touched.size());
    for (int u : touched) saved.push_back({u, repr_[u]});
    if (do_reduce)
      for (int u : touched) repr_[u] = red.map[repr_[u]];

    std::vector<std::pair<int, int>> ep_pairs;
    ep_pairs.reserve(ep_edge_ids.size());
    for (int e : ep_edge_ids) {
      auto [u, v] = tl_.edges[e];
      ep_pairs.push_back({repr_[u], repr_[v]});
    }

    TwoEccNode& node = out_.nodes[idx];
    std::vector<int> mpp;
    contract(idx, red, ep_pairs, node, mpp);
    node.marked = marked_count;
    node.f_size = do_reduce ? static_cast<int>(f_pairs.size()) : 0;

    for (int u : touched)
      if (repr_[u] != 0) repr_[u] = mpp[repr_[u]];

    if (is_root) {
      for (int s = 1; s <= tl_.n; ++s) out_.root_map[s] = mpp[s];
    } else {
      TwoEccNode& parent = out_.nodes[ipar(idx)];
      std::vector<int>& tab = (idx & 1) ? parent.rar : parent.lar;
      for (int s = 1; s <= parent_count; ++s) {
        int x = red.map[s];
        if (x != 0) x = mpp[x];
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

TwoEccTree TwoEccTree::build(const Timeline& tl, const Lifespans& ls) {
  if (!ls.partitioned()) throw std::logic_error("TwoEccTree::build: lifespans not partitioned");
  TwoEccTree tree;
  tree.n = tl.n;
  tree.t = tl.t;
  tree.B = tl.B;
  tree.nodes.resize(2 * tl.t);
  tree.root_map.assign(tl.n + 1, 0);
  TwoEccBuilder(tl, ls, tree).run();
  return tree;
}

CompId TwoEccTree::comp_id_2ecc(int w, int idx, int c, QueryStats* stats) const {
  CompId best{0, 0};
  if (is_simple(idx, w)) best = {w, idx};
  while (!is_leaf(idx, t)) {
    if (stats) ++stats->nodes_visited;
    Interval iv = node_interval(idx, t);
    bool right = c > (iv.lo + iv.hi) / 2;
    int next = child_ref(idx, w, right);
    if (next == 0) break;
    w = next;
    idx = 2 * idx + (right ? 1 : 0);
    if (is_simple(idx, w)) best = {w, idx};
  }
  if (stats) ++stats->nodes_visited;
  return best.node != 0 ? best : CompId{w, idx};
}

}  // namespace timecon
