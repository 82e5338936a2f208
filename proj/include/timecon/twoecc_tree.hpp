#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "timecon/conn_tree.hpp"
#include "timecon/timeline.hpp"

namespace timecon {

enum class VertexKind : std::uint8_t { Simple = 0, Path = 1 };

// One node of the 2-edge-connectivity hierarchy: a rooted forest whose
// vertices represent 2-edge-connected components of the intersection graph.
// A Simple vertex stands for a single component; a Path vertex stands for a
// chain of components linked by single edges.  Invariants: roots and
// vertices of degree != 2 are Simple, Path vertices have degree exactly 2
// and are never adjacent to each other.
struct TwoEccNode {
  int count = 0;
  std::vector<int> lar;
  std::vector<int> rar;
  std::vector<std::uint8_t> kind;            // VertexKind, indexed by vertex-1
  std::vector<int> parent;                   // vertex-1 -> parent vertex, 0 = root
  std::vector<std::pair<int, int>> chain;    // Path vertices: ids one level up where
                                             // the parent-side / child-side edges attach
  int marked = 0;   // reduction stats: vertices marked
  int f_size = 0;   // |E_P union C| seen by the reduction (0 when skipped)
};

class TwoEccTree {
 public:
  int n = 0;
  int t = 0;
  int B = 0;
  std::vector<TwoEccNode> nodes;
  std::vector<int> root_map;

  static TwoEccTree build(const Timeline& tl, const Lifespans& ls);

  int child_ref(int idx, int w, bool right) const {
    const std::vector<int>& tab = right ? nodes[idx].rar : nodes[idx].lar;
    return tab.empty() ? 0 : tab[w - 1];
  }
  bool is_simple(int idx, int w) const {
    return nodes[idx].kind[w - 1] == static_cast<std::uint8_t>(VertexKind::Simple);
  }

  // Descends from vertex w of node idx toward leaf [c,c] and returns the
  // last pair along the path whose vertex is Simple.  Two original vertices
  // are 2-edge-connected in G_c iff their results (from the root) are equal.
  CompId comp_id_2ecc(int w, int idx, int c, QueryStats* stats = nullptr) const;
};

}  // namespace timecon
