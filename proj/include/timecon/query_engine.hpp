#pragma once

#include <optional>

#include "timecon/conn_tree.hpp"
#include "timecon/exists_engine.hpp"
#include "timecon/fingerprints.hpp"
#include "timecon/subword.hpp"
#include "timecon/timeline.hpp"
#include "timecon/twoecc_tree.hpp"

namespace timecon {

// Per-vertex descent state: Q = last interval on the root path where the
// vertex is represented (by s), Qp = last interval where it is represented
// by a Simple vertex (by sp).  Node references are heap indices.
struct PhiEntry {
  int q = 0;
  int s = 0;
  int qp = 0;
  int sp = 0;
};

// Precomputed descent states for every vertex at every node of the top
// B - depth levels (intervals of length >= 2^depth); O(t) entries in total.
// States for deeper nodes are derived during a query, one O(1) step per
// level.
struct PhiTable {
  int depth = 0;      // same level cut as ShortcutTable::depth
  int top_nodes = 0;  // 2 * (t >> depth) - 1
  std::vector<PhiEntry> entries;  // row-major by vertex

  static PhiTable build(const TwoEccTree& tree);

  const PhiEntry& at(int v, int node) const {
    return entries[static_cast<size_t>(v - 1) * top_nodes + node - 1];
  }
};

// One descent step: the state at a child node given the state at its parent.
PhiEntry phi_step(const TwoEccTree& tree, const PhiEntry& e, int parent_idx, bool right);

// Builds the 2-edge-connectivity symbol word from the per-block descent
// states and fingerprints.
SymbolWord build_twoecc_symbol_word(const TwoEccTree& tree, const PhiTable& phi,
                                    const FingerprintTable& fp);

// Front end over all preprocessing structures.  Each query kind builds what
// it needs on first use; queries are read-only afterwards.
class QueryEngine {
 public:
  explicit QueryEngine(Timeline tl);

  const Timeline& timeline() const { return tl_; }
  const Lifespans& lifespans() const { return ls_; }

  void ensure_forall();
  void ensure_forexists();
  void ensure_exists(double alpha);

  // True iff u and v are connected in every version of [x, y].
  bool forall(int u, int v, int x, int y, QueryStats* stats = nullptr);
  // True iff u and v are 2-edge-connected in every version of [x, y].
  bool forexists(int u, int v, int x, int y, QueryStats* stats = nullptr);
  // True iff u and v are connected in some version of [x, y].
  bool exists(int u, int v, int x, int y, QueryStats* stats = nullptr);

  // Test hook: answers the whole-block middle run by per-block symbol
  // comparison instead of one subword probe.
  bool forall_middle_by_blocks(int u, int v, int l1, int l2) const;
  bool forexists_middle_by_blocks(int u, int v, int l1, int l2) const;

  const ConnTree& conn_tree() { ensure_forall(); return *conn_; }
  const ShortcutTable& shortcuts() { ensure_forall(); return *scut_; }
  const FingerprintTable& conn_fingerprints() { ensure_forall(); return *conn_fp_; }
  const SymbolWord& conn_word() { ensure_forall(); return *conn_word_; }
  const TwoEccTree& twoecc_tree() { ensure_forexists(); return *ecc_; }
  const PhiTable& phi() { ensure_forexists(); return *phi_; }
  const FingerprintTable& twoecc_fingerprints() { ensure_forexists(); return *ecc_fp_; }
  const SymbolWord& twoecc_word() { ensure_forexists(); return *ecc_word_; }
  const ExistsStructure& exists_structure(double alpha) {
    ensure_exists(alpha);
    return *exists_;
  }

 private:
  void check_query(int u, int v, int x, int y) const;
  bool forall_block(int u, int v, int x, int y, int block, QueryStats* stats) const;
  bool forall_aux(int s1, int s2, int x, int y, int a, int b, int idx, QueryStats* stats) const;
  bool forexists_block(int u, int v, int x, int y, int block, QueryStats* stats) const;
  bool forexists_aux(const PhiEntry& pu, const PhiEntry& pv, int x, int y, int a, int b, int idx,
                     QueryStats* stats) const;
  bool forexists_case(const PhiEntry& pu, const PhiEntry& pv, int idx) const;

  Timeline tl_;
  Lifespans ls_;
  std::optional<ConnTree> conn_;
  std::optional<ShortcutTable> scut_;
  std::optional<FingerprintTable> conn_fp_;
  std::optional<SymbolWord> conn_word_;
  std::optional<SubwordEq> conn_eq_;
  std::optional<TwoEccTree> ecc_;
  std::optional<PhiTable> phi_;
  std::optional<FingerprintTable> ecc_fp_;
  std::optional<SymbolWord> ecc_word_;
  std::optional<SubwordEq> ecc_eq_;
  std::optional<ExistsStructure> exists_;
};

}  // namespace timecon
