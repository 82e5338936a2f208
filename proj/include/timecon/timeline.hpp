#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "timecon/intervals.hpp"

namespace timecon {

struct TimelineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class UpdateKind : std::uint8_t { Add, Remove, Noop };

struct Update {
  UpdateKind kind = UpdateKind::Noop;
  int edge = -1;  // index into Timeline::edges, -1 for Noop
};

// A graph timeline: versions 1..t of an undirected graph on vertices 1..n,
// consecutive versions differing by a single edge insertion or deletion.
// The stored version count t is padded with Noop steps to the smallest power
// of two that is at least max(t0, n); versions t0+1..t repeat version t0.
struct Timeline {
  int n = 0;
  int t0 = 0;  // version count before padding
  int t = 0;   // padded version count, power of two, t >= n
  int B = 0;   // t == 2^B

  std::vector<std::pair<int, int>> edges;  // id -> endpoints, u < v
  std::vector<int> initial_edges;          // edge ids present in version 1
  std::vector<Update> updates;             // t-1 steps; step i turns E_i into E_{i+1}

  int edge_count() const { return static_cast<int>(edges.size()); }

  // Parses the line-oriented timeline format:
  //   timeline <n> <t0>
  //   init <u> <v>          (zero or more)
  //   +|- <u> <v>           (exactly t0-1 lines)
  // Blank lines and lines starting with '#' are ignored.
  static Timeline parse(std::string_view text);

  // Builds and validates a timeline from in-memory pieces.  `ops` entries are
  // ('+'|'-', u, v).  Throws TimelineError on inconsistent updates.
  static Timeline create(int n, int t0, const std::vector<std::pair<int, int>>& init,
                         const std::vector<std::tuple<char, int, int>>& ops);

  // Serializes back to the file format (unpadded steps only).
  std::string to_text() const;
};

// Per-edge maximal alive intervals together with the derived delta sets and
// the per-elementary-interval edge assignment.
struct Lifespans {
  int m = 0;  // number of permanent edges (alive over all of [1, t])

  std::vector<std::vector<Interval>> spans;  // per edge id, sorted, disjoint, maximal

  // Singleton delta entries: at most one lifespan starts at a for a > 1 and
  // at most one ends at b for b < t.  Version 1 starts and version t ends are
  // kept separately since they can hold many edges.
  std::vector<int> delta_plus_at;   // index 2..t, edge id or -1
  std::vector<int> delta_minus_at;  // index 1..t-1, edge id or -1
  std::vector<int> delta_plus_one;  // lifespans starting at version 1
  std::vector<int> delta_minus_t;   // lifespans ending at version t

  // E_P for every elementary interval P, stored CSR-style over heap indices.
  std::vector<int> ep_offsets;  // size 2t+1; edges of node k at [ep_offsets[k], ep_offsets[k+1])
  std::vector<int> ep_edges;

  static Lifespans compute(const Timeline& tl);

  // Fills ep_offsets/ep_edges by splitting every lifespan into elementary
  // intervals.  Must be called before building the trees.
  void partition_all(const Timeline& tl);

  bool alive_at(int edge, int version) const;
  std::vector<int> delta_plus(int a) const;
  std::vector<int> delta_minus(int b) const;

  bool partitioned() const { return !ep_offsets.empty(); }
};

}  // namespace timecon
