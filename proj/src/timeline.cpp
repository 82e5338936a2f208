#include "timecon/timeline.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

namespace timecon {

namespace {

struct EdgeInterner {
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>>* edges;

  int intern(int u, int v) {
    if (u > v) std::swap(u, v);
    auto [it, inserted] = ids.try_emplace({u, v}, static_cast<int>(edges->size()));
    if (inserted) edges->push_back({u, v});
    return it->second;
  }
};

void check_vertex_pair(int n, int u, int v, const std::string& where) {
  if (u < 1 || u > n || v < 1 || v > n)
    throw TimelineError(where + ": vertex out of range 1.." + std::to_string(n));
  if (u == v) throw TimelineError(where + ": self-loops are not allowed");
}

}  // namespace

Timeline Timeline::create(int n, int t0, const std::vector<std::pair<int, int>>& init,
                          const std::vector<std::tuple<char, int, int>>& ops) {
  if (n < 1) throw TimelineError("vertex count must be positive");
  if (t0 < 1) throw TimelineError("version count must be positive");
  if (static_cast<int>(ops.size()) != t0 - 1)
    throw TimelineError("expected " + std::to_string(t0 - 1) + " update lines, got " +
                        std::to_string(ops.size()));

  Timeline tl;
  tl.n = n;
  tl.t0 = t0;
  tl.t = next_power_of_two(std::max(t0, n));
  tl.B = floor_log2(tl.t);

  EdgeInterner interner{{}, &tl.edges};
  std::vector<char> present;

  for (auto [u, v] : init) {
    check_vertex_pair(n, u, v, "init");
    int e = interner.intern(u, v);
    if (e < static_cast<int>(present.size()) && present[e])
      throw TimelineError("duplicate initial edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    present.resize(tl.edges.size(), 0);
    present[e] = 1;
    tl.initial_edges.push_back(e);
  }

  int step = 1;
  for (auto [op, u, v] : ops) {
    std::string where = "step " + std::to_string(step);
    check_vertex_pair(n, u, v, where);
    int e = interner.intern(u, v);
    present.resize(tl.edges.size(), 0);
    if (op == '+') {
      if (present[e]) throw TimelineError(where + ": adding an edge that is already present");
      present[e] = 1;
      tl.updates.push_back({UpdateKind::Add, e});
    } else if (op == '-') {
      if (!present[e]) throw TimelineError(where + ": removing an edge that is absent");
      present[e] = 0;
      tl.updates.push_back({UpdateKind::Remove, e});
    } else {
      throw TimelineError(where + ": unknown operation");
    }
    ++step;
  }
  tl.updates.resize(tl.t - 1);  // trailing entries default to Noop
  return tl;
}

Timeline Timeline::parse(std::string_view text) {
  std::vector<std::pair<int, int>> init;
  std::vector<std::tuple<char, int, int>> ops;
  int n = -1, t0 = -1;
  bool have_header = false;

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    std::string trimmed(line);
    std::istringstream in(trimmed);
    std::string tok;
    if (!(in >> tok) || tok[0] == '#') continue;

    auto fail = [&](const std::string& msg) -> void {
      throw TimelineError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto read_pair = [&](int& u, int& v) {
      if (!(in >> u >> v)) fail("expected two integers");
    };

    if (tok == "timeline") {
      if (have_header) fail("duplicate header");
      if (!(in >> n >> t0)) fail("expected 'timeline <n> <t0>'");
      have_header = true;
    } else if (tok == "init") {
      if (!have_header) fail("'init' before header");
      if (!ops.empty()) fail("'init' after update lines");
      int u, v;
      read_pair(u, v);
      init.push_back({u, v});
    } else if (tok == "+" || tok == "-") {
      if (!have_header) fail("update before header");
      int u, v;
      read_pair(u, v);
      ops.push_back({tok[0], u, v});
    } else {
      fail("unrecognized line '" + tok + "'");
    }
  }
  if (!have_header) throw TimelineError("missing 'timeline <n> <t0>' header");
  return create(n, t0, init, ops);
}

std::string Timeline::to_text() const {
  std::ostringstream out;
  out << "timeline " << n << ' ' << t0 << '\n';
  for (int e : initial_edges) out << "init " << edges[e].first << ' ' << edges[e].second << '\n';
  for (int i = 0; i < t0 - 1; ++i) {
    const Update& up = updates[i];
    out << (up.kind == UpdateKind::Add ? '+' : '-') << ' ' << edges[up.edge].first << ' '
        << edges[up.edge].second << '\n';
  }
  return out.str();
}

Lifespans Lifespans::compute(const Timeline& tl) {
  Lifespans ls;
  ls.spans.resize(tl.edges.size());
  ls.delta_plus_at.assign(tl.t + 1, -1);
  ls.delta_minus_at.assign(tl.t + 1, -1);

  std::vector<int> open(tl.edges.size(), 0);  // start of current alive interval, 0 = absent
  for (int e : tl.initial_edges) open[e] = 1;
  for (int i = 1; i <= tl.t - 1; ++i) {
    const Update& up = tl.updates[i - 1];
    if (up.kind == UpdateKind::Add) {
      open[up.edge] = i + 1;
    } else if (up.kind == UpdateKind::Remove) {
      ls.spans[up.edge].push_back({open[up.edge], i});
      open[up.edge] = 0;
    }
  }
  for (int e = 0; e < tl.edge_count(); ++e)
    if (open[e] > 0) ls.spans[e].push_back({open[e], tl.t});

  for (int e = 0; e < tl.edge_count(); ++e) {
    if (ls.spans[e].size() == 1 && ls.spans[e][0] == Interval{1, tl.t}) ++ls.m;
    for (const Interval& iv : ls.spans[e]) {
      if (iv.lo == 1)
        ls.delta_plus_one.push_back(e);
      else
        ls.delta_plus_at[iv.lo] = e;
      if (iv.hi == tl.t)
        ls.delta_minus_t.push_back(e);
      else
        ls.delta_minus_at[iv.hi] = e;
    }
  }
  return ls;
}

void Lifespans::partition_all(const Timeline& tl) {
  std::vector<std::pair<int, int>> assignments;  // (heap node, edge)
  for (int e = 0; e < tl.edge_count(); ++e)
    for (const Interval& iv : spans[e])
      for (int node : partition_interval(iv.lo, iv.hi, tl.t)) assignments.push_back({node, e});
  std::sort(assignments.begin(), assignments.end());

  ep_offsets.assign(2 * tl.t + 1, 0);
  ep_edges.resize(assignments.size());
  for (const auto& [node, e] : assignments) ++ep_offsets[node + 1];
  for (size_t k = 1; k < ep_offsets.size(); ++k) ep_offsets[k] += ep_offsets[k - 1];
  for (size_t k = 0; k < assignments.size(); ++k) ep_edges[k] = assignments[k].second;
}

bool Lifespans::alive_at(int edge, int version) const {
  for (const Interval& iv : spans[edge])
    if (iv.contains(version)) return true;
  return false;
}

std::vector<int> Lifespans::delta_plus(int a) const {
  if (a == 1) return delta_plus_one;
  std::vector<int> out;
  if (delta_plus_at[a] >= 0) out.push_back(delta_plus_at[a]);
  return out;
}

std::vector<int> Lifespans::delta_minus(int b) const {
  if (b + 1 == static_cast<int>(delta_minus_at.size())) return delta_minus_t;
  std::vector<int> out;
  if (delta_minus_at[b] >= 0) out.push_back(delta_minus_at[b]);
  return out;
}

}  // namespace timecon
