// SPDX-License-Identifier: Apache-2.0

#include "wordrep/split.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "wordrep/families.hpp"

namespace wordrep {

namespace {

SplitPartition make_partition(const Graph& g, Bits clique) {
  return {g, VertexSet(g.order(), clique), VertexSet(g.order(), g.all() & ~clique)};
}

}  // namespace

std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.order();
  std::vector<int> byDegree(n);
  std::iota(byDegree.begin(), byDegree.end(), 0);
  std::stable_sort(byDegree.begin(), byDegree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  // Degree-sequence test: with d_1 >= ... >= d_n and m the largest i with
  // d_i >= i-1, g is split iff sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i.
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (g.degree(byDegree[i]) >= i) m = i + 1;
  }
  long head = 0;
  long tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(byDegree[i]);
  if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;

  Bits clique = 0;
  for (int i = 0; i < m; ++i) clique |= bit(byDegree[i]);
  if (!g.is_clique(clique) || !g.is_independent(g.all() & ~clique)) {
    throw std::logic_error("degree-sequence split test produced an invalid partition");
  }
  // Grow to a maximal clique (the test already gives a maximum one).
  for (int x = 0; x < n; ++x) {
    if (!(clique & bit(x)) && (g.neighbors(x) & clique) == clique) clique |= bit(x);
  }
  // Other maximal partitions swap one clique vertex u with no independent
  // neighbour for an independent x adjacent to the rest of the clique.
  Bits best = clique;
  auto less = [](Bits a, Bits b) { return bits_to_vector(a) < bits_to_vector(b); };
  const Bits independent = g.all() & ~clique;
  for_each_bit(clique, [&](int u) {
    if (g.neighbors(u) & independent) return;
    for_each_bit(independent, [&](int x) {
      if (g.neighbors(x) == (clique & ~bit(u))) {
        Bits alt = (clique & ~bit(u)) | bit(x);
        if (less(alt, best)) best = alt;
      }
    });
  });
  return make_partition(g, best);
}

bool has_split_obstruction(const Graph& g) {
  return contains_induced(g, named({FamilyTag::C, {4}})).has_value() ||
         contains_induced(g, named({FamilyTag::C, {5}})).has_value() ||
         contains_induced(g, named({FamilyTag::TWO_K2, {}})).has_value();
}

bool is_split(const Graph& g) {
  bool by_partition = split_partition(g).has_value();
  if (by_partition == has_split_obstruction(g)) {
    throw std::logic_error("split tests disagree on " + to_string(g));
  }
  return by_partition;
}

ReducedSplit reduce(const SplitPartition& sp) {
  Graph g = sp.host;
  std::vector<int> labels(g.order());
  std::iota(labels.begin(), labels.end(), 0);
  SplitPartition current = sp;
  for (;;) {
    int victim = -1;
    for (int v = 0; v < g.order() && victim < 0; ++v) {
      bool low_degree = current.independent.contains(v) && g.degree(v) <= 1;
      bool twin = false;
      for (int u = 0; u < v && !twin; ++u) twin = g.neighbors(u) == g.neighbors(v);
      if (low_degree || twin) victim = v;
    }
    if (victim < 0) break;
    g = remove_vertex(g, victim);
    labels.erase(labels.begin() + victim);
    auto next = split_partition(g);
    if (!next) throw std::logic_error("induced subgraph of a split graph is not split");
    current = *next;
  }
  return {current, labels};
}

std::optional<OrientedGraph> find_transitive_orientation(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  std::vector<Bits> out(n, 0);
  std::vector<Bits> decided(n, 0);

  // u -> v is consistent with decided arcs if every two-step path through it
  // can still be closed by an arc in the right direction.
  auto consistent = [&](int u, int v) {
    Bits into_u = g.neighbors(u) & decided[u] & ~out[u];
    Bits out_of_v = out[v];
    for (Bits b = into_u; b; b &= b - 1) {
      int w = lowest(b);
      if (!g.adjacent(w, v)) return false;
      if ((decided[w] & bit(v)) && !(out[w] & bit(v))) return false;
    }
    for (Bits b = out_of_v; b; b &= b - 1) {
      int w = lowest(b);
      if (!g.adjacent(u, w)) return false;
      if ((decided[u] & bit(w)) && !(out[u] & bit(w))) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
    if (i == edges.size()) return true;
    const Edge e = edges[i];
    for (int t = 0; t < 2; ++t) {
      int u = t == 0 ? e.u : e.v;
      int v = t == 0 ? e.v : e.u;
      if (!consistent(u, v)) continue;
      out[u] |= bit(v);
      decided[u] |= bit(v);
      decided[v] |= bit(u);
      if (dfs(i + 1)) return true;
      out[u] &= ~bit(v);
      decided[u] &= ~bit(v);
      decided[v] &= ~bit(u);
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  OrientedGraph og(g);
  for (int u = 0; u < n; ++u) for_each_bit(out[u], [&](int v) { og.orient(u, v); });
  if (!is_transitive(og)) throw std::logic_error("transitive orientation search is unsound");
  return og;
}

std::optional<ComparabilityObstruction> split_comparability_obstruction(const Graph& g) {
  if (!split_partition(g)) throw std::invalid_argument("graph is not split");
  for (FamilyTag t : {FamilyTag::B1, FamilyTag::B2, FamilyTag::B3}) {
    if (auto e = contains_induced(g, named({t, {}}))) return ComparabilityObstruction{family_name(t), *e};
  }
  return std::nullopt;
}

bool is_split_comparability(const Graph& g) {
  bool result = !split_comparability_obstruction(g).has_value();
  if (g.order() <= 10 && result != find_transitive_orientation(g).has_value()) {
    throw std::logic_error("split comparability tests disagree on " + to_string(g));
  }
  return result;
}

std::optional<HamiltonianCliquePath> clique_path(const SplitPartition& sp,
                                                 const OrientedGraph& og) {
  const Bits clique = sp.clique.bits();
  const int m = popcount(clique);
  HamiltonianCliquePath path;
  path.order.assign(m, -1);
  path.position.assign(og.order(), -1);
  // A tournament is transitive iff its in-degrees are exactly 0..m-1.
  bool ok = true;
  for_each_bit(clique, [&](int v) {
    int rank = popcount(og.in(v) & clique);
    if (rank >= m || path.order[rank] != -1) {
      ok = false;
      return;
    }
    path.order[rank] = v;
    path.position[v] = rank;
  });
  if (!ok) return std::nullopt;
  return path;
}

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::A: return "A";
    case VertexKind::B: return "B";
    case VertexKind::C: return "C";
    case VertexKind::INVALID: return "INVALID";
  }
  return "?";
}

namespace {

bool consecutive(const std::vector<int>& sorted) {
  return sorted.empty() || sorted.back() - sorted.front() + 1 == static_cast<int>(sorted.size());
}

VertexTypeReport classify_on_path(const HamiltonianCliquePath& path, const OrientedGraph& og,
                                  int x) {
  VertexTypeReport r;
  r.vertex = x;
  std::vector<int> in_pos;
  std::vector<int> out_pos;
  for_each_bit(og.base().neighbors(x), [&](int c) {
    (og.has_arc(c, x) ? in_pos : out_pos).push_back(path.position[c]);
  });
  std::sort(in_pos.begin(), in_pos.end());
  std::sort(out_pos.begin(), out_pos.end());
  std::merge(in_pos.begin(), in_pos.end(), out_pos.begin(), out_pos.end(),
             std::back_inserter(r.neighbors_on_path));
  const int m = static_cast<int>(path.order.size());
  if (in_pos.empty() && consecutive(out_pos)) {
    r.kind = VertexKind::A;
  } else if (out_pos.empty() && consecutive(in_pos)) {
    r.kind = VertexKind::B;
  } else if (!in_pos.empty() && !out_pos.empty() && consecutive(in_pos) && consecutive(out_pos) &&
             in_pos.front() == 0 && out_pos.back() == m - 1) {
    r.kind = VertexKind::C;
    for (int p : in_pos) r.source_group.push_back(path.order[p]);
    for (int p : out_pos) r.sink_group.push_back(path.order[p]);
    r.boundary = std::make_pair(r.source_group.back(), r.sink_group.front());
  }
  return r;
}

}  // namespace

VertexTypeReport classify_vertex(const SplitPartition& sp, const OrientedGraph& og, int x) {
  if (!sp.independent.contains(x)) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " is not in the independent set");
  }
  auto path = clique_path(sp, og);
  if (!path) throw std::invalid_argument("clique is not transitively oriented");
  return classify_on_path(*path, og, x);
}

std::vector<VertexTypeReport> classify_all(const SplitPartition& sp, const OrientedGraph& og) {
  auto path = clique_path(sp, og);
  if (!path) throw std::invalid_argument("clique is not transitively oriented");
  std::vector<VertexTypeReport> reports;
  for_each_bit(sp.independent.bits(),
               [&](int x) { reports.push_back(classify_on_path(*path, og, x)); });
  return reports;
}

std::string to_string(OrderViolation::Kind kind) {
  return kind == OrderViolation::Kind::AB_ADJACENT_TO_BOUNDARY ? "AB_ADJACENT_TO_BOUNDARY"
                                                               : "C_GROUP_CONTAINS_BOUNDARY";
}

std::vector<OrderViolation> check_relative_order(const SplitPartition& sp,
                                                 const std::vector<VertexTypeReport>& reports) {
  for (const auto& r : reports) {
    if (r.kind == VertexKind::INVALID) {
      throw std::invalid_argument("vertex " + std::to_string(r.vertex) + " has no valid type");
    }
  }
  auto holds_both = [](const std::vector<int>& group, std::pair<int, int> b) {
    return std::find(group.begin(), group.end(), b.first) != group.end() &&
           std::find(group.begin(), group.end(), b.second) != group.end();
  };
  std::vector<OrderViolation> found;
  for (const auto& x : reports) {
    if (x.kind != VertexKind::C) continue;
    const auto b = *x.boundary;
    for (const auto& y : reports) {
      if (y.vertex == x.vertex) continue;
      if (y.kind == VertexKind::C) {
        if (holds_both(y.source_group, b) || holds_both(y.sink_group, b)) {
          found.push_back({y.vertex, x.vertex, b, OrderViolation::Kind::C_GROUP_CONTAINS_BOUNDARY});
        }
      } else if (sp.host.adjacent(y.vertex, b.first) && sp.host.adjacent(y.vertex, b.second)) {
        found.push_back({y.vertex, x.vertex, b, OrderViolation::Kind::AB_ADJACENT_TO_BOUNDARY});
      }
    }
  }
  return found;
}

bool check_main_orientation(const SplitPartition& sp, const OrientedGraph& og) {
  auto path = clique_path(sp, og);
  if (!path) return false;
  std::vector<VertexTypeReport> reports;
  for (Bits b = sp.independent.bits(); b; b &= b - 1) {
    reports.push_back(classify_on_path(*path, og, lowest(b)));
    if (reports.back().kind == VertexKind::INVALID) return false;
  }
  return check_relative_order(sp, reports).empty();
}

OrientedGraph toggle_ab(const SplitPartition& sp, const OrientedGraph& og, int x) {
  VertexTypeReport r = classify_vertex(sp, og, x);
  if (r.kind != VertexKind::A && r.kind != VertexKind::B) {
    throw std::invalid_argument("vertex " + std::to_string(x) + " is not of type A or B");
  }
  if (!is_semi_transitive(og)) throw std::invalid_argument("orientation is not semi-transitive");
  OrientedGraph flipped = og;
  for_each_bit(og.base().neighbors(x), [&](int c) {
    if (og.has_arc(c, x)) {
      flipped.orient(x, c);
    } else {
      flipped.orient(c, x);
    }
  });
  if (!is_semi_transitive(flipped)) {
    throw std::logic_error("flipping vertex " + std::to_string(x) + " broke semi-transitivity");
  }
  return flipped;
}

}  // namespace wordrep
