// SPDX-License-Identifier: Apache-2.0
//
// Orientations of graphs: acyclicity, transitivity, shortcuts and the
// semi-transitive orientation search that decides word-representability.

#ifndef WORDREP_ORIENTATION_HPP
#define WORDREP_ORIENTATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

/// A directed edge tail -> head.
struct Arc {
  int tail;
  int head;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A graph together with one direction for each of its edges. A fresh
/// OrientedGraph points every edge from the lower to the higher label.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(Graph base);
  /// Every listed arc must be an edge of `base`; unlisted edges go low->high.
  OrientedGraph(Graph base, std::initializer_list<Arc> arcs);

  /// Direction bitstring: one character per edge in lexicographic edge
  /// order, '0' for low->high and '1' for high->low.
  static OrientedGraph from_bitstring(Graph base, std::string_view bits);

  const Graph& base() const { return base_; }
  int order() const { return base_.order(); }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
  Bits out(int v) const { return out_[v]; }
  Bits in(int v) const { return base_.neighbors(v) & ~out_[v]; }

  /// Directs the edge {u,v} as u -> v. Throws if it is not an edge.
  void orient(int u, int v);

  /// Arcs listed in lexicographic order of the underlying edges.
  std::vector<Arc> arcs() const;
  std::string bitstring() const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.base_ == b.base_ && a.out_ == b.out_;
  }

 private:
  Graph base_;
  std::vector<Bits> out_;
};

/// Every arc reversed.
OrientedGraph reversed(const OrientedGraph& og);

/// Sub-orientation induced by `s`, relabelled like induced_subgraph.
OrientedGraph induced_orientation(const OrientedGraph& og, Bits s);

/// "digraph G { u -> v; ... }"
std::string to_dot(const OrientedGraph& og);

/// "<graph6> <bitstring>" and its inverse. Parse errors throw ParseError or
/// std::invalid_argument.
std::string format_oriented(const OrientedGraph& og);
OrientedGraph parse_oriented(std::string_view line);

bool is_acyclic(const OrientedGraph& og);
bool is_transitive(const OrientedGraph& og);

/// Vertices reachable from v by a non-empty directed path (v itself only if
/// it lies on a cycle).
std::vector<Bits> reachability(const OrientedGraph& og);

struct ShortcutWitness {
  /// Directed path from source to sink through every vertex of the shortcut.
  std::vector<int> path;
  Arc shortcutting_edge;
  /// Two path vertices, in path order, with no arc between them.
  std::pair<int, int> missing_pair;
};

/// First shortcut found scanning arcs in lexicographic edge order and then
/// the missing pair in ascending order. Throws std::invalid_argument on a
/// cyclic orientation.
std::optional<ShortcutWitness> find_shortcut(const OrientedGraph& og);

/// Re-checks every field of a witness against og. Returns an empty string
/// when the witness is valid, otherwise what is wrong with it.
std::string validate_shortcut(const OrientedGraph& og, const ShortcutWitness& w);

bool is_semi_transitive(const OrientedGraph& og);

/// Backtracking decision procedure. Returns the first semi-transitive
/// orientation under a fixed branching order, or nullopt if none exists.
std::optional<OrientedGraph> find_semi_transitive_orientation(const Graph& g);

bool is_word_representable(const Graph& g);

/// Number of semi-transitive orientations of g containing every arc of
/// `fixed`. Arcs must be edges of g.
std::uint64_t count_semi_transitive_extensions(const Graph& g, const std::vector<Arc>& fixed);

/// Calls `visit` for every semi-transitive orientation extending `fixed`,
/// in branching order. Returning false from `visit` stops the enumeration.
void for_each_semi_transitive_orientation(const Graph& g, const std::vector<Arc>& fixed,
                                          const std::function<bool(const OrientedGraph&)>& visit);

}  // namespace wordrep

#endif  // WORDREP_ORIENTATION_HPP
