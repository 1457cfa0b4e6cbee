// SPDX-License-Identifier: Apache-2.0
//
// Undirected simple graphs on at most 64 vertices, stored as adjacency
// bitsets. Every other part of the library builds on this type.

#ifndef WORDREP_GRAPH_HPP
#define WORDREP_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordrep {

using Bits = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Bits bit(int v) { return Bits{1} << v; }

constexpr Bits low_bits(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

inline int popcount(Bits b) { return std::popcount(b); }

/// Index of the lowest set bit; `b` must be non-zero.
inline int lowest(Bits b) { return std::countr_zero(b); }

/// Calls `f(v)` for every set bit of `b` in ascending order.
template <typename F>
void for_each_bit(Bits b, F&& f) {
  while (b != 0) {
    int v = std::countr_zero(b);
    b &= b - 1;
    f(v);
  }
}

std::vector<int> bits_to_vector(Bits b);
Bits vector_to_bits(std::span<const int> vs);

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Bits neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  Bits all() const { return low_bits(n_); }

  /// Adds {u,v}. Self-loops and out-of-range labels throw; duplicates are
  /// ignored.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges {u,v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  bool is_clique(Bits s) const;
  bool is_independent(Bits s) const;

  Graph complement() const;
  /// True for the empty graph and for a single component.
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Bits> adj_;
};

/// A subset of some host graph's vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int host_order, Bits members);
  VertexSet(int host_order, std::initializer_list<int> members);

  Bits bits() const { return bits_; }
  int host_order() const { return host_; }
  int count() const { return popcount(bits_); }
  bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1U); }
  std::vector<int> members() const { return bits_to_vector(bits_); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int host_ = 0;
  Bits bits_ = 0;
};

/// Injective map from pattern vertices (index) to host vertices (value).
using Embedding = std::vector<int>;

/// Subgraph induced by `s`, relabelled 0..|s|-1 in ascending label order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, Bits s);

/// g with vertex v deleted (higher labels shift down by one).
Graph remove_vertex(const Graph& g, int v);

/// Relabels g so that old vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Disjoint union; h's vertices follow g's.
Graph disjoint_union(const Graph& g, const Graph& h);

std::string to_string(const Graph& g);

}  // namespace wordrep

#endif  // WORDREP_GRAPH_HPP
