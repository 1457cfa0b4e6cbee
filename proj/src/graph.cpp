// SPDX-License-Identifier: Apache-2.0

#include "wordrep/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wordrep {

std::vector<int> bits_to_vector(Bits b) {
  std::vector<int> out;
  out.reserve(popcount(b));
  for_each_bit(b, [&](int v) { out.push_back(v); });
  return out;
}

Bits vector_to_bits(std::span<const int> vs) {
  Bits b = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    b |= bit(v);
  }
  return b;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("graph order " + std::to_string(n) +
                            " outside 0.." + std::to_string(kMaxVertices));
  }
  adj_.assign(n, 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph on " + std::to_string(n_) +
                            " vertices");
  }
}

int Graph::size() const {
  int total = 0;
  for (Bits b : adj_) total += popcount(b);
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool Graph::is_clique(Bits s) const {
  bool ok = true;
  for_each_bit(s, [&](int v) { ok = ok && (s & ~bit(v) & ~adj_[v]) == 0; });
  return ok;
}

bool Graph::is_independent(Bits s) const {
  bool ok = true;
  for_each_bit(s, [&](int v) { ok = ok && (s & adj_[v]) == 0; });
  return ok;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int v = 0; v < n_; ++v) c.adj_[v] = all() & ~adj_[v] & ~bit(v);
  return c;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  Bits seen = bit(0);
  Bits frontier = seen;
  while (frontier) {
    Bits next = 0;
    for_each_bit(frontier, [&](int v) { next |= adj_[v]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all();
}

VertexSet::VertexSet(int host_order, Bits members) : host_(host_order), bits_(members) {
  if ((members & ~low_bits(host_order)) != 0) {
    throw std::out_of_range("vertex set exceeds host range 0.." +
                            std::to_string(host_order - 1));
  }
}

VertexSet::VertexSet(int host_order, std::initializer_list<int> members)
    : VertexSet(host_order, vector_to_bits(std::vector<int>(members))) {}

Graph induced_subgraph(const Graph& g, Bits s) {
  if ((s & ~g.all()) != 0) {
    throw std::out_of_range("vertex set exceeds graph order " + std::to_string(g.order()));
  }
  std::vector<int> keep = bits_to_vector(s);
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.host_order() != g.order() && (s.bits() & ~g.all()) != 0) {
    throw std::out_of_range("vertex set does not belong to this graph");
  }
  return induced_subgraph(g, s.bits());
}

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  return induced_subgraph(g, g.all() & ~bit(v));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.order() + h.order());
  for (const Edge& e : g.edges()) u.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) u.add_edge(e.u + g.order(), e.v + g.order());
  return u;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", {";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ", ") << e.u << '-' << e.v;
    first = false;
  }
  os << "})";
  return os.str();
}

}  // namespace wordrep
