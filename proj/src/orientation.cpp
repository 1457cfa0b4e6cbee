// SPDX-License-Identifier: Apache-2.0

#include "wordrep/orientation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wordrep/graph6.hpp"

namespace wordrep {

OrientedGraph::OrientedGraph(Graph base) : base_(std::move(base)), out_(base_.order(), 0) {
  for (int v = 0; v < base_.order(); ++v) out_[v] = base_.neighbors(v) & ~low_bits(v + 1);
}

OrientedGraph::OrientedGraph(Graph base, std::initializer_list<Arc> arcs)
    : OrientedGraph(std::move(base)) {
  for (const Arc& a : arcs) orient(a.tail, a.head);
}

OrientedGraph OrientedGraph::from_bitstring(Graph base, std::string_view bits) {
  OrientedGraph og(std::move(base));
  std::vector<Edge> es = og.base_.edges();
  if (bits.size() != es.size()) {
    throw std::invalid_argument("direction bitstring has " + std::to_string(bits.size()) +
                                " bits but the graph has " + std::to_string(es.size()) +
                                " edges");
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (bits[i] == '1') {
      og.orient(es[i].v, es[i].u);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("direction bitstring contains '" + std::string(1, bits[i]) +
                                  "' at offset " + std::to_string(i));
    }
  }
  return og;
}

void OrientedGraph::orient(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order() || !base_.adjacent(u, v)) {
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  }
  out_[u] |= bit(v);
  out_[v] &= ~bit(u);
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> result;
  for (const Edge& e : base_.edges()) {
    result.push_back(has_arc(e.u, e.v) ? Arc{e.u, e.v} : Arc{e.v, e.u});
  }
  return result;
}

std::string OrientedGraph::bitstring() const {
  std::string s;
  for (const Edge& e : base_.edges()) s.push_back(has_arc(e.u, e.v) ? '0' : '1');
  return s;
}

OrientedGraph reversed(const OrientedGraph& og) {
  OrientedGraph r(og.base());
  for (const Arc& a : og.arcs()) r.orient(a.head, a.tail);
  return r;
}

OrientedGraph induced_orientation(const OrientedGraph& og, Bits s) {
  std::vector<int> index(og.order(), -1);
  int k = 0;
  for_each_bit(s & og.base().all(), [&](int v) { index[v] = k++; });
  OrientedGraph sub(induced_subgraph(og.base(), s));
  for (const Arc& a : og.arcs()) {
    if (index[a.tail] >= 0 && index[a.head] >= 0) sub.orient(index[a.tail], index[a.head]);
  }
  return sub;
}

std::string to_dot(const OrientedGraph& og) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < og.order(); ++v) {
    if (og.base().degree(v) == 0) os << "  " << v << ";\n";
  }
  for (const Arc& a : og.arcs()) os << "  " << a.tail << " -> " << a.head << ";\n";
  os << "}\n";
  return os.str();
}

std::string format_oriented(const OrientedGraph& og) {
  std::string bits = og.bitstring();
  std::string g6 = write_graph6(og.base());
  return bits.empty() ? g6 : g6 + " " + bits;
}

OrientedGraph parse_oriented(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  std::size_t space = line.find(' ');
  Graph g = parse_graph6(line.substr(0, space));
  std::string_view bits;
  if (space != std::string_view::npos) {
    bits = line.substr(space + 1);
    while (!bits.empty() && bits.front() == ' ') bits.remove_prefix(1);
  }
  return OrientedGraph::from_bitstring(std::move(g), bits);
}

std::vector<Bits> reachability(const OrientedGraph& og) {
  const int n = og.order();
  std::vector<Bits> reach(n, 0);
  for (int s = 0; s < n; ++s) {
    Bits frontier = og.out(s);
    Bits seen = 0;
    while (frontier != 0) {
      seen |= frontier;
      Bits next = 0;
      for_each_bit(frontier, [&](int v) { next |= og.out(v); });
      frontier = next & ~seen;
    }
    reach[s] = seen;
  }
  return reach;
}

bool is_acyclic(const OrientedGraph& og) {
  std::vector<Bits> reach = reachability(og);
  for (int v = 0; v < og.order(); ++v) {
    if (reach[v] & bit(v)) return false;
  }
  return true;
}

bool is_transitive(const OrientedGraph& og) {
  for (int u = 0; u < og.order(); ++u) {
    bool closed = true;
    for_each_bit(og.out(u), [&](int v) { closed = closed && (og.out(v) & ~og.out(u)) == 0; });
    if (!closed) return false;
  }
  return true;
}

namespace {

// Greedy walk from `from` to `to`: each step takes the
// smallest out-neighbour that still reaches `to`.
void append_path(const OrientedGraph& og, const std::vector<Bits>& reach, int from, int to,
                 std::vector<int>& path) {
  int cur = from;
  while (cur != to) {
    Bits next = 0;
    for_each_bit(og.out(cur), [&](int w) {
      if (w == to || (reach[w] & bit(to))) next |= bit(w);
    });
    cur = lowest(next);
    path.push_back(cur);
  }
}

// The arc a->b shortcuts some subgraph iff two vertices x, y lying between a
// and b (inclusive) are non-adjacent while x reaches y. Returns that pair.
std::optional<std::pair<int, int>> shortcut_pair(const Graph& base, const std::vector<Bits>& desc,
                                                 const std::vector<Bits>& anc, int a, int b) {
  Bits between = (desc[a] & anc[b]) | bit(a) | bit(b);
  for (Bits rest = between; rest != 0; rest &= rest - 1) {
    int x = lowest(rest);
    Bits ys = desc[x] & between & ~base.neighbors(x) & ~bit(x);
    if (ys != 0) return std::make_pair(x, lowest(ys));
  }
  return std::nullopt;
}

std::vector<Bits> invert(const std::vector<Bits>& reach) {
  std::vector<Bits> inv(reach.size(), 0);
  for (std::size_t u = 0; u < reach.size(); ++u) {
    for_each_bit(reach[u], [&](int v) { inv[v] |= bit(static_cast<int>(u)); });
  }
  return inv;
}

}  // namespace

std::optional<ShortcutWitness> find_shortcut(const OrientedGraph& og) {
  std::vector<Bits> desc = reachability(og);
  for (int v = 0; v < og.order(); ++v) {
    if (desc[v] & bit(v)) throw std::invalid_argument("find_shortcut requires an acyclic orientation");
  }
  std::vector<Bits> anc = invert(desc);
  for (const Arc& arc : og.arcs()) {
    auto pair = shortcut_pair(og.base(), desc, anc, arc.tail, arc.head);
    if (!pair) continue;
    ShortcutWitness w;
    w.shortcutting_edge = arc;
    w.missing_pair = *pair;
    w.path.push_back(arc.tail);
    append_path(og, desc, arc.tail, pair->first, w.path);
    append_path(og, desc, pair->first, pair->second, w.path);
    append_path(og, desc, pair->second, arc.head, w.path);
    return w;
  }
  return std::nullopt;
}

std::string validate_shortcut(const OrientedGraph& og, const ShortcutWitness& w) {
  const std::vector<int>& p = w.path;
  if (p.size() < 4) return "path has fewer than 4 vertices";
  Bits members = 0;
  for (int v : p) {
    if (v < 0 || v >= og.order()) return "path vertex out of range";
    if (members & bit(v)) return "path repeats vertex " + std::to_string(v);
    members |= bit(v);
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!og.has_arc(p[i], p[i + 1])) {
      return "missing path arc " + std::to_string(p[i]) + "->" + std::to_string(p[i + 1]);
    }
  }
  if (w.shortcutting_edge != Arc{p.front(), p.back()}) {
    return "shortcutting edge does not join the path ends";
  }
  if (!og.has_arc(p.front(), p.back())) return "shortcutting edge is not an arc";
  OrientedGraph sub = induced_orientation(og, members);
  if (!is_acyclic(sub)) return "induced subgraph has a cycle";
  int sources = 0;
  int sinks = 0;
  for (int v : p) {
    Bits inside = og.base().neighbors(v) & members;
    if ((og.in(v) & inside) == 0) ++sources;
    if ((og.out(v) & inside) == 0) ++sinks;
  }
  if (sources != 1 || (og.in(p.front()) & members) != 0) return "source is not unique";
  if (sinks != 1 || (og.out(p.back()) & members) != 0) return "sink is not unique";
  auto ix = std::find(p.begin(), p.end(), w.missing_pair.first);
  auto iy = std::find(p.begin(), p.end(), w.missing_pair.second);
  if (ix == p.end() || iy == p.end() || ix >= iy) return "missing pair is not in path order";
  if (og.has_arc(*ix, *iy)) return "missing pair is joined by an arc";
  return {};
}

bool is_semi_transitive(const OrientedGraph& og) {
  return is_acyclic(og) && !find_shortcut(og).has_value();
}

namespace {

// Depth-first assignment of edge directions. Reachability among decided arcs
// is kept closed; a cycle or a shortcut among decided arcs survives every
// completion, so both prune.
class OrientationSearch {
 public:
  explicit OrientationSearch(const Graph& g) : g_(g), n_(g.order()) {
    order_ = g.edges();
    std::stable_sort(order_.begin(), order_.end(), [&](const Edge& a, const Edge& b) {
      return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
    });
    out_.assign(n_, 0);
    desc_.assign(n_, 0);
    anc_.assign(n_, 0);
    decided_.assign(n_, 0);
  }

  // Applies fixed arcs up front. Returns false if they already contradict.
  bool fix(const std::vector<Arc>& arcs) {
    for (const Arc& a : arcs) {
      if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_ ||
          !g_.adjacent(a.tail, a.head)) {
        throw std::invalid_argument("fixed arc " + std::to_string(a.tail) + "->" +
                                    std::to_string(a.head) + " is not an edge");
      }
      if (decided_[a.tail] & bit(a.head)) {
        if (!(out_[a.tail] & bit(a.head))) return false;
        continue;
      }
      if (!add(a.tail, a.head)) return false;
    }
    std::erase_if(order_, [&](const Edge& e) { return (decided_[e.u] >> e.v) & 1U; });
    return !shortcut_present();
  }

  void set_break_symmetry(bool on) { break_symmetry_ = on; }

  // Visits complete semi-transitive orientations; stops when visit is false.
  void run(const std::function<bool(const std::vector<Bits>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    dfs(0);
  }

 private:
  bool add(int u, int v) {
    if (desc_[v] & bit(u) || u == v) return false;
    out_[u] |= bit(v);
    decided_[u] |= bit(v);
    decided_[v] |= bit(u);
    Bits up = anc_[u] | bit(u);
    Bits down = desc_[v] | bit(v);
    for_each_bit(up, [&](int p) { desc_[p] |= down; });
    for_each_bit(down, [&](int q) { anc_[q] |= up; });
    return true;
  }

  bool shortcut_present() const {
    for (int a = 0; a < n_; ++a) {
      for (Bits outs = out_[a]; outs != 0; outs &= outs - 1) {
        if (shortcut_pair(g_, desc_, anc_, a, lowest(outs))) return true;
      }
    }
    return false;
  }

  void dfs(std::size_t depth) {
    if (stop_) return;
    if (depth == order_.size()) {
      stop_ = !(*visit_)(out_);
      return;
    }
    const Edge e = order_[depth];
    const int tries = (break_symmetry_ && depth == 0) ? 1 : 2;
    for (int t = 0; t < tries && !stop_; ++t) {
      int u = t == 0 ? e.u : e.v;
      int v = t == 0 ? e.v : e.u;
      std::vector<Bits> saved_desc = desc_;
      std::vector<Bits> saved_anc = anc_;
      Bits saved_out_u = out_[u];
      Bits saved_dec_u = decided_[u];
      Bits saved_dec_v = decided_[v];
      if (add(u, v) && !shortcut_present()) dfs(depth + 1);
      desc_ = std::move(saved_desc);
      anc_ = std::move(saved_anc);
      out_[u] = saved_out_u;
      decided_[u] = saved_dec_u;
      decided_[v] = saved_dec_v;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Edge> order_;
  std::vector<Bits> out_;
  std::vector<Bits> desc_;
  std::vector<Bits> anc_;
  std::vector<Bits> decided_;
  bool break_symmetry_ = false;
  bool stop_ = false;
  const std::function<bool(const std::vector<Bits>&)>* visit_ = nullptr;
};

OrientedGraph build(const Graph& g, const std::vector<Bits>& out) {
  OrientedGraph og(g);
  for (int u = 0; u < g.order(); ++u) for_each_bit(out[u], [&](int v) { og.orient(u, v); });
  return og;
}

}  // namespace

std::optional<OrientedGraph> find_semi_transitive_orientation(const Graph& g) {
  OrientationSearch search(g);
  // Reversing every arc preserves semi-transitivity, so if the first edge
  // fails in its preferred direction it fails in the other as well.
  search.set_break_symmetry(true);
  std::optional<OrientedGraph> found;
  search.run([&](const std::vector<Bits>& out) {
    found = build(g, out);
    return false;
  });
  return found;
}

bool is_word_representable(const Graph& g) {
  return find_semi_transitive_orientation(g).has_value();
}

void for_each_semi_transitive_orientation(const Graph& g, const std::vector<Arc>& fixed,
                                          const std::function<bool(const OrientedGraph&)>& visit) {
  OrientationSearch search(g);
  if (!search.fix(fixed)) return;
  search.run([&](const std::vector<Bits>& out) { return visit(build(g, out)); });
}

std::uint64_t count_semi_transitive_extensions(const Graph& g, const std::vector<Arc>& fixed) {
  OrientationSearch search(g);
  if (!search.fix(fixed)) return 0;
  std::uint64_t count = 0;
  search.run([&](const std::vector<Bits>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace wordrep
