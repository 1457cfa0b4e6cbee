// SPDX-License-Identifier: Apache-2.0

#include "wordrep/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace wordrep {

namespace {

struct Figure {
  const char* name;
  int order;
  std::vector<std::pair<int, int>> edges;  // 1-based, as drawn
  int expected_size;
  std::vector<int> expected_degrees;
};

// Builds a transcribed figure and checks it against its recorded counts.
Graph build_figure(const Figure& f) {
  Graph g(f.order);
  for (auto [u, v] : f.edges) g.add_edge(u - 1, v - 1);
  if (g.size() != f.expected_size || g.degree_sequence() != f.expected_degrees) {
    throw std::logic_error(std::string("figure transcription mismatch for ") + f.name);
  }
  return g;
}

// Graph on the clique 1..4 plus independent vertices with the given
// neighbourhoods (1-based), labelled 5, 6, ... in order.
std::vector<std::pair<int, int>> k4_with(std::initializer_list<std::vector<int>> nbhds) {
  std::vector<std::pair<int, int>> es = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  int x = 5;
  for (const auto& nb : nbhds) {
    for (int c : nb) es.emplace_back(c, x);
    ++x;
  }
  return es;
}

const Figure kT1{"T1", 7,
                 {{1, 2}, {2, 4}, {1, 3}, {3, 6}, {2, 5}, {3, 5}, {4, 5}, {5, 6}, {2, 7}, {3, 7},
                  {5, 7}, {2, 3}},
                 12, {5, 5, 5, 3, 2, 2, 2}};

const Figure kT2{"T2", 7,
                 {{1, 2}, {1, 4}, {1, 7}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4},
                  {3, 5}, {6, 4}},
                 12, {6, 4, 4, 4, 2, 2, 2}};

const Figure kT3{"T3", 7,
                 {{2, 6}, {2, 7}, {5, 3}, {5, 4}, {5, 2}, {1, 3}, {1, 4}, {6, 3}, {7, 4}, {1, 6},
                  {1, 7}, {2, 3}, {2, 4}, {4, 3}, {1, 2}},
                 15, {6, 5, 5, 5, 3, 3, 3}};

// Drawn with labels 8..14; shifted to 1..7 here.
const Figure kT3Second{"T3 (second drawing)", 7,
                       {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 1}, {5, 2}, {5, 4},
                        {6, 1}, {6, 2}, {6, 3}, {7, 4}, {7, 2}, {7, 3}},
                       15, {6, 5, 5, 5, 3, 3, 3}};

const Figure kT4{"T4", 8, k4_with({{1, 2}, {1, 2, 3}, {1, 4}, {1, 3, 4}}), 16,
                 {7, 5, 5, 5, 3, 3, 2, 2}};

const Figure kB1{"B1", 6, {{3, 2}, {3, 4}, {3, 5}, {4, 2}, {4, 6}, {1, 2}}, 6,
                 {3, 3, 3, 1, 1, 1}};

const Figure kB2{"B2", 6,
                 {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 5}, {5, 6}}, 9,
                 {4, 4, 4, 2, 2, 2}};

const Figure kB3{"B3", 7,
                 {{1, 2}, {2, 3}, {1, 4}, {2, 4}, {2, 5}, {4, 5}, {4, 6}, {5, 3}, {5, 7}}, 9,
                 {4, 4, 4, 2, 2, 1, 1}};

const Figure kCoT2{"CO_T2", 7,
                   {{5, 7}, {5, 2}, {5, 3}, {5, 6}, {2, 3}, {2, 1}, {2, 4}, {2, 7}, {1, 3},
                    {1, 4}, {6, 3}, {6, 4}, {6, 7}, {4, 7}, {4, 3}},
                   15, {5, 5, 5, 4, 4, 4, 3}};

const Figure kFig4Right{"FIG4_RIGHT", 7,
                        {{4, 2}, {2, 3}, {3, 5}, {1, 5}, {1, 4}, {1, 2}, {1, 3}, {6, 2}, {6, 3},
                         {6, 7}, {7, 4}, {7, 5}},
                        12, {4, 4, 4, 3, 3, 3, 3}};

const Figure kM{"M", 10, k4_with({{1, 2, 3}, {1, 3, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}), 20,
                {7, 7, 6, 6, 3, 3, 2, 2, 2, 2}};

const Figure kMax3{"MAX3", 6,
                   {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {3, 6},
                    {3, 4}, {3, 5}, {4, 6}},
                   12, {5, 5, 4, 4, 3, 3}};

// Node ids of the second drawing (its printed labels swap 1 and 2).
const Figure kMax3Second{"MAX3 (second drawing)", 6,
                         {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6},
                          {3, 4}, {3, 5}, {4, 6}},
                         12, {5, 5, 4, 4, 3, 3}};

const Figure kMax32Right{"MAX32_RIGHT", 10,
                         k4_with({{1, 2, 3}, {1, 3, 4}, {1, 2}, {2, 4}, {3, 4}, {1, 3}}), 20,
                         {7, 7, 6, 6, 3, 3, 2, 2, 2, 2}};

// Labels of M kept by each M_i, 1-based.
const std::array<std::vector<int>, 6> kMSubsets = {{
    {1, 2, 3, 4, 5, 6, 8, 9, 10},  // M1
    {1, 2, 3, 4, 6, 7, 8, 9, 10},  // M2
    {1, 2, 3, 4, 6, 8, 9, 10},     // M3
    {1, 2, 3, 4, 5, 8, 9, 10},     // M4
    {1, 2, 3, 4, 5, 6, 9, 10},     // M5
    {1, 2, 3, 4, 5, 6, 8, 10},     // M6
}};

// Arcs of the drawn orientations, 1-based labels of M.
const std::array<std::vector<std::pair<int, int>>, 6> kMArcs = {{
    {},
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 6}, {6, 3}, {6, 4}, {1, 7}, {2, 7},
     {2, 8}, {3, 8}, {3, 9}, {4, 9}, {1, 10}, {10, 4}},
    {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 10}, {2, 3}, {2, 4}, {2, 8}, {3, 9}, {3, 8}, {3, 4},
     {4, 9}, {6, 3}, {6, 4}, {10, 4}},
    {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 10}, {2, 3}, {2, 4}, {2, 5}, {2, 8}, {3, 9}, {3, 8},
     {3, 4}, {3, 5}, {4, 9}, {10, 4}},
    {},
    {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 10}, {2, 3}, {2, 8}, {3, 8}, {4, 6}, {4, 3},
     {4, 10}, {4, 2}, {5, 2}, {5, 3}, {6, 3}},
}};

const std::vector<std::pair<int, int>> kMax32RightArcs = {
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 10}, {2, 8}, {3, 2}, {3, 4},
    {3, 5}, {3, 6}, {3, 9}, {3, 10}, {4, 2}, {4, 6}, {4, 8}, {4, 9}, {5, 2}, {7, 2}};

Bits labels_to_bits(const std::vector<int>& labels) {
  Bits b = 0;
  for (int v : labels) b |= bit(v - 1);
  return b;
}

OrientedGraph orient_subset(const Graph& host_sub, const std::vector<int>& labels,
                            const std::vector<std::pair<int, int>>& arcs) {
  auto index = [&](int label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::logic_error("arc endpoint outside the subgraph");
    return static_cast<int>(it - labels.begin());
  };
  OrientedGraph og(host_sub);
  for (auto [u, v] : arcs) og.orient(index(u), index(v));
  if (static_cast<int>(arcs.size()) != host_sub.size()) {
    throw std::logic_error("drawn orientation does not cover every edge");
  }
  return og;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

struct TagInfo {
  FamilyTag tag;
  const char* name;
  int arity;
};

constexpr std::array<TagInfo, 27> kTags = {{
    {FamilyTag::K_TRIANGLE, "K_TRIANGLE", 1},
    {FamilyTag::A_GRAPH, "A_GRAPH", 1},
    {FamilyTag::K_L_K, "K_L_K", 2},
    {FamilyTag::T1, "T1", 0},
    {FamilyTag::T2, "T2", 0},
    {FamilyTag::T3, "T3", 0},
    {FamilyTag::T4, "T4", 0},
    {FamilyTag::W5, "W5", 0},
    {FamilyTag::B1, "B1", 0},
    {FamilyTag::B2, "B2", 0},
    {FamilyTag::B3, "B3", 0},
    {FamilyTag::CO_T2, "CO_T2", 0},
    {FamilyTag::FIG4_RIGHT, "FIG4_RIGHT", 0},
    {FamilyTag::FIG2_EXAMPLE, "FIG2_EXAMPLE", 0},
    {FamilyTag::M, "M", 0},
    {FamilyTag::M1, "M1", 0},
    {FamilyTag::M2, "M2", 0},
    {FamilyTag::M3, "M3", 0},
    {FamilyTag::M4, "M4", 0},
    {FamilyTag::M5, "M5", 0},
    {FamilyTag::M6, "M6", 0},
    {FamilyTag::MAX3, "MAX3", 0},
    {FamilyTag::MAX32_RIGHT, "MAX32_RIGHT", 0},
    {FamilyTag::C, "C", 1},
    {FamilyTag::TWO_K2, "TWO_K2", 0},
    {FamilyTag::K, "K", 1},
    {FamilyTag::EMPTY, "EMPTY", 1},
}};

const TagInfo& info(FamilyTag tag) {
  for (const TagInfo& t : kTags) {
    if (t.tag == tag) return t;
  }
  throw std::invalid_argument("unknown family tag");
}

int m_index(FamilyTag tag) { return static_cast<int>(tag) - static_cast<int>(FamilyTag::M1); }

}  // namespace

std::string family_name(FamilyTag tag) { return info(tag).name; }

int family_arity(FamilyTag tag) { return info(tag).arity; }

FamilyTag parse_family_tag(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const TagInfo& t : kTags) {
    if (upper == t.name) return t.tag;
  }
  throw std::invalid_argument("unknown family tag '" + std::string(name) + "'");
}

Graph k_triangle(int l) {
  require(l >= 3, "K_TRIANGLE needs l >= 3");
  return k_ell_k(l, 2);
}

Graph a_graph(int l) {
  require(l >= 4, "A_GRAPH needs l >= 4");
  Graph base = k_triangle(l - 1);
  Graph g(2 * l - 1);
  for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
  for (int c = 0; c < l - 1; ++c) g.add_edge(c, 2 * l - 2);
  return g;
}

Graph k_ell_k(int l, int k) {
  require(k >= 1 && l >= 2 * k - 1, "K_L_K needs k >= 1 and l >= 2k-1");
  require(2 * l <= kMaxVertices, "K_L_K: l too large");
  Graph g(2 * l);
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) g.add_edge(i, j);
  }
  for (int i = 0; i < l; ++i) {
    for (int d = 0; d < k; ++d) g.add_edge(l + i, (i + d) % l);
  }
  return g;
}

OrientedGraph k_triangle_canonical_orientation(int l) {
  OrientedGraph og(k_triangle(l));
  for (int i = 0; i + 1 < l; ++i) {
    og.orient(i, l + i);
    og.orient(i + 1, l + i);
  }
  og.orient(0, 2 * l - 1);
  og.orient(2 * l - 1, l - 1);
  return og;
}

Word k_triangle_odd_word(int l) {
  require(l >= 3 && l % 2 == 1, "the explicit word needs odd l >= 3");
  // 1-based clique label i -> i-1, primed label i' -> l+i-1.
  auto prime = [l](int i) { return l + i - 1; };
  Word w;
  auto block = [&](int i) {
    w.insert(w.end(), {prime(i), i - 1, i, prime(i)});
  };
  for (int i = 1; i <= l - 2; i += 2) block(i);
  w.insert(w.end(), {prime(l), l - 1, 0, prime(l)});
  for (int i = 2; i <= l - 1; i += 2) block(i);
  return w;
}

OrientedGraph k_ell_k_orientation(int l, int k) {
  OrientedGraph og(k_ell_k(l, k));
  for (int i = 0; i < l; ++i) {
    for (int d = 0; d < k; ++d) {
      int c = (i + d) % l;
      bool wraps = i + k - 1 >= l;
      if (wraps && c < i) {
        og.orient(c, l + i);  // low-index part, incoming
      } else if (wraps) {
        og.orient(l + i, c);  // high-index part, outgoing
      } else {
        og.orient(c, l + i);
      }
    }
  }
  return og;
}

Graph t3_second_drawing() { return build_figure(kT3Second); }
Graph max3_second_drawing() { return build_figure(kMax3Second); }

Graph named(const FamilyId& id) {
  const TagInfo& t = info(id.tag);
  require(static_cast<int>(id.params.size()) == t.arity,
          std::string(t.name) + " takes " + std::to_string(t.arity) + " parameter(s)");
  const std::vector<int>& p = id.params;
  switch (id.tag) {
    case FamilyTag::K_TRIANGLE: return k_triangle(p[0]);
    case FamilyTag::A_GRAPH: return a_graph(p[0]);
    case FamilyTag::K_L_K: return k_ell_k(p[0], p[1]);
    case FamilyTag::T1: return build_figure(kT1);
    case FamilyTag::T2: return build_figure(kT2);
    case FamilyTag::T3: return build_figure(kT3);
    case FamilyTag::T4: return build_figure(kT4);
    case FamilyTag::W5: {
      Graph g(6);
      for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5);
      }
      return g;
    }
    case FamilyTag::B1: return build_figure(kB1);
    case FamilyTag::B2: return build_figure(kB2);
    case FamilyTag::B3: return build_figure(kB3);
    case FamilyTag::CO_T2: return build_figure(kCoT2);
    case FamilyTag::FIG4_RIGHT: return build_figure(kFig4Right);
    case FamilyTag::FIG2_EXAMPLE: return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    case FamilyTag::M: return build_figure(kM);
    case FamilyTag::M1:
    case FamilyTag::M2:
    case FamilyTag::M3:
    case FamilyTag::M4:
    case FamilyTag::M5:
    case FamilyTag::M6:
      return induced_subgraph(build_figure(kM), labels_to_bits(kMSubsets[m_index(id.tag)]));
    case FamilyTag::MAX3: return build_figure(kMax3);
    case FamilyTag::MAX32_RIGHT: return build_figure(kMax32Right);
    case FamilyTag::C: {
      require(p[0] >= 3 && p[0] <= kMaxVertices, "C needs 3 <= m <= 64");
      Graph g(p[0]);
      for (int i = 0; i < p[0]; ++i) g.add_edge(i, (i + 1) % p[0]);
      return g;
    }
    case FamilyTag::TWO_K2: return Graph(4, {{0, 1}, {2, 3}});
    case FamilyTag::K: {
      require(p[0] >= 0 && p[0] <= kMaxVertices, "K needs 0 <= n <= 64");
      Graph g(p[0]);
      for (int i = 0; i < p[0]; ++i) {
        for (int j = i + 1; j < p[0]; ++j) g.add_edge(i, j);
      }
      return g;
    }
    case FamilyTag::EMPTY:
      require(p[0] >= 0 && p[0] <= kMaxVertices, "EMPTY needs 0 <= n <= 64");
      return Graph(p[0]);
  }
  throw std::invalid_argument("unknown family tag");
}

std::optional<OrientedGraph> named_orientation(const FamilyId& id) {
  Graph g = named(id);
  switch (id.tag) {
    case FamilyTag::K_TRIANGLE: return k_triangle_canonical_orientation(id.params[0]);
    case FamilyTag::K_L_K: return k_ell_k_orientation(id.params[0], id.params[1]);
    case FamilyTag::M2:
    case FamilyTag::M3:
    case FamilyTag::M4:
    case FamilyTag::M6: {
      int i = m_index(id.tag);
      return orient_subset(g, kMSubsets[i], kMArcs[i]);
    }
    case FamilyTag::MAX32_RIGHT:
      return orient_subset(g, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, kMax32RightArcs);
    default: return std::nullopt;
  }
}

}  // namespace wordrep
