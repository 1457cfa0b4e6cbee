#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wordrep/enumerate.hpp"
#include "wordrep/families.hpp"
#include "wordrep/isomorphism.hpp"
#include "wordrep/split.hpp"

using namespace wordrep;

namespace {

Graph complete(int n) { return named({FamilyTag::K, {n}}); }

SplitPartition partition_of(const Graph& g) {
  auto sp = split_partition(g);
  REQUIRE(sp.has_value());
  return *sp;
}

// Lexicographically least clique over every maximal split partition.
std::optional<std::vector<int>> brute_partition(const Graph& g) {
  std::optional<std::vector<int>> best;
  for (Bits k = 0; k <= g.all(); ++k) {
    Bits rest = g.all() & ~k;
    if (!g.is_clique(k) || !g.is_independent(rest)) continue;
    bool maximal = true;
    for_each_bit(rest, [&](int x) { maximal = maximal && (g.neighbors(x) & k) != k; });
    if (!maximal) continue;
    std::vector<int> list = bits_to_vector(k);
    if (!best || list.size() > best->size() || (list.size() == best->size() && list < *best)) {
      best = list;
    }
  }
  return best;
}

// Transitivity straight from out-neighbourhoods, over every orientation.
bool has_transitive_orientation(const Graph& g) {
  const std::size_t m = g.edges().size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    OrientedGraph og = oracle::orientation_from_mask(g, mask);
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u) {
      for_each_bit(og.out(u), [&](int v) { ok = ok && (og.out(v) & ~og.out(u)) == 0; });
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Graph> split_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_graphs(n)) {
    if (split_partition(g)) out.push_back(g);
  }
  return out;
}

Graph with_vertex(const Graph& g, Bits neighbours) {
  Graph h(g.order() + 1);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  for_each_bit(neighbours, [&](int v) { h.add_edge(v, g.order()); });
  return h;
}

}  // namespace

TEST_CASE("split_partition examples") {
  SplitPartition t1 = partition_of(named({FamilyTag::T1, {}}));
  CHECK(t1.clique_size() == 4);
  CHECK(t1.independent.count() == 3);
  CHECK_FALSE(split_partition(named({FamilyTag::C, {4}})).has_value());
  SplitPartition k5 = partition_of(complete(5));
  CHECK(k5.clique.bits() == complete(5).all());
  CHECK(k5.independent.count() == 0);
  CHECK(partition_of(Graph(0)).clique_size() == 0);
  // P3 has two maximal partitions; the least clique is {0,1}.
  CHECK(partition_of(Graph(3, {{0, 1}, {1, 2}})).clique.members() == std::vector<int>{0, 1});
}

TEST_CASE("is_split examples") {
  CHECK_FALSE(is_split(named({FamilyTag::TWO_K2, {}})));
  CHECK_FALSE(is_split(named({FamilyTag::W5, {}})));
  for (int l = 4; l <= 7; ++l) CHECK(is_split(a_graph(l)));
  for (int l = 3; l <= 8; ++l) {
    CHECK(is_split(k_triangle(l)));
    CHECK(partition_of(k_triangle(l)).clique_size() == l);
  }
}

TEST_CASE("split partition agrees with forbidden subgraphs and brute force") {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CAPTURE(to_string(g));
      bool split = false;
      CHECK_NOTHROW(split = is_split(g));
      auto sp = split_partition(g);
      if (n <= 6) {
        auto brute = brute_partition(g);
        REQUIRE(brute.has_value() == sp.has_value());
        if (sp) CHECK(sp->clique.members() == *brute);
      }
      if (!sp) continue;
      CHECK(split);
      CHECK(g.is_clique(sp->clique.bits()));
      CHECK(g.is_independent(sp->independent.bits()));
      CHECK((sp->clique.bits() | sp->independent.bits()) == g.all());
    }
  }
}

TEST_CASE("partition is stable under relabelling up to clique size") {
  std::mt19937 rng(5);
  for (const Graph& g : split_graphs(6)) {
    Graph h = relabel(g, oracle::random_permutation(rng, g.order()));
    CHECK(partition_of(h).clique_size() == partition_of(g).clique_size());
  }
}

TEST_CASE("reduce examples") {
  const Graph t1 = named({FamilyTag::T1, {}});
  // The apex of T1 is its only vertex of degree 3.
  int apex = 0;
  while (t1.degree(apex) != 3) ++apex;
  ReducedSplit pendant = reduce(partition_of(with_vertex(t1, bit(apex))));
  CHECK(pendant.partition.host == t1);
  CHECK(pendant.original_label.size() == 7);

  ReducedSplit isolated = reduce(partition_of(with_vertex(t1, 0)));
  CHECK(isolated.partition.host == t1);

  // Two independent vertices on the same two clique vertices: 4 goes as a
  // twin of 3, then 3 goes as a twin of clique vertex 2.
  Graph twins(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
  ReducedSplit r = reduce(partition_of(twins));
  CHECK(r.partition.host == complete(3));
  CHECK(r.original_label == std::vector<int>{0, 1, 2});

  // Twin independent vertices hanging off T1 are merged back into T1.
  int low = 0;
  while (t1.degree(low) != 2) ++low;
  ReducedSplit copied = reduce(partition_of(with_vertex(t1, t1.neighbors(low))));
  CHECK(copied.partition.host == t1);

  // T1 itself is already reduced.
  CHECK(reduce(partition_of(t1)).partition.host == t1);
}

TEST_CASE("reduce output is a reduced induced subgraph with the same verdict") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : split_graphs(n)) {
      CAPTURE(to_string(g));
      ReducedSplit r = reduce(partition_of(g));
      const Graph& h = r.partition.host;
      CHECK(h == induced_subgraph(g, vector_to_bits(r.original_label)));
      CHECK(is_word_representable(h) == is_word_representable(g));
      for_each_bit(r.partition.independent.bits(), [&](int x) { CHECK(h.degree(x) >= 2); });
      for (int u = 0; u < h.order(); ++u) {
        for (int v = u + 1; v < h.order(); ++v) CHECK(h.neighbors(u) != h.neighbors(v));
      }
    }
  }
}

TEST_CASE("split comparability examples") {
  CHECK_FALSE(is_split_comparability(named({FamilyTag::B2, {}})));
  CHECK_FALSE(is_split_comparability(named({FamilyTag::T3, {}})));
  // Pendants on the source and sink of a transitive clique orient fine;
  // pendants on three clique vertices contain B1.
  Graph pendants = complete(4);
  for (int v : {0, 0, 3}) pendants = with_vertex(pendants, bit(v));
  CHECK(is_split_comparability(pendants));
  CHECK(find_transitive_orientation(pendants).has_value());
  Graph three = with_vertex(pendants, bit(1));
  CHECK_FALSE(is_split_comparability(three));
  CHECK(split_comparability_obstruction(three)->pattern == "B1");
  CHECK_THROWS_AS(is_split_comparability(named({FamilyTag::C, {4}})), std::invalid_argument);
  auto b3 = split_comparability_obstruction(named({FamilyTag::B3, {}}));
  REQUIRE(b3.has_value());
  CHECK(b3->pattern == "B3");
}

TEST_CASE("split comparability matches exhaustive transitive orientation search") {
  int comparability = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : split_graphs(n)) {
      CAPTURE(to_string(g));
      bool expected = has_transitive_orientation(g);
      CHECK(is_split_comparability(g) == expected);
      auto og = find_transitive_orientation(g);
      CHECK(og.has_value() == expected);
      if (og) CHECK(is_transitive(*og));
      if (auto w = split_comparability_obstruction(g)) {
        Graph pattern = named({parse_family_tag(w->pattern), {}});
        CHECK(is_induced_embedding(g, pattern, w->embedding));
      }
      comparability += expected ? 1 : 0;
    }
  }
  CHECK(comparability > 0);
}

TEST_CASE("vertex types in the canonical orientation of the six-triangle graph") {
  OrientedGraph og = k_triangle_canonical_orientation(6);
  SplitPartition sp = partition_of(og.base());
  auto path = clique_path(sp, og);
  REQUIRE(path.has_value());
  CHECK(path->order == std::vector<int>{0, 1, 2, 3, 4, 5});

  VertexTypeReport first = classify_vertex(sp, og, 6);
  CHECK(first.kind == VertexKind::B);
  CHECK(first.neighbors_on_path == std::vector<int>{0, 1});

  VertexTypeReport last = classify_vertex(sp, og, 11);
  CHECK(last.kind == VertexKind::C);
  CHECK(last.source_group == std::vector<int>{0});
  CHECK(last.sink_group == std::vector<int>{5});
  CHECK(last.boundary == std::pair{0, 5});

  auto all = classify_all(sp, og);
  CHECK(all.size() == 6);
  CHECK(check_relative_order(sp, all).empty());
  CHECK(check_main_orientation(sp, og));

  CHECK_THROWS_AS(classify_vertex(sp, og, 0), std::invalid_argument);
  OrientedGraph cyclic = og;
  cyclic.orient(5, 0);
  CHECK_THROWS_AS(classify_vertex(sp, cyclic, 6), std::invalid_argument);
  CHECK_FALSE(check_main_orientation(sp, cyclic));
}

TEST_CASE("non-consecutive outgoing neighbours are invalid and shortcut") {
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 2}});
  OrientedGraph og(g, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 2}});
  SplitPartition sp = partition_of(g);
  REQUIRE(sp.independent.members() == std::vector<int>{3});
  CHECK(classify_vertex(sp, og, 3).kind == VertexKind::INVALID);
  CHECK(find_shortcut(og).has_value());
  CHECK_FALSE(check_main_orientation(sp, og));
  CHECK_THROWS_AS(check_relative_order(sp, classify_all(sp, og)), std::invalid_argument);
}

TEST_CASE("a lone type-C vertex has no violations") {
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 2}});
  OrientedGraph og(g, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 2}});
  SplitPartition sp = partition_of(g);
  auto reports = classify_all(sp, og);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].kind == VertexKind::C);
  CHECK(check_relative_order(sp, reports).empty());
}

TEST_CASE("typed orientations of T3 always violate the relative order") {
  const Graph t3 = named({FamilyTag::T3, {}});
  SplitPartition sp = partition_of(t3);
  const std::size_t m = t3.edges().size();
  int typed = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    OrientedGraph og = oracle::orientation_from_mask(t3, mask);
    if (!clique_path(sp, og)) continue;
    auto reports = classify_all(sp, og);
    bool all_typed = std::none_of(reports.begin(), reports.end(), [](const VertexTypeReport& r) {
      return r.kind == VertexKind::INVALID;
    });
    CHECK_FALSE(check_main_orientation(sp, og));
    if (!all_typed) continue;
    ++typed;
    CHECK_FALSE(check_relative_order(sp, reports).empty());
  }
  CHECK(typed > 0);
}

TEST_CASE("main orientation test equals semi-transitivity for split graphs up to 6 vertices") {
  std::uint64_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : split_graphs(n)) {
      SplitPartition sp = partition_of(g);
      const std::size_t m = g.edges().size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        OrientedGraph og = oracle::orientation_from_mask(g, mask);
        bool semi = oracle::brute_semi_transitive(og);
        CHECK(semi == is_semi_transitive(og));
        if (check_main_orientation(sp, og) != semi) {
          FAIL("disagreement on " << format_oriented(og));
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("semi-transitive orientations of split graphs are always typed") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : split_graphs(n)) {
      SplitPartition sp = partition_of(g);
      for_each_semi_transitive_orientation(g, {}, [&](const OrientedGraph& og) {
        auto path = clique_path(sp, og);
        REQUIRE(path.has_value());
        for (const auto& r : classify_all(sp, og)) {
          CHECK(r.kind != VertexKind::INVALID);
          if (r.kind != VertexKind::C) continue;
          CHECK(r.source_group.front() == path->order.front());
          CHECK(r.sink_group.back() == path->order.back());
        }
        return true;
      });
    }
  }
}

TEST_CASE("toggle_ab") {
  OrientedGraph og = k_triangle_canonical_orientation(6);
  SplitPartition sp = partition_of(og.base());
  OrientedGraph flipped = toggle_ab(sp, og, 6);
  CHECK(classify_vertex(sp, flipped, 6).kind == VertexKind::A);
  CHECK(is_semi_transitive(flipped));
  CHECK(toggle_ab(sp, flipped, 6) == og);
  CHECK_THROWS_AS(toggle_ab(sp, og, 11), std::invalid_argument);

  Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 2}});
  OrientedGraph invalid(g, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 2}});
  CHECK_THROWS_AS(toggle_ab(partition_of(g), invalid, 3), std::invalid_argument);

  for (int n = 1; n <= 5; ++n) {
    for (const Graph& h : split_graphs(n)) {
      SplitPartition hp = partition_of(h);
      for_each_semi_transitive_orientation(h, {}, [&](const OrientedGraph& o) {
        for (const auto& r : classify_all(hp, o)) {
          if (r.kind == VertexKind::C) continue;
          OrientedGraph once = toggle_ab(hp, o, r.vertex);
          CHECK(oracle::brute_semi_transitive(once));
          CHECK(toggle_ab(hp, once, r.vertex) == o);
        }
        return true;
      });
    }
  }
}
