#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wordrep/families.hpp"
#include "wordrep/isomorphism.hpp"
#include "wordrep/word.hpp"

using namespace wordrep;

namespace {

const Word kSample = parse_word("23125413241362");

Graph complete(int n) { return named({FamilyTag::K, {n}}); }

}  // namespace

TEST_CASE("alternation in the worked example") {
  CHECK(alternate(kSample, 2, 3));
  CHECK_FALSE(alternate(kSample, 1, 3));
  CHECK(alternate(kSample, 5, 6));
  CHECK_THROWS_AS(alternate(kSample, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(alternate(kSample, 2, 7), std::invalid_argument);
}

TEST_CASE("alternation is symmetric") {
  for (int x = 1; x <= 6; ++x) {
    for (int y = 1; y <= 6; ++y) {
      if (x != y) CHECK(alternate(kSample, x, y) == alternate(kSample, y, x));
    }
  }
}

TEST_CASE("alternation graph examples") {
  Word w = parse_word("1213423");
  for (int& c : w) --c;
  CHECK(format_word(w) == "0102312");
  CHECK(alternation_graph(w, 4) == named({FamilyTag::FIG2_EXAMPLE, {}}));
  CHECK(represents(w, named({FamilyTag::FIG2_EXAMPLE, {}})));

  std::mt19937 rng(1);
  for (int n = 1; n <= 8; ++n) {
    Word pi = oracle::random_permutation(rng, n);
    CHECK(alternation_graph(pi, n) == complete(n));
    Word twice = pi;
    twice.insert(twice.end(), pi.rbegin(), pi.rend());
    CHECK(alternation_graph(twice, n) == Graph(n));
  }
  CHECK_THROWS_AS(alternation_graph(parse_word("0101"), 3), std::invalid_argument);
  CHECK_THROWS_AS(alternation_graph(parse_word("0131"), 3), std::invalid_argument);
}

TEST_CASE("represents") {
  CHECK(represents(parse_word("010"), complete(2)));
  Representation r = check_represents(parse_word("0101"), Graph(3, {{0, 1}}));
  CHECK_FALSE(r.ok);
  CHECK(r.diagnostic.find("missing") != std::string::npos);
  Representation pair = check_represents(parse_word("0011"), complete(2));
  CHECK_FALSE(pair);
  CHECK(pair.diagnostic.find("(0,1)") != std::string::npos);
}

TEST_CASE("concatenated permutations represent the complete graph") {
  std::mt19937 rng(2);
  for (int n = 1; n <= 7; ++n) {
    Word pi = oracle::random_permutation(rng, n);
    Word w;
    for (int r = 1; r <= 4; ++r) {
      w.insert(w.end(), pi.begin(), pi.end());
      CHECK(represents(w, complete(n)));
    }
  }
}

TEST_CASE("alternation graph agrees with the pairwise definition") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Word w(n);
    std::iota(w.begin(), w.end(), 0);
    int extra = static_cast<int>(rng() % 12);
    for (int i = 0; i < extra; ++i) w.push_back(static_cast<int>(rng() % n));
    std::shuffle(w.begin(), w.end(), rng);
    Graph g = alternation_graph(w, n);
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) CHECK(g.adjacent(x, y) == alternate(w, x, y));
    }
    CHECK(represents(w, g));
    // Deleting a letter represents the vertex-deleted graph.
    int v = static_cast<int>(rng() % n);
    CHECK(represents(remove_letter(w, v), remove_vertex(g, v)));
  }
}

TEST_CASE("find_representant examples") {
  auto k3 = find_representant(complete(3), 1);
  REQUIRE(k3.has_value());
  CHECK(k3->size() == 3);
  CHECK(represents(*k3, complete(3)));

  auto e3 = find_representant(Graph(3), 2);
  REQUIRE(e3.has_value());
  CHECK(e3->size() == 6);
  CHECK(represents(*e3, Graph(3)));

  CHECK_FALSE(find_representant(named({FamilyTag::W5, {}}), 3).has_value());
  CHECK_THROWS_AS(find_representant(complete(3), 0), std::invalid_argument);
  CHECK(find_representant(Graph(0), 1) == Word{});
}

TEST_CASE("find_representant respects labels and minimal uniformity") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_graph(rng, n, 0.5);
    auto w = find_representant(g, 3);
    REQUIRE(w.has_value());  // every graph on at most 5 vertices is representable
    CHECK(represents(*w, g));
    int k = static_cast<int>(w->size()) / n;
    for (int c = 0; c < n; ++c) CHECK(std::count(w->begin(), w->end(), c) == k);
    if (k > 1) CHECK_FALSE(find_representant(g, k - 1).has_value());
  }
}

TEST_CASE("word text formats") {
  CHECK(parse_word("0 1 12 3") == Word{0, 1, 12, 3});
  CHECK(parse_word("0123\n") == Word{0, 1, 2, 3});
  CHECK(parse_word("") == Word{});
  CHECK(format_word({0, 1, 2}) == "012");
  CHECK(format_word({0, 11, 2}) == "0 11 2");
  CHECK_THROWS_AS(parse_word("01a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0 x"), std::invalid_argument);
  CHECK(remove_letter({0, 2, 1, 2}, 1) == Word{0, 1, 1});
}
