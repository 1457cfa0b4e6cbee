// SPDX-License-Identifier: Apache-2.0

#include "wordrep/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "wordrep/graph6.hpp"
#include "wordrep/isomorphism.hpp"

namespace wordrep {

std::vector<Graph> enumerate_graphs(int n, bool allow_large) {
  if (n < 0) throw std::domain_error("graph order must be non-negative");
  if (n > kEnumerationGuard && !allow_large) {
    throw std::domain_error("enumeration of n=" + std::to_string(n) +
                            " graphs exceeds the n<=8 guard; pass the override flag");
  }
  std::vector<Graph> level{Graph(0)};
  for (int k = 0; k < n; ++k) {
    // Every graph on k+1 vertices is some graph on k vertices plus a vertex.
    std::set<std::pair<int, std::string>> seen;
    for (const Graph& base : level) {
      for (Bits s = 0; s <= low_bits(k); ++s) {
        Graph ext(k + 1);
        for (const Edge& e : base.edges()) ext.add_edge(e.u, e.v);
        for_each_bit(s, [&](int v) { ext.add_edge(v, k); });
        Graph canon = canonical_form(ext).graph;
        seen.emplace(canon.size(), write_graph6(canon));
        if (k == 0) break;
      }
    }
    level.clear();
    for (const auto& entry : seen) level.push_back(parse_graph6(entry.second));
  }
  return level;
}

}  // namespace wordrep
