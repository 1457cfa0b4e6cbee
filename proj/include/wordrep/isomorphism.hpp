// SPDX-License-Identifier: Apache-2.0
//
// Canonical labelling, isomorphism testing and induced-subgraph search for
// small graphs.

#ifndef WORDREP_ISOMORPHISM_HPP
#define WORDREP_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

struct CanonicalForm {
  /// labelling[v] is the canonical position of vertex v.
  std::vector<int> labelling;
  /// relabel(g, labelling); equal for two graphs iff they are isomorphic.
  Graph graph;
};

/// Canonical form by individualisation-refinement over equitable colourings.
/// Exhaustive over the search tree (twin vertices are branched on once), so
/// the result depends only on the isomorphism class of `g`.
CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// An isomorphism phi with g.adjacent(u,v) == h.adjacent(phi[u],phi[v]).
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

/// First induced embedding of `pattern` into `host` under ascending-label
/// branching (pattern vertex 0 is placed first, host candidates tried in
/// increasing order), so the result is the lexicographically least one.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern);

/// Same search restricted to host vertices in `allowed`.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern,
                                          Bits allowed);

/// Checks injectivity and induced adjacency preservation.
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& map);

}  // namespace wordrep

#endif  // WORDREP_ISOMORPHISM_HPP
