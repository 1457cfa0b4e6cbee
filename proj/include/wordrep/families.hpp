// SPDX-License-Identifier: Apache-2.0
//
// Generators for the named graphs and parametrised families used throughout
// the library and its tests.
//
// Label conventions. Figure graphs are drawn with labels 1, 2, ...; the
// generators subtract one. Where a figure omits labels (the M_i subgraphs of
// M), the surviving labels are renumbered 0.. in ascending order. In the
// clique-with-triangles families the clique vertex i (1-based) becomes i-1
// and the primed vertex i' becomes l+i-1.

#ifndef WORDREP_FAMILIES_HPP
#define WORDREP_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

enum class FamilyTag {
  K_TRIANGLE,    // (l)    clique K_l with a triangle on every circular pair
  A_GRAPH,       // (l)    K_TRIANGLE(l-1) plus an apex on the clique
  K_L_K,         // (l,k)  clique K_l, l vertices on k circular neighbours
  T1,
  T2,
  T3,
  T4,
  W5,
  B1,
  B2,
  B3,
  CO_T2,
  FIG4_RIGHT,
  FIG2_EXAMPLE,
  M,
  M1,
  M2,
  M3,
  M4,
  M5,
  M6,
  MAX3,          // the degree-3 maximal configuration on K_4
  MAX32_RIGHT,   // the representable companion of M
  C,             // (m)    cycle
  TWO_K2,
  K,             // (n)    complete graph
  EMPTY,         // (n)    edgeless graph
};

struct FamilyId {
  FamilyTag tag;
  std::vector<int> params;
};

/// Tag spelling as used on the command line, e.g. "K_TRIANGLE".
std::string family_name(FamilyTag tag);
/// Inverse of family_name (case-insensitive). Throws std::invalid_argument.
FamilyTag parse_family_tag(std::string_view name);
/// Number of integer parameters the tag takes.
int family_arity(FamilyTag tag);

/// Builds the graph. Throws std::invalid_argument for a wrong parameter count
/// or out-of-range parameters.
Graph named(const FamilyId& id);

/// The documented semi-transitive orientation of a family member, where the
/// library knows one: K_TRIANGLE, K_L_K, M2, M3, M4, M6, MAX32_RIGHT.
std::optional<OrientedGraph> named_orientation(const FamilyId& id);

Graph k_triangle(int l);
Graph a_graph(int l);
Graph k_ell_k(int l, int k);

/// Clique i->j for i<j; i->(l+i) and (i+1)->(l+i) for i < l-1; the last
/// primed vertex gets 0->(2l-1) and (2l-1)->(l-1).
OrientedGraph k_triangle_canonical_orientation(int l);

/// Explicit representant of K_TRIANGLE(l) for odd l. Blocks i' i (i+1) i'
/// over odd i, then l' l 1 l', then the same blocks over even i (1-based).
Word k_triangle_odd_word(int l);

/// Clique ordered along the circle; non-wrapping independent vertices are
/// sinks, wrapping ones take their low-index neighbours as in-neighbours.
OrientedGraph k_ell_k_orientation(int l, int k);

/// Second drawings of figure graphs that are claimed isomorphic to the
/// primary transcription (T3 and MAX3).
Graph t3_second_drawing();
Graph max3_second_drawing();

}  // namespace wordrep

#endif  // WORDREP_FAMILIES_HPP
