// SPDX-License-Identifier: Apache-2.0
//
// Split graphs: recognition, the maximal clique/independent partition, the
// reduction moves that preserve word-representability, comparability, and
// the A/B/C typing of independent vertices under an orientation.

#ifndef WORDREP_SPLIT_HPP
#define WORDREP_SPLIT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/isomorphism.hpp"
#include "wordrep/orientation.hpp"

namespace wordrep {

struct SplitPartition {
  Graph host;
  VertexSet clique;
  VertexSet independent;

  int clique_size() const { return clique.count(); }
};

/// Partition with a maximal (hence maximum) clique, or nullopt if g is not
/// split. Among several such partitions the lexicographically least clique
/// (as a sorted vertex list) wins.
std::optional<SplitPartition> split_partition(const Graph& g);

/// Split test via forbidden induced C4, C5 and 2K2.
bool has_split_obstruction(const Graph& g);

/// Decided both ways; throws std::logic_error if the two tests disagree.
bool is_split(const Graph& g);

struct ReducedSplit {
  SplitPartition partition;
  /// original_label[v] is the input label of reduced vertex v.
  std::vector<int> original_label;
};

/// Removes, until none is left: independent vertices of degree 0 or 1, and
/// any vertex sharing its open neighbourhood with a lower-labelled vertex.
/// Each step removes the lowest-labelled candidate and re-partitions.
ReducedSplit reduce(const SplitPartition& sp);

/// A transitive orientation found by backtracking, if one exists.
std::optional<OrientedGraph> find_transitive_orientation(const Graph& g);

struct ComparabilityObstruction {
  std::string pattern;  // "B1", "B2" or "B3"
  Embedding embedding;
};

/// First of B1, B2, B3 found as an induced subgraph. Throws
/// std::invalid_argument if g is not split.
std::optional<ComparabilityObstruction> split_comparability_obstruction(const Graph& g);

/// No induced B1, B2, B3. For n <= 10 the answer is cross-checked against
/// find_transitive_orientation (std::logic_error on disagreement).
bool is_split_comparability(const Graph& g);

struct HamiltonianCliquePath {
  std::vector<int> order;     // clique vertices from source to sink
  std::vector<int> position;  // position[v] on the path, -1 off the clique
};

/// The clique path if og orients the clique transitively, else nullopt.
std::optional<HamiltonianCliquePath> clique_path(const SplitPartition& sp,
                                                 const OrientedGraph& og);

enum class VertexKind { A, B, C, INVALID };

std::string to_string(VertexKind kind);

struct VertexTypeReport {
  int vertex = -1;
  VertexKind kind = VertexKind::INVALID;
  std::vector<int> neighbors_on_path;  // sorted path positions of N(x)
  std::vector<int> source_group;       // type C only, in path order
  std::vector<int> sink_group;         // type C only, in path order
  std::optional<std::pair<int, int>> boundary;  // type C only
};

/// Throws std::invalid_argument if x is not independent or the clique is
/// not transitively oriented.
VertexTypeReport classify_vertex(const SplitPartition& sp, const OrientedGraph& og, int x);

std::vector<VertexTypeReport> classify_all(const SplitPartition& sp, const OrientedGraph& og);

struct OrderViolation {
  enum class Kind { AB_ADJACENT_TO_BOUNDARY, C_GROUP_CONTAINS_BOUNDARY };
  int y;
  int x;
  std::pair<int, int> boundary;
  Kind kind;
};

std::string to_string(OrderViolation::Kind kind);

/// Violations of the boundary-pair restrictions between typed vertices.
/// Throws std::invalid_argument if any report is INVALID.
std::vector<OrderViolation> check_relative_order(const SplitPartition& sp,
                                                 const std::vector<VertexTypeReport>& reports);

/// Transitive clique, every independent vertex of type A, B or C, and no
/// relative-order violation.
bool check_main_orientation(const SplitPartition& sp, const OrientedGraph& og);

/// Reverses every edge at a type-A or type-B vertex. Throws
/// std::invalid_argument for other kinds or a non-semi-transitive input, and
/// std::logic_error if the result fails to be semi-transitive.
OrientedGraph toggle_ab(const SplitPartition& sp, const OrientedGraph& og, int x);

}  // namespace wordrep

#endif  // WORDREP_SPLIT_HPP
