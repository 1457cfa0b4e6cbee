// SPDX-License-Identifier: Apache-2.0
//
// Forbidden-subgraph characterizations of word-representable split graphs
// and a dispatcher that picks the cheapest applicable test.

#ifndef WORDREP_CHARACTERIZATION_HPP
#define WORDREP_CHARACTERIZATION_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/split.hpp"

namespace wordrep {

enum class Reason { CLIQUE_LE_3, COMPARABILITY, THEOREM_MAIN1, THEOREM_MAIN2, ORACLE_SEARCH };

std::string to_string(Reason reason);

/// An induced copy of a forbidden graph: vertices[i] is the host vertex
/// playing pattern vertex i. Pattern names are "T1".."T4" (labelled as
/// named()) or "A<l>" (labelled as a_graph(l)); A_4 is reported as "T1".
struct PatternWitness {
  std::string pattern;
  Embedding vertices;
};

struct Verdict {
  bool representable = false;
  Reason reason = Reason::ORACLE_SEARCH;
  std::optional<PatternWitness> pattern;      // non-representable fast paths
  std::optional<OrientedGraph> orientation;   // representable, when requested
};

/// The graph a witness pattern name refers to. Throws std::invalid_argument.
Graph pattern_graph(const std::string& pattern);

/// Empty string if the witness is consistent with g, else the reason.
std::string validate_verdict(const Graph& g, const Verdict& v);

struct AEllMatch {
  int l;
  Embedding embedding;  // onto a_graph(l)
};

/// Least l >= 4 with an induced a_graph(l), via contains_induced per l.
std::optional<AEllMatch> find_a_ell_generic(const Graph& g);

/// Same, via an apex and a cycle of clique vertices whose consecutive pairs
/// each carry a private non-clique triangle.
std::optional<AEllMatch> find_a_ell_structural(const Graph& g);

/// Both searches; throws std::logic_error if they disagree on l. Returns the
/// generic (lexicographically least) embedding.
std::optional<AEllMatch> find_a_ell(const Graph& g);

/// Degree <= 2 case: representable iff no induced T2 or A_l. Throws
/// std::invalid_argument if an independent vertex has degree above 2.
Verdict theorem_main1(const SplitPartition& sp);

/// Clique size 4: representable iff no induced T1, T2, T3, T4. Throws
/// std::invalid_argument if the clique size is not 4.
Verdict theorem_main2(const SplitPartition& sp);

struct ClassifyOptions {
  bool verify = false;       // cross-check the verdict against the oracle
  bool orientation = false;  // attach a semi-transitive orientation if representable
};

/// Raised when a fast path disagrees with the orientation oracle.
class OracleDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduce, then dispatch: clique size <= 3, comparability, degree <= 2,
/// clique size 4, else the orientation search. Witnesses use input labels.
/// Throws std::invalid_argument if g is not split.
Verdict classify_split(const Graph& g, const ClassifyOptions& options = {});

/// classify_split for split graphs, the orientation search otherwise.
Verdict classify(const Graph& g, const ClassifyOptions& options = {});

}  // namespace wordrep

#endif  // WORDREP_CHARACTERIZATION_HPP
