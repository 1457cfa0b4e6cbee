// SPDX-License-Identifier: Apache-2.0

#ifndef WORDREP_ENUMERATE_HPP
#define WORDREP_ENUMERATE_HPP

#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

inline constexpr int kEnumerationGuard = 8;

/// One representative (in canonical labelling) of every isomorphism class of
/// simple graphs on n vertices, ordered by edge count and then by graph6
/// text. Orders above 8 throw std::domain_error unless `allow_large` is set.
///
/// The result is a plain vector so callers that want to work in parallel can
/// split it by index.
std::vector<Graph> enumerate_graphs(int n, bool allow_large = false);

}  // namespace wordrep

#endif  // WORDREP_ENUMERATE_HPP
