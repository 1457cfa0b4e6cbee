// SPDX-License-Identifier: Apache-2.0
//
// Words over vertex labels and the alternation relation they induce.

#ifndef WORDREP_WORD_HPP
#define WORDREP_WORD_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

using Word = std::vector<int>;

/// Whether x and y alternate in w, i.e. w restricted to {x,y} is xyxy... or
/// yxyx.... Throws std::invalid_argument if x == y or either letter is absent.
bool alternate(const Word& w, int x, int y);

/// Graph on 0..n-1 with {x,y} an edge iff x and y alternate in w. Throws if
/// the alphabet of w is not exactly {0..n-1}.
Graph alternation_graph(const Word& w, int n);

struct Representation {
  bool ok = false;
  /// Human-readable reason when !ok (first differing pair or alphabet issue).
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Exact labelled check: alphabet(w) == {0..n-1} and alternation_graph == g.
Representation check_represents(const Word& w, const Graph& g);
bool represents(const Word& w, const Graph& g);

/// Bounded search for a uniform word representing g, trying uniformity
/// 1, 2, ..., max_uniformity. Returns the first representant found at the
/// least uniformity. std::nullopt only means "nothing within the bound".
std::optional<Word> find_representant(const Graph& g, int max_uniformity);

/// Deletes every copy of `letter` and shifts larger letters down by one.
Word remove_letter(const Word& w, int letter);

/// Accepts whitespace-separated decimal labels, or a compact digit string.
Word parse_word(std::string_view text);

/// Compact digit string when every label is < 10, otherwise space-separated.
std::string format_word(const Word& w);

}  // namespace wordrep

#endif  // WORDREP_WORD_HPP
