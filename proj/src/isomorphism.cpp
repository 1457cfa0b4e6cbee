// SPDX-License-Identifier: Apache-2.0

#include "wordrep/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace wordrep {

namespace {

using Colouring = std::vector<int>;

// Re-ranks arbitrary integer keys to 0..k-1 preserving order; returns k.
int rerank(std::vector<std::vector<int>>& keys, Colouring& col) {
  std::vector<std::vector<int>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    col[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                              sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

int count_colours(const Colouring& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// Refines `col` to the coarsest equitable colouring finer than it.
void refine(const Graph& g, Colouring& col) {
  const int n = g.order();
  int k = count_colours(col);
  for (;;) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v].assign(k + 1, 0);
      keys[v][0] = col[v];
      for_each_bit(g.neighbors(v), [&](int w) { ++keys[v][1 + col[w]]; });
    }
    int next = rerank(keys, col);
    if (next == k) return;
    k = next;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  CanonicalForm run() {
    Colouring col(g_.order(), 0);
    descend(col);
    return {best_labelling_, relabel(g_, best_labelling_)};
  }

 private:
  void descend(Colouring col) {
    refine(g_, col);
    const int n = g_.order();
    const int k = count_colours(col);
    if (k == n) {
      std::vector<Bits> code(n, 0);
      for (int v = 0; v < n; ++v) {
        for_each_bit(g_.neighbors(v), [&](int w) { code[col[v]] |= bit(col[w]); });
      }
      if (!have_best_ || code > best_code_) {
        best_code_ = std::move(code);
        best_labelling_ = col;
        have_best_ = true;
      }
      return;
    }
    std::vector<int> size(k, 0);
    for (int c : col) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;

    std::vector<int> cell;
    for (int v = 0; v < n; ++v) {
      if (col[v] == target) cell.push_back(v);
    }
    std::vector<int> reps;
    for (int v : cell) {
      bool twin = std::any_of(reps.begin(), reps.end(), [&](int r) {
        return (g_.neighbors(v) & ~bit(r)) == (g_.neighbors(r) & ~bit(v));
      });
      if (!twin) reps.push_back(v);
    }
    for (int v : reps) {
      std::vector<std::vector<int>> keys(n);
      for (int w = 0; w < n; ++w) {
        keys[w] = {2 * col[w] + ((col[w] == target && w != v) ? 1 : 0)};
      }
      Colouring next(n);
      rerank(keys, next);
      descend(std::move(next));
    }
  }

  const Graph& g_;
  bool have_best_ = false;
  std::vector<Bits> best_code_;
  std::vector<int> best_labelling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {{}, Graph(0)};
  return CanonicalSearch(g).run();
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g).graph == canonical_form(h).graph;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  CanonicalForm cg = canonical_form(g);
  CanonicalForm ch = canonical_form(h);
  if (!(cg.graph == ch.graph)) return std::nullopt;
  std::vector<int> inverse_h(h.order());
  for (int v = 0; v < h.order(); ++v) inverse_h[ch.labelling[v]] = v;
  std::vector<int> phi(g.order());
  for (int v = 0; v < g.order(); ++v) phi[v] = inverse_h[cg.labelling[v]];
  return phi;
}

namespace {

class InducedSearch {
 public:
  InducedSearch(const Graph& host, const Graph& pattern, Bits allowed)
      : host_(host), pattern_(pattern), allowed_(allowed & host.all()),
        map_(pattern.order(), -1) {}

  std::optional<Embedding> run() {
    if (pattern_.order() > popcount(allowed_)) return std::nullopt;
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(int i, Bits used) {
    if (i == pattern_.order()) return true;
    Bits cand = allowed_ & ~used;
    for (int j = 0; j < i; ++j) {
      Bits nb = host_.neighbors(map_[j]);
      cand &= pattern_.adjacent(i, j) ? nb : ~nb;
    }
    const int need = pattern_.degree(i);
    bool found = false;
    for_each_bit(cand, [&](int v) {
      if (found || popcount(host_.neighbors(v) & allowed_) < need) return;
      map_[i] = v;
      found = extend(i + 1, used | bit(v));
    });
    return found;
  }

  const Graph& host_;
  const Graph& pattern_;
  Bits allowed_;
  Embedding map_;
};

}  // namespace

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern,
                                          Bits allowed) {
  return InducedSearch(host, pattern, allowed).run();
}

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  return contains_induced(host, pattern, host.all());
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& map) {
  if (static_cast<int>(map.size()) != pattern.order()) return false;
  Bits seen = 0;
  for (int v : map) {
    if (v < 0 || v >= host.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int a = 0; a < pattern.order(); ++a) {
    for (int b = a + 1; b < pattern.order(); ++b) {
      if (pattern.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
    }
  }
  return true;
}

}  // namespace wordrep
