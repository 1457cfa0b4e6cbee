// SPDX-License-Identifier: Apache-2.0

#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "wordrep/isomorphism.hpp"

namespace wordrep {

bool alternate(const Word& w, int x, int y) {
  if (x == y) throw std::invalid_argument("alternation needs two distinct letters");
  int last = -1;
  bool seen_x = false;
  bool seen_y = false;
  bool ok = true;
  for (int c : w) {
    if (c != x && c != y) continue;
    seen_x = seen_x || c == x;
    seen_y = seen_y || c == y;
    if (c == last) ok = false;
    last = c;
  }
  if (!seen_x || !seen_y) {
    throw std::invalid_argument("letter " + std::to_string(seen_x ? y : x) +
                                " does not occur in the word");
  }
  return ok;
}

namespace {

// Letters of w must be exactly {0..n-1}; returns an empty string if so.
std::string alphabet_problem(const Word& w, int n) {
  std::vector<bool> present(n, false);
  for (int c : w) {
    if (c < 0 || c >= n) return "letter " + std::to_string(c) + " outside 0.." + std::to_string(n - 1);
    present[c] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (!present[v]) return "letter " + std::to_string(v) + " missing from word";
  }
  return {};
}

}  // namespace

Graph alternation_graph(const Word& w, int n) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("vertex count out of range");
  if (std::string problem = alphabet_problem(w, n); !problem.empty()) {
    throw std::invalid_argument("alphabet mismatch: " + problem);
  }
  // since[x] bit y: y occurred after the latest x; broken[x] bit y: pair failed.
  std::vector<Bits> since(n, 0), broken(n, 0);
  std::vector<bool> started(n, false);
  for (int c : w) {
    // c repeats without y in between iff y has not occurred since c.
    if (started[c]) broken[c] |= ~since[c] & low_bits(n) & ~bit(c);
    started[c] = true;
    since[c] = 0;
    for (int y = 0; y < n; ++y) since[y] |= bit(c);
  }
  Graph g(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!((broken[x] >> y) & 1U) && !((broken[y] >> x) & 1U)) {
        g.add_edge(x, y);
      }
    }
  }
  return g;
}

Representation check_represents(const Word& w, const Graph& g) {
  if (std::string problem = alphabet_problem(w, g.order()); !problem.empty()) {
    return {false, "alphabet mismatch: " + problem};
  }
  Graph alt = alternation_graph(w, g.order());
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      if (alt.adjacent(x, y) != g.adjacent(x, y)) {
        std::ostringstream os;
        os << "pair (" << x << "," << y << "): letters "
           << (alt.adjacent(x, y) ? "alternate" : "do not alternate") << " but the graph "
           << (g.adjacent(x, y) ? "has" : "lacks") << " the edge";
        return {false, os.str()};
      }
    }
  }
  return {true, {}};
}

bool represents(const Word& w, const Graph& g) { return check_represents(w, g).ok; }

namespace {

// Depth-first generation of k-uniform words whose first occurrences come in
// ascending letter order. A pair that fails to alternate can never recover,
// so the count of failed pairs is bounded by the non-edges of the target.
class UniformWordSearch {
 public:
  UniformWordSearch(const Graph& g, int k)
      : g_(g), n_(g.order()), k_(k), length_(g.order() * k), counts_(n_, 0),
        last_in_pair_(n_ * n_, -1), failed_per_letter_(n_, 0) {
    non_edges_ = n_ * (n_ - 1) / 2 - g.size();
    for (int v = 0; v < n_; ++v) non_degree_.push_back(n_ - 1 - g.degree(v));
    std::sort(non_degree_.begin(), non_degree_.end(), std::greater<>());
  }

  std::optional<Word> run() {
    word_.reserve(length_);
    if (dfs(0)) return result_;
    return std::nullopt;
  }

 private:
  bool feasible() const {
    if (failed_ > non_edges_) return false;
    std::vector<int> f = failed_per_letter_;
    std::sort(f.begin(), f.end(), std::greater<>());
    for (int i = 0; i < n_; ++i) {
      if (f[i] > non_degree_[i]) return false;
    }
    return true;
  }

  bool dfs(int introduced) {
    if (static_cast<int>(word_.size()) == length_) return accept();
    int limit = std::min(introduced + 1, n_);
    for (int c = 0; c < limit; ++c) {
      if (counts_[c] == k_) continue;
      // Remaining slots must fit the letters not yet introduced.
      int slots = length_ - static_cast<int>(word_.size()) - 1;
      int pending = (n_ - std::max(introduced, c + 1)) * k_;
      if (pending > slots) continue;

      std::vector<std::pair<int, int>> undo;
      for (int y = 0; y < n_; ++y) {
        if (y == c) continue;
        int& slot = last_in_pair_[pair_index(c, y)];
        undo.emplace_back(y, slot);
        if (slot == c && !is_failed(c, y)) mark_failed(c, y, +1);
        slot = c;
      }
      word_.push_back(c);
      ++counts_[c];
      bool done = feasible() && dfs(std::max(introduced, c + 1));
      --counts_[c];
      word_.pop_back();
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
        int y = it->first;
        int& slot = last_in_pair_[pair_index(c, y)];
        slot = it->second;
        if (failed_mark_[pair_index(c, y)] == static_cast<int>(word_.size()) + 1) {
          mark_failed(c, y, -1);
        }
      }
      if (done) return true;
    }
    return false;
  }

  int pair_index(int x, int y) const { return x < y ? x * n_ + y : y * n_ + x; }
  bool is_failed(int x, int y) const { return failed_mark_[pair_index(x, y)] != 0; }

  void mark_failed(int x, int y, int delta) {
    failed_ += delta;
    failed_per_letter_[x] += delta;
    failed_per_letter_[y] += delta;
    // Record the word length at which the pair failed so undo is exact.
    failed_mark_[pair_index(x, y)] = delta > 0 ? static_cast<int>(word_.size()) + 1 : 0;
  }

  bool accept() {
    if (failed_ != non_edges_) return false;
    Graph alt = alternation_graph(word_, n_);
    auto phi = find_isomorphism(alt, g_);
    if (!phi) return false;
    result_.clear();
    for (int c : word_) result_.push_back((*phi)[c]);
    return true;
  }

  const Graph& g_;
  int n_;
  int k_;
  int length_;
  int non_edges_ = 0;
  int failed_ = 0;
  std::vector<int> counts_;
  std::vector<int> last_in_pair_;
  std::vector<int> failed_per_letter_;
  std::vector<int> failed_mark_ = std::vector<int>(n_ * n_, 0);
  std::vector<int> non_degree_;
  Word word_;
  Word result_;
};

}  // namespace

std::optional<Word> find_representant(const Graph& g, int max_uniformity) {
  if (max_uniformity < 1) throw std::invalid_argument("uniformity bound must be >= 1");
  if (g.order() == 0) return Word{};
  for (int k = 1; k <= max_uniformity; ++k) {
    if (auto w = UniformWordSearch(g, k).run()) return w;
  }
  return std::nullopt;
}

Word remove_letter(const Word& w, int letter) {
  Word out;
  for (int c : w) {
    if (c == letter) continue;
    out.push_back(c > letter ? c - 1 : c);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::string trimmed(text);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.pop_back();
  }
  std::size_t start = trimmed.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) return w;
  if (trimmed.find_first_of(" \t", start) == std::string::npos) {
    for (std::size_t i = start; i < trimmed.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(trimmed[i]))) {
        throw std::invalid_argument("invalid character in compact word at offset " +
                                    std::to_string(i));
      }
      w.push_back(trimmed[i] - '0');
    }
    return w;
  }
  std::istringstream is(trimmed);
  std::string token;
  while (is >> token) {
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("invalid word token '" + token + "'");
    }
    w.push_back(std::stoi(token));
  }
  return w;
}

std::string format_word(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int c) { return c >= 0 && c < 10; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i > 0) out.push_back(' ');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

}  // namespace wordrep
