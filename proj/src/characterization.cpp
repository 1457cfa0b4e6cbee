// SPDX-License-Identifier: Apache-2.0

#include "wordrep/characterization.hpp"

#include <functional>

#include "wordrep/families.hpp"
#include "wordrep/isomorphism.hpp"

namespace wordrep {

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::CLIQUE_LE_3: return "CLIQUE_LE_3";
    case Reason::COMPARABILITY: return "COMPARABILITY";
    case Reason::THEOREM_MAIN1: return "THEOREM_MAIN1";
    case Reason::THEOREM_MAIN2: return "THEOREM_MAIN2";
    case Reason::ORACLE_SEARCH: return "ORACLE_SEARCH";
  }
  return "?";
}

Graph pattern_graph(const std::string& pattern) {
  if (pattern == "T1") return named({FamilyTag::T1, {}});
  if (pattern == "T2") return named({FamilyTag::T2, {}});
  if (pattern == "T3") return named({FamilyTag::T3, {}});
  if (pattern == "T4") return named({FamilyTag::T4, {}});
  if (pattern.size() > 1 && pattern[0] == 'A') {
    std::size_t used = 0;
    int l = -1;
    try {
      l = std::stoi(pattern.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used + 1 == pattern.size()) return a_graph(l);
  }
  throw std::invalid_argument("unknown witness pattern: " + pattern);
}

std::string validate_verdict(const Graph& g, const Verdict& v) {
  if (v.pattern) {
    if (v.representable) return "representable verdict carries a forbidden pattern";
    if (!is_induced_embedding(g, pattern_graph(v.pattern->pattern), v.pattern->vertices)) {
      return "witness " + v.pattern->pattern + " is not an induced copy";
    }
  }
  if (v.orientation) {
    if (!v.representable) return "non-representable verdict carries an orientation";
    if (!(v.orientation->base() == g)) return "orientation is of a different graph";
    if (!is_semi_transitive(*v.orientation)) return "orientation is not semi-transitive";
  }
  return "";
}

std::optional<AEllMatch> find_a_ell_generic(const Graph& g) {
  for (int l = 4; 2 * l - 1 <= g.order(); ++l) {
    if (auto e = contains_induced(g, a_graph(l))) return AEllMatch{l, *e};
  }
  return std::nullopt;
}

namespace {

// Cycle c_0..c_{L-1} in N(apex) forming a clique, with t_i adjacent to
// exactly c_i and c_{i+1} among the chosen vertices and to nothing else chosen.
class AEllSearch {
 public:
  AEllSearch(const Graph& g, int apex, int cycle) : g_(g), apex_(apex), cycle_(cycle) {}

  std::optional<Embedding> run() {
    cs_.assign(cycle_, -1);
    ts_.assign(cycle_, -1);
    for_each_bit(g_.neighbors(apex_), [&](int c) {
      if (found_) return;
      cs_[0] = c;
      cset_ = bit(c);
      tset_ = 0;
      extend(0);
    });
    if (!found_) return std::nullopt;
    Embedding e(cs_);
    e.insert(e.end(), ts_.begin(), ts_.end());
    e.push_back(apex_);
    return e;
  }

 private:
  // A triangle vertex for the pair (a, b) given the chosen sets.
  void each_triangle(int a, int b, const std::function<void(int)>& f) const {
    Bits candidates = g_.neighbors(a) & g_.neighbors(b) & ~g_.neighbors(apex_) & ~bit(apex_);
    for_each_bit(candidates, [&](int t) {
      if (found_) return;
      if ((g_.neighbors(t) & cset_) != (bit(a) | bit(b))) return;
      if (g_.neighbors(t) & tset_) return;
      f(t);
    });
  }

  void extend(int j) {
    const int cj = cs_[j];
    if (j == cycle_ - 1) {
      each_triangle(cj, cs_[0], [&](int t) {
        ts_[j] = t;
        found_ = true;
      });
      return;
    }
    Bits next = g_.neighbors(apex_) & ~cset_ & ~low_bits(cs_[0] + 1);
    for_each_bit(next, [&](int c) {
      if (found_) return;
      if ((g_.neighbors(c) & cset_) != cset_ || (g_.neighbors(c) & tset_)) return;
      cs_[j + 1] = c;
      cset_ |= bit(c);
      each_triangle(cj, c, [&](int t) {
        ts_[j] = t;
        tset_ |= bit(t);
        extend(j + 1);
        if (!found_) tset_ &= ~bit(t);
      });
      if (!found_) cset_ &= ~bit(c);
    });
  }

  const Graph& g_;
  int apex_;
  int cycle_;
  std::vector<int> cs_;
  std::vector<int> ts_;
  Bits cset_ = 0;
  Bits tset_ = 0;
  bool found_ = false;
};

}  // namespace

std::optional<AEllMatch> find_a_ell_structural(const Graph& g) {
  for (int l = 4; 2 * l - 1 <= g.order(); ++l) {
    for (int apex = 0; apex < g.order(); ++apex) {
      if (auto e = AEllSearch(g, apex, l - 1).run()) {
        if (!is_induced_embedding(g, a_graph(l), *e)) {
          throw std::logic_error("structural A_l search built an invalid embedding");
        }
        return AEllMatch{l, *e};
      }
    }
  }
  return std::nullopt;
}

std::optional<AEllMatch> find_a_ell(const Graph& g) {
  auto generic = find_a_ell_generic(g);
  auto structural = find_a_ell_structural(g);
  int lg = generic ? generic->l : 0;
  int ls = structural ? structural->l : 0;
  if (lg != ls) {
    throw std::logic_error("A_l searches disagree on " + to_string(g) + ": " +
                           std::to_string(lg) + " vs " + std::to_string(ls));
  }
  return generic;
}

namespace {

Verdict forbidden(Reason reason, const std::string& pattern, Embedding e) {
  return {false, reason, PatternWitness{pattern, std::move(e)}, std::nullopt};
}

std::optional<Verdict> scan(const Graph& g, Reason reason, std::initializer_list<FamilyTag> tags) {
  for (FamilyTag t : tags) {
    if (auto e = contains_induced(g, named({t, {}}))) return forbidden(reason, family_name(t), *e);
  }
  return std::nullopt;
}

}  // namespace

Verdict theorem_main1(const SplitPartition& sp) {
  const Graph& g = sp.host;
  for_each_bit(sp.independent.bits(), [&](int x) {
    if (g.degree(x) > 2) {
      throw std::invalid_argument("independent vertex " + std::to_string(x) + " has degree above 2");
    }
  });
  auto a = find_a_ell(g);
  if (a && a->l == 4) return *scan(g, Reason::THEOREM_MAIN1, {FamilyTag::T1});
  if (auto v = scan(g, Reason::THEOREM_MAIN1, {FamilyTag::T2})) return *v;
  if (a) return forbidden(Reason::THEOREM_MAIN1, "A" + std::to_string(a->l), a->embedding);
  return {true, Reason::THEOREM_MAIN1, std::nullopt, std::nullopt};
}

Verdict theorem_main2(const SplitPartition& sp) {
  if (sp.clique_size() != 4) throw std::invalid_argument("clique size is not 4");
  if (auto v = scan(sp.host, Reason::THEOREM_MAIN2,
                    {FamilyTag::T1, FamilyTag::T2, FamilyTag::T3, FamilyTag::T4})) {
    return *v;
  }
  return {true, Reason::THEOREM_MAIN2, std::nullopt, std::nullopt};
}

namespace {

Verdict by_oracle(const Graph& g) {
  auto og = find_semi_transitive_orientation(g);
  return {og.has_value(), Reason::ORACLE_SEARCH, std::nullopt, og};
}

void finish(const Graph& g, Verdict& v, const ClassifyOptions& options) {
  if (options.orientation && v.representable && !v.orientation) {
    v.orientation = find_semi_transitive_orientation(g);
    if (!v.orientation) {
      throw OracleDisagreement(to_string(v.reason) + " says representable but no orientation exists");
    }
  }
  if (!options.orientation) v.orientation.reset();
  if (options.verify && is_word_representable(g) != v.representable) {
    throw OracleDisagreement(to_string(v.reason) + " disagrees with the orientation oracle on " +
                             to_string(g));
  }
  if (std::string why = validate_verdict(g, v); !why.empty()) throw std::logic_error(why);
}

}  // namespace

Verdict classify_split(const Graph& g, const ClassifyOptions& options) {
  auto sp = split_partition(g);
  if (!sp) throw std::invalid_argument("graph is not split");
  ReducedSplit r = reduce(*sp);
  const SplitPartition& rp = r.partition;
  const Graph& h = rp.host;

  Verdict v;
  bool low_degree = true;
  for_each_bit(rp.independent.bits(), [&](int x) { low_degree = low_degree && h.degree(x) <= 2; });
  if (rp.clique_size() <= 3) {
    v = {true, Reason::CLIQUE_LE_3, std::nullopt, std::nullopt};
  } else if (is_split_comparability(h)) {
    v = {true, Reason::COMPARABILITY, std::nullopt, std::nullopt};
  } else if (low_degree) {
    v = theorem_main1(rp);
  } else if (rp.clique_size() == 4) {
    v = theorem_main2(rp);
  } else {
    v = by_oracle(h);
    v.orientation.reset();
  }
  if (v.pattern) {
    for (int& u : v.pattern->vertices) u = r.original_label[u];
  }
  finish(g, v, options);
  return v;
}

Verdict classify(const Graph& g, const ClassifyOptions& options) {
  if (split_partition(g)) return classify_split(g, options);
  Verdict v = by_oracle(g);
  finish(g, v, options);
  return v;
}

}  // namespace wordrep
