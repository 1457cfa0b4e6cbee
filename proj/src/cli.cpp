// SPDX-License-Identifier: Apache-2.0

#include "wordrep/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>

#include "wordrep/characterization.hpp"
#include "wordrep/enumerate.hpp"
#include "wordrep/families.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/json_io.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/split.hpp"

namespace wordrep {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

// Calls f(graph6 text, graph) per input graph. Returns false if any line or
// file could not be read; those are reported and skipped.
bool for_each_input(const std::vector<std::string>& files, Streams io,
                    const std::function<void(const std::string&, const Graph&)>& f) {
  bool ok = true;
  auto consume = [&](std::istream& stream, const std::string& name) {
    std::string line;
    for (int number = 1; std::getline(stream, line); ++number) {
      std::string text = trim(line);
      if (text.rfind(">>graph6<<", 0) == 0) text = text.substr(10);
      if (text.empty()) continue;
      try {
        f(text, parse_graph6(text));
      } catch (const ParseError& e) {
        io.err << name << ":" << number << ": " << e.what() << "\n";
        ok = false;
      }
    }
  };
  if (files.empty()) {
    consume(io.in, "<stdin>");
  }
  for (const std::string& file : files) {
    std::ifstream stream(file);
    if (!stream) {
      io.err << file << ": cannot open\n";
      ok = false;
      continue;
    }
    consume(stream, file);
  }
  return ok;
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

void print_verdict(std::ostream& out, const std::string& g6, const Verdict& v, bool json,
                   bool witness) {
  if (json) {
    nlohmann::json j = verdict_json(v);
    j["graph6"] = g6;
    out << j.dump() << "\n";
    return;
  }
  out << g6 << " " << (v.representable ? "representable" : "non-representable") << " "
      << to_string(v.reason);
  if (witness && v.pattern) out << " witness " << v.pattern->pattern << " " << join(v.pattern->vertices, ',');
  if (witness && v.orientation) out << " orientation " << v.orientation->bitstring();
  out << "\n";
}

bool allow_large_from_env() {
  const char* value = std::getenv(kAllowLargeEnv);
  return value != nullptr && *value != '\0' && std::string(value) != "0";
}

void print_types(std::ostream& out, const SplitPartition& sp, const OrientedGraph& og, bool json) {
  for (const VertexTypeReport& r : classify_all(sp, og)) {
    if (json) {
      out << report_json(r).dump() << "\n";
      continue;
    }
    out << "  " << r.vertex << " " << to_string(r.kind);
    if (r.kind == VertexKind::C) {
      out << " source " << join(r.source_group, ',') << " sink " << join(r.sink_group, ',')
          << " boundary " << r.boundary->first << "," << r.boundary->second;
    }
    out << "\n";
  }
}

std::vector<Arc> transitive_clique_arcs(const SplitPartition& sp) {
  std::vector<Arc> arcs;
  std::vector<int> clique = sp.clique.members();
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) arcs.push_back({clique[i], clique[j]});
  }
  return arcs;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Word-representability of graphs, with split graphs in focus."};
  app.name("wordrep");
  app.require_subcommand(1);

  std::vector<std::string> files;
  bool verify = false;
  bool witness = false;
  bool json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Decide word-representability per graph");
  classify_cmd->add_option("files", files, "graph6 files (default: standard input)");
  classify_cmd->add_flag("--verify", verify, "Cross-check fast paths against the orientation search");
  classify_cmd->add_flag("--witness", witness, "Print the forbidden subgraph or an orientation");
  classify_cmd->add_flag("--json", json, "One JSON object per line");

  int order = 0;
  std::string filter = "all";
  std::optional<long> expected;
  bool allow_large = false;
  auto* census_cmd = app.add_subcommand("census", "Classify every graph on N vertices");
  census_cmd->add_option("n", order, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--filter", filter, "all, connected or split")
      ->check(CLI::IsMember({"all", "connected", "split"}));
  census_cmd->add_option("--expected", expected, "Expected number of non-representable graphs");
  census_cmd->add_flag("--verify", verify, "Cross-check fast paths against the orientation search");
  census_cmd->add_flag("--json", json, "One JSON object per non-representable graph");
  census_cmd->add_flag("--allow-large", allow_large,
                       std::string("Permit N > 8 (or set ") + kAllowLargeEnv + ")");

  std::string tag;
  std::vector<int> params;
  bool with_orientation = false;
  auto* generate_cmd = app.add_subcommand("generate", "Print a named graph as graph6");
  generate_cmd->add_option("tag", tag, "Family tag, e.g. K_TRIANGLE")->required();
  generate_cmd->add_option("params", params, "Integer parameters");
  generate_cmd->add_flag("--orientation", with_orientation,
                         "Also print the documented semi-transitive orientation");

  bool all = false;
  bool count = false;
  bool fix_clique = false;
  bool classify_types = false;
  auto* orient_cmd = app.add_subcommand("orient", "Find semi-transitive orientations");
  orient_cmd->add_option("files", files, "graph6 files (default: standard input)");
  auto* all_opt = orient_cmd->add_flag("--all", all, "Print every semi-transitive orientation");
  orient_cmd->add_flag("--count", count, "Print the number of semi-transitive orientations")
      ->excludes(all_opt);
  orient_cmd->add_flag("--fix-clique", fix_clique,
                       "Fix the split clique transitively in ascending label order");
  orient_cmd->add_flag("--classify-types", classify_types,
                       "Print the A/B/C type of each independent vertex (split inputs)");
  orient_cmd->add_flag("--json", json, "JSON type reports");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) {
      bool ok = for_each_input(files, io, [&](const std::string& g6, const Graph& g) {
        print_verdict(out, g6, classify(g, {verify, witness}), json, witness);
      });
      return ok ? kExitOk : kExitUsage;
    }

    if (*census_cmd) {
      auto start = std::chrono::steady_clock::now();
      std::vector<Graph> graphs = enumerate_graphs(order, allow_large || allow_large_from_env());
      long total = 0;
      long bad = 0;
      for (const Graph& g : graphs) {
        if (filter == "split" && !split_partition(g)) continue;
        if (filter == "connected" && !g.is_connected()) continue;
        ++total;
        Verdict v = classify(g, {verify, false});
        if (v.representable) continue;
        ++bad;
        print_verdict(out, write_graph6(g), v, json, true);
      }
      out << "census n=" << order << " filter=" << filter << " graphs=" << total
          << " non-representable=" << bad << "\n";
      std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      err << "time " << std::fixed << std::setprecision(2) << took.count() << "s\n";
      if (expected && *expected != bad) {
        err << "expected " << *expected << " non-representable graphs, found " << bad << "\n";
        return kExitMismatch;
      }
      return kExitOk;
    }

    if (*generate_cmd) {
      FamilyId id{parse_family_tag(tag), params};
      Graph g = named(id);
      out << write_graph6(g) << "\n";
      if (with_orientation) {
        auto og = named_orientation(id);
        if (!og) {
          err << "no documented orientation for " << family_name(id.tag) << "\n";
          return kExitUsage;
        }
        out << to_dot(*og) << "orientation " << og->bitstring() << "\n";
      }
      return kExitOk;
    }

    if (*orient_cmd) {
      bool ok = true;
      bool inputs_ok = for_each_input(files, io, [&](const std::string& g6, const Graph& g) {
        auto sp = split_partition(g);
        if ((fix_clique || classify_types) && !sp) {
          err << g6 << ": not a split graph\n";
          ok = false;
          return;
        }
        std::vector<Arc> fixed = fix_clique ? transitive_clique_arcs(*sp) : std::vector<Arc>{};
        if (count) {
          out << g6 << " " << count_semi_transitive_extensions(g, fixed) << "\n";
          return;
        }
        bool any = false;
        auto emit = [&](const OrientedGraph& og) {
          any = true;
          out << format_oriented(og) << "\n";
          if (classify_types) print_types(out, *sp, og, json);
          return all;
        };
        if (fix_clique || all) {
          for_each_semi_transitive_orientation(g, fixed, emit);
        } else if (auto og = find_semi_transitive_orientation(g)) {
          emit(*og);
        }
        if (!any) out << g6 << " none\n";
      });
      return ok && inputs_ok ? kExitOk : kExitUsage;
    }
  } catch (const OracleDisagreement& e) {
    err << "oracle disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitDisagreement;
  }
  return kExitUsage;
}

}  // namespace wordrep
