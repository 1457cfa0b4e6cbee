#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wordrep/cli.hpp"
#include "wordrep/families.hpp"
#include "wordrep/graph6.hpp"
#include "wordrep/isomorphism.hpp"
#include "wordrep/orientation.hpp"

using namespace wordrep;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden_path(const std::string& name) { return std::string(WORDREP_GOLDEN_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream file(golden_path(name));
  REQUIRE(file.good());
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string g6(FamilyTag tag, std::vector<int> params = {}) {
  return write_graph6(named({tag, std::move(params)})) + "\n";
}

}  // namespace

TEST_CASE("classify golden output") {
  const std::string input = golden_path("classify_input.g6");
  Run json = run({"classify", "--json", "--witness", input});
  CHECK(json.code == kExitOk);
  CHECK(json.out == golden("classify_json.txt"));
  Run text = run({"classify", "--witness", input});
  CHECK(text.code == kExitOk);
  CHECK(text.out == golden("classify_text.txt"));
}

TEST_CASE("classify examples") {
  Run w5 = run({"classify"}, g6(FamilyTag::W5));
  CHECK(w5.out.find("non-representable ORACLE_SEARCH") != std::string::npos);
  Run t1 = run({"classify", "--witness", "--verify"}, g6(FamilyTag::T1));
  CHECK(t1.out.find("non-representable THEOREM_MAIN1 witness T1") != std::string::npos);
  Run k4 = run({"classify"}, g6(FamilyTag::K, {4}));
  CHECK(k4.out == "C~ representable COMPARABILITY\n");
  Run blank = run({"classify"}, ">>graph6<<C~\n\n");
  CHECK(blank.out == "C~ representable COMPARABILITY\n");
}

TEST_CASE("classify reports unparseable lines with line numbers") {
  Run r = run({"classify"}, "C~\nbad!\nEhfw\n");
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("<stdin>:2:") != std::string::npos);
  CHECK(r.out.find("C~ representable") != std::string::npos);
  CHECK(r.out.find("Ehfw non-representable") != std::string::npos);
  CHECK(run({"classify", "/nonexistent/file.g6"}).code == kExitUsage);
}

TEST_CASE("census") {
  Run six = run({"census", "6", "--expected", "1"});
  CHECK(six.code == kExitOk);
  std::istringstream lines(six.out);
  std::string first;
  std::getline(lines, first);
  CHECK(is_isomorphic(parse_graph6(first.substr(0, first.find(' '))), named({FamilyTag::W5, {}})));
  CHECK(six.out.find("census n=6 filter=all graphs=156 non-representable=1") != std::string::npos);

  Run split = run({"census", "7", "--filter", "split"});
  CHECK(split.code == kExitOk);
  CHECK(split.out == golden("census_7_split.txt"));

  Run mismatch = run({"census", "6", "--expected", "2"});
  CHECK(mismatch.code == kExitMismatch);
  CHECK(mismatch.err.find("expected 2") != std::string::npos);

  Run guard = run({"census", "9"});
  CHECK(guard.code == kExitUsage);
  CHECK(run({"census", "5", "--filter", "nope"}).code == kExitUsage);
}

TEST_CASE("generate") {
  CHECK(run({"generate", "K_TRIANGLE", "3", "--orientation"}).out ==
        golden("generate_k_triangle_3.txt"));
  Run a4 = run({"generate", "A_GRAPH", "4"});
  CHECK(a4.code == kExitOk);
  CHECK(is_isomorphic(parse_graph6(a4.out.substr(0, a4.out.size() - 1)), named({FamilyTag::T1, {}})));
  Run k53 = run({"generate", "K_L_K", "5", "3"});
  CHECK(parse_graph6(k53.out.substr(0, k53.out.size() - 1)) == k_ell_k(5, 3));

  Run oriented = run({"generate", "K_TRIANGLE", "6", "--orientation"});
  std::string bits = oriented.out.substr(oriented.out.rfind(' ') + 1);
  bits.pop_back();
  CHECK(is_semi_transitive(OrientedGraph::from_bitstring(k_triangle(6), bits)));

  CHECK(run({"generate", "T1", "--orientation"}).code == kExitUsage);
  CHECK(run({"generate", "NOPE"}).code == kExitUsage);
  CHECK(run({"generate", "K_TRIANGLE", "2"}).code == kExitUsage);
  CHECK(run({"generate", "K_TRIANGLE"}).code == kExitUsage);
}

TEST_CASE("orient") {
  Run count = run({"orient", "--count", "--fix-clique"}, g6(FamilyTag::K_TRIANGLE, {3}));
  CHECK(count.out == "E}Y_ 4\n");
  Run free_count = run({"orient", "--count"}, g6(FamilyTag::K, {3}));
  CHECK(free_count.out == "Bw 6\n");
  CHECK(run({"orient"}, g6(FamilyTag::T4)).out == "G~rcd_ none\n");

  Run all = run({"orient", "--all", "--fix-clique"}, g6(FamilyTag::K_TRIANGLE, {4}));
  int lines = 0;
  std::istringstream stream(all.out);
  for (std::string line; std::getline(stream, line); ++lines) {
    CHECK(is_semi_transitive(parse_oriented(line)));
  }
  CHECK(lines == 8);

  Run types = run({"orient", "--fix-clique", "--classify-types", "--json"},
                  g6(FamilyTag::K_TRIANGLE, {6}));
  CHECK(types.out == golden("orient_types_json.txt"));
  Run text_types = run({"orient", "--fix-clique", "--classify-types"}, g6(FamilyTag::K_TRIANGLE, {6}));
  CHECK(text_types.out.find("  11 C source 0 sink 5 boundary 0,5\n") != std::string::npos);

  Run not_split = run({"orient", "--classify-types"}, g6(FamilyTag::C, {4}));
  CHECK(not_split.code == kExitUsage);
  CHECK(not_split.err.find("not a split graph") != std::string::npos);
  CHECK(run({"orient", "--all", "--count"}, "C~\n").code == kExitUsage);
}

TEST_CASE("usage") {
  CHECK(run({}).code == kExitUsage);
  Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("classify") != std::string::npos);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}
