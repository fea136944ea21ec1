#include "dyer/report.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dyer/cli.hpp"
#include "dyer/corpus.hpp"
#include "dyer/errors.hpp"
#include "test_support.hpp"

using namespace dyer;
using dyer::testing::coxeter_graph;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::string write_temp(const std::string& name, const std::string& contents) {
  std::string path = "/tmp/" + name;
  std::ofstream f(path);
  f << contents;
  return path;
}

}  // namespace

TEST_CASE("report JSON: schema shape and key order") {
  DyerGraph g = coxeter_graph(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});  // ~A2
  nlohmann::ordered_json doc = report_to_json(analyze(g));
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{
                    "schema_version", "graph", "family", "components", "finite",
                    "order", "centre", "abelianisation", "hyperbolic",
                    "acylindrically_hyperbolic"});
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["family"] == "coxeter_group");
  CHECK(doc["finite"] == false);
  CHECK(doc["order"] == "infinity");
  CHECK(doc["hyperbolic"]["value"] == false);
  CHECK(doc["hyperbolic"]["witness"]["kind"] == "affine_subset");
  CHECK(doc["acylindrically_hyperbolic"] == false);
}

TEST_CASE("report JSON: graph echo re-parses to the input graph") {
  for (const char* text : {
           "vertex a 2\nvertex b 2\nedge a b 3",
           "vertex a inf\nvertex b 5\nvertex c 2\nedge b c 2",
           "",
       }) {
    DyerGraph g = parse_graph(text);
    nlohmann::ordered_json doc = report_to_json(analyze(g));
    CHECK(graph_from_report_json(doc) == g);
  }
}

TEST_CASE("report JSON: infinite f and centre orders render as strings") {
  DyerGraph g = parse_graph("vertex a inf");
  nlohmann::ordered_json doc = report_to_json(analyze(g));
  CHECK(doc["graph"]["vertices"][0]["f"] == "infinity");
  CHECK(doc["centre"]["total_order"] == "infinity");
  CHECK(doc["abelianisation"]["factors"][0]["order"] == "infinity");
}

TEST_CASE("report text is stable") {
  DyerGraph g = parse_graph("vertex a 2\nvertex b 2\nedge a b 4");
  std::string text = report_to_text(analyze(g));
  CHECK(text.find("family: coxeter_group") != std::string::npos);
  CHECK(text.find("order: 8") != std::string::npos);
  CHECK(text.find("longest element of B2") != std::string::npos);
  CHECK(report_to_text(analyze(g)) == text);
}

TEST_CASE("cli: validate and exit codes") {
  std::string good = write_temp("good.dyer", "vertex a 2\nvertex b 2\nedge a b 3\n");
  std::string out, err;
  CHECK(run_cli({"validate", good}, &out) == kExitOk);
  CHECK(out == "ok: 2 vertices, 1 edges\n");

  std::string bad = write_temp("bad.dyer", "vertex a 3\nvertex b 2\nedge a b 3\n");
  CHECK(run_cli({"analyze", bad}, &out, &err) == kExitValidation);
  CHECK(err.find("Dyer-condition") != std::string::npos);

  std::string syntax = write_temp("syntax.dyer", "vertex a botched\n");
  CHECK(run_cli({"validate", syntax}, &out, &err) == kExitUsage);

  CHECK(run_cli({"no-such-command"}, &out, &err) == kExitUsage);
  CHECK(run_cli({"validate", "/nonexistent/x.dyer"}, &out, &err) == kExitUsage);
}

TEST_CASE("cli: analyze json matches the library") {
  std::string path = write_temp("tri.dyer",
                                "vertex a 2\nvertex b 2\nvertex c 2\n"
                                "edge a b 3\nedge b c 3\nedge a c 3\n");
  std::string out;
  REQUIRE(run_cli({"analyze", path, "--json"}, &out) == kExitOk);
  nlohmann::json doc = nlohmann::json::parse(out);
  CHECK(doc["hyperbolic"]["value"] == false);
  CHECK(doc["acylindrically_hyperbolic"] == false);
  CHECK(doc["order"] == "infinity");
}

TEST_CASE("cli: lift prints the lifted graph in the input format") {
  std::string path = write_temp("single3.dyer", "vertex a 3\n");
  std::string out;
  REQUIRE(run_cli({"lift", path}, &out) == kExitOk);
  CHECK(out == "vertex a 2\nvertex a' 2\nedge a a' 3\n");
}

TEST_CASE("cli: subcommand answers") {
  std::string z2 = write_temp("z2.dyer", "vertex a inf\nvertex b inf\nedge a b 2\n");
  std::string out;
  CHECK(run_cli({"finite", z2}, &out) == kExitOk);
  CHECK(out == "false\n");
  CHECK(run_cli({"order", z2}, &out) == kExitOk);
  CHECK(out == "infinity\n");
  CHECK(run_cli({"hyperbolic", z2}, &out) == kExitOk);
  CHECK(out == "false\nwitness: infinite pair {a} x {b}\n");
  CHECK(run_cli({"ah", z2}, &out) == kExitOk);
  CHECK(out == "false\n");
  CHECK(run_cli({"abelian", z2}, &out) == kExitOk);
  CHECK(out == "Z x Z\n");
  CHECK(run_cli({"decompose", z2}, &out) == kExitOk);
  CHECK(out == "a\nb\n");

  std::string b2 = write_temp("b2.dyer", "vertex a 2\nvertex b 2\nedge a b 4\n");
  CHECK(run_cli({"order", b2}, &out) == kExitOk);
  CHECK(out == "8\n");
  CHECK(run_cli({"centre", b2}, &out) == kExitOk);
  CHECK(out.find("centre order: 2") != std::string::npos);
}

TEST_CASE("cli: oracle subcommands and the cap exit code") {
  std::string b2 = write_temp("b2.dyer", "vertex a 2\nvertex b 2\nedge a b 4\n");
  std::string out, err;
  CHECK(run_cli({"oracle", "order", b2}, &out) == kExitOk);
  CHECK(out == "8\n");
  CHECK(run_cli({"oracle", "centre", b2}, &out) == kExitOk);
  CHECK(out == "2\n");
  CHECK(run_cli({"oracle", "abelian", b2}, &out) == kExitOk);
  CHECK(out == "4\n");

  std::string f2 = write_temp("f2.dyer", "vertex a inf\nvertex b inf\n");
  CHECK(run_cli({"oracle", "order", f2, "--max-cosets", "500"}, &out, &err) ==
        kExitCapExceeded);
  CHECK(err.find("cap exceeded") != std::string::npos);
  CHECK(run_cli({"oracle", "abelian", f2}, &out) == kExitOk);
  CHECK(out == "infinity\n");
}

TEST_CASE("cli: hyperbolicity cap maps to exit 3") {
  std::string path = write_temp(
      "free3.dyer", "vertex a inf\nvertex b inf\nvertex c inf\n");
  std::string out, err;
  CHECK(run_cli({"hyperbolic", path, "--max-subset-vertices", "2"}, &out,
                &err) == kExitCapExceeded);
}

TEST_CASE("cli: byte-identical reruns") {
  std::string path = write_temp("mixed.dyer",
                                "vertex a 3\nvertex b 2\nvertex c inf\n"
                                "edge a b 2\nedge b c 2\n");
  std::string first, second;
  REQUIRE(run_cli({"analyze", path, "--json"}, &first) == kExitOk);
  REQUIRE(run_cli({"analyze", path, "--json"}, &second) == kExitOk);
  CHECK(first == second);
}

TEST_CASE("corpus: trivial bounds") {
  CorpusBounds bounds;
  bounds.max_vertices = 0;
  CHECK(generate_corpus(bounds).size() == 1);  // the empty graph
  CorpusSummary summary = run_corpus_checks(bounds);
  CHECK(summary.graphs == 1);
  CHECK(summary.ok());
}

TEST_CASE("corpus: one- and two-vertex corpus passes all checks") {
  CorpusBounds bounds;
  bounds.max_vertices = 2;
  std::vector<DyerGraph> corpus = generate_corpus(bounds);
  // n=0: 1; n=1: 5 labels; n=2: unordered label pairs with and without an
  // edge, Dyer-filtered.
  CHECK(corpus.size() > 20);
  CorpusSummary summary = run_corpus_checks(bounds);
  CHECK(summary.graphs == corpus.size());
  CHECK(summary.checks > 0);
  CHECK(summary.ok());
}

TEST_CASE("corpus: generation dedupes by label-preserving isomorphism") {
  CorpusBounds bounds;
  bounds.max_vertices = 2;
  bounds.f_values = {Order::finite(2), Order::finite(3)};
  bounds.m_values = {2};
  std::vector<DyerGraph> corpus = generate_corpus(bounds);
  // n=0: empty; n=1: f=2, f=3; n=2 no edge: {2,2},{2,3},{3,3};
  // n=2 with m=2 edge: {2,2},{2,3},{3,3}  -> 9 total.
  CHECK(corpus.size() == 9);
}

TEST_CASE("cli: corpus-check subcommand") {
  std::string out;
  CHECK(run_cli({"corpus-check", "--max-vertices", "1"}, &out) == kExitOk);
  CHECK(out.find("PASS") == 0);
  CHECK(out.find("0 failures") != std::string::npos);
}
