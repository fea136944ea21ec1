#include "dyer/lift.hpp"

#include <random>

#include "doctest.h"
#include "dyer/errors.hpp"
#include "dyer/oracle.hpp"
#include "test_support.hpp"

using namespace dyer;

namespace {

DyerGraph random_graph(std::mt19937& rng, int max_vertices = 5) {
  std::uniform_int_distribution<int> nv(0, max_vertices);
  const int n = nv(rng);
  std::vector<std::string> names;
  std::vector<Order> f;
  std::uniform_int_distribution<int> fpick(0, 4);
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    int c = fpick(rng);
    f.push_back(c == 4 ? Order::infinity() : Order::finite(2 + c));
  }
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> epick(0, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int c = epick(rng);
      if (c == 0) continue;
      bool forced = !(f[i] == Order::finite(2)) || !(f[j] == Order::finite(2));
      edges.push_back({i, j, forced ? 2 : c + 1});
    }
  return DyerGraph::create(std::move(names), std::move(f), std::move(edges));
}

}  // namespace

TEST_CASE("lift: single vertex with finite f gets a labelled twin edge") {
  DyerGraph g = parse_graph("vertex a 3");
  LiftResult r = lift_graph(g);
  CHECK(r.k == 1);
  CHECK(r.lifted.vertex_count() == 2);
  CHECK(r.lifted.name(1) == "a'");
  CHECK(r.lifted.bond(0, 1) == 3);
  CHECK(r.lifted.f(0) == Order::finite(2));
  CHECK(r.lifted.f(1) == Order::finite(2));
}

TEST_CASE("lift: single vertex with f = infinity gets no twin edge") {
  DyerGraph g = parse_graph("vertex a inf");
  LiftResult r = lift_graph(g);
  CHECK(r.k == 1);
  CHECK(r.lifted.vertex_count() == 2);
  CHECK_FALSE(r.lifted.adjacent(0, 1));
}

TEST_CASE("lift: Coxeter graphs are fixed") {
  DyerGraph g = parse_graph("vertex a 2\nvertex b 2\nedge a b 5");
  LiftResult r = lift_graph(g);
  CHECK(r.k == 0);
  CHECK(r.lifted == g);
  CHECK(index_factor(g) == 1);
}

TEST_CASE("lift: twins commute with everything else") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    DyerGraph g = random_graph(rng);
    LiftResult r = lift_graph(g);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
      int vp = r.prime_of[v];
      if (vp < 0) {
        CHECK(g.f(v) == Order::finite(2));
        continue;
      }
      if (g.f(v).is_infinite())
        CHECK_FALSE(r.lifted.adjacent(v, vp));
      else
        CHECK(r.lifted.bond(v, vp) == static_cast<int>(g.f(v).finite_value()));
      for (int u = 0; u < r.lifted.vertex_count(); ++u) {
        if (u == v || u == vp) continue;
        CHECK(r.lifted.bond(u, vp) == 2);
      }
    }
    // Original bonds survive unchanged.
    for (const Edge& e : g.edges()) CHECK(r.lifted.bond(e.u, e.v) == e.m);
    CHECK(index_factor(g) == (std::uint64_t{1} << r.k));
  }
}

TEST_CASE("lift_subset examples") {
  DyerGraph g = parse_graph("vertex a 2\nvertex b inf\nvertex c 5");
  CHECK(lift_subset(g, {}).empty());
  LiftResult r = lift_graph(g);
  CHECK(lift_subset(g, {2}) == std::vector<int>{2, r.prime_of[2]});
  CHECK(lift_subset(g, {0, 1}) == std::vector<int>{0, 1, r.prime_of[1]});
  CHECK_THROWS_AS(lift_subset(g, {7}), ValidationError);
}

TEST_CASE("lift commutes with induced subgraphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    DyerGraph g = random_graph(rng);
    std::vector<int> t;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (rng() % 2) t.push_back(v);
    DyerGraph lhs = lift_graph(induced_subgraph(g, t)).lifted;
    LiftResult lifted = lift_graph(g);
    DyerGraph rhs = induced_subgraph(lifted.lifted, lift_subset(g, t));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("components of the lift are the lifted components") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    DyerGraph g = random_graph(rng);
    LiftResult r = lift_graph(g);
    std::vector<std::vector<int>> expected;
    for (const auto& comp : irreducible_components(g))
      expected.push_back(lift_subset(g, comp));
    CHECK(irreducible_components(r.lifted) == expected);
  }
}

TEST_CASE("index_factor examples") {
  CHECK(index_factor(parse_graph("vertex a 2\nvertex b 2\nedge a b 3")) == 1);
  CHECK(index_factor(parse_graph("vertex a 5")) == 2);
  CHECK(index_factor(parse_graph("vertex a 3\nvertex b inf\nvertex c 2")) == 4);
}

TEST_CASE("lift preserves order up to the index factor") {
  // |W(lift)| = |D| * 2^k on small finite instances, via the oracle.
  for (const char* text : {
           "vertex a 5",
           "vertex a 3\nvertex b 2\nedge a b 2",
           "vertex a 3\nvertex b 3\nedge a b 2",
           "vertex a 2\nvertex b 2\nedge a b 4",
           "vertex a 3\nvertex b 2\nvertex c 2\nedge a b 2\nedge b c 3\nedge a c 2",
       }) {
    DyerGraph g = parse_graph(text);
    auto base = brute_order(g, 20000);
    REQUIRE(base.has_value());
    auto lifted = brute_order(lift_graph(g).lifted, 200000);
    REQUIRE(lifted.has_value());
    CHECK(*lifted == *base * index_factor(g));
  }
}
