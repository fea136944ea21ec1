#include "dyer/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "dyer/errors.hpp"

using namespace dyer;

TEST_CASE("presentation_of: power relators") {
  DyerGraph g = parse_graph("vertex a 3");
  Presentation p = presentation_of(g);
  REQUIRE(p.generators == std::vector<std::string>{"a"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == Word{{0, false}, {0, false}, {0, false}});
}

TEST_CASE("presentation_of: braid relator for m = 3") {
  DyerGraph g = parse_graph("vertex a 2\nvertex b 2\nedge a b 3");
  Presentation p = presentation_of(g);
  REQUIRE(p.relators.size() == 3);
  // aba (bab)^-1 = a b a b^- a^- b^-
  Word braid{{0, false}, {1, false}, {0, false},
             {1, true},  {0, true},  {1, true}};
  CHECK(p.relators[2] == braid);
}

TEST_CASE("presentation_of: no relator for f = infinity") {
  DyerGraph g = parse_graph("vertex a inf");
  Presentation p = presentation_of(g);
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
}

TEST_CASE("todd_coxeter: cyclic group") {
  CosetTable t = todd_coxeter(presentation_of(parse_graph("vertex a 3")), 1000);
  REQUIRE(t.complete());
  CHECK(t.coset_count() == 3);
}

TEST_CASE("todd_coxeter: dihedral I2(4)") {
  DyerGraph g = parse_graph("vertex a 2\nvertex b 2\nedge a b 4");
  CosetTable t = todd_coxeter(presentation_of(g), 1000);
  REQUIRE(t.complete());
  CHECK(t.coset_count() == 8);
}

TEST_CASE("todd_coxeter: free group hits the cap") {
  DyerGraph g = parse_graph("vertex a inf\nvertex b inf");
  CosetTable t = todd_coxeter(presentation_of(g), 1000);
  CHECK(t.status() == TableStatus::CapExceeded);
}

TEST_CASE("todd_coxeter: trivial group from the empty graph") {
  CosetTable t = todd_coxeter(presentation_of(DyerGraph()), 10);
  REQUIRE(t.complete());
  CHECK(t.coset_count() == 1);
}

TEST_CASE("brute_order examples") {
  CHECK(brute_order(parse_graph("vertex a 5"), 1000) == 5);
  CHECK(brute_order(parse_graph("vertex a 3\nvertex b 2\nedge a b 2"), 1000) == 6);
  // A3: diagram path a-b-c; the non-adjacent diagram pair carries m = 2.
  CHECK(brute_order(parse_graph("vertex a 2\nvertex b 2\nvertex c 2\n"
                                "edge a b 3\nedge b c 3\nedge a c 2"),
                    1000) == 24);
  CHECK(brute_order(parse_graph("vertex a inf"), 100) == std::nullopt);
}

TEST_CASE("complete tables are transitive permutation actions") {
  for (const char* text : {
           "vertex a 2\nvertex b 2\nedge a b 4",
           "vertex a 3\nvertex b 2\nedge a b 2",
           "vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 4\nedge a c 2",
           "vertex a 5\nvertex b 2\nedge a b 2",
       }) {
    DyerGraph g = parse_graph(text);
    CosetTable t = todd_coxeter(presentation_of(g), 100000);
    REQUIRE(t.complete());
    const std::uint32_t n = static_cast<std::uint32_t>(t.coset_count());
    for (int gen = 0; gen < t.generator_count(); ++gen) {
      std::vector<bool> hit(n + 1, false);
      for (std::uint32_t c = 1; c <= n; ++c) {
        std::uint32_t d = t.apply(c, gen);
        REQUIRE(d >= 1);
        REQUIRE(d <= n);
        CHECK(!hit[d]);
        hit[d] = true;
        // Inverse column undoes the generator column.
        CHECK(t.apply(d, gen, true) == c);
      }
    }
    // Transitivity: breadth-first reach from coset 1 covers everything.
    std::vector<bool> seen(n + 1, false);
    std::vector<std::uint32_t> queue{1};
    seen[1] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int gen = 0; gen < t.generator_count(); ++gen)
        for (bool inv : {false, true}) {
          std::uint32_t d = t.apply(queue[head], gen, inv);
          if (!seen[d]) {
            seen[d] = true;
            queue.push_back(d);
          }
        }
    CHECK(std::count(seen.begin() + 1, seen.end(), true) ==
          static_cast<long>(n));
  }
}

TEST_CASE("enumeration is confluent under relator shuffles") {
  DyerGraph g = parse_graph(
      "vertex a 2\nvertex b 2\nvertex c 2\nedge a b 3\nedge b c 4\nedge a c 2");
  Presentation p = presentation_of(g);
  std::uint64_t expected = todd_coxeter(p, 100000).coset_count();
  CHECK(expected == 48);
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    Presentation shuffled = p;
    std::mt19937 rng(seed);
    std::shuffle(shuffled.relators.begin(), shuffled.relators.end(), rng);
    CosetTable t = todd_coxeter(shuffled, 100000);
    REQUIRE(t.complete());
    CHECK(t.coset_count() == expected);
  }
}

TEST_CASE("table size is invariant under generator reordering") {
  // Same group with the two vertices declared in the other order.
  DyerGraph g1 = parse_graph("vertex a 2\nvertex b 2\nedge a b 4");
  DyerGraph g2 = parse_graph("vertex b 2\nvertex a 2\nedge a b 4");
  CHECK(brute_order(g1, 1000) == brute_order(g2, 1000));
}

TEST_CASE("brute_centre_order examples") {
  auto centre_of = [](const char* text) {
    CosetTable t = todd_coxeter(presentation_of(parse_graph(text)), 100000);
    REQUIRE(t.complete());
    return brute_centre_order(t);
  };
  CHECK(centre_of("vertex a 5") == 5);                                  // Z5
  CHECK(centre_of("vertex a 2\nvertex b 2\nedge a b 3") == 1);          // Sym(3)
  CHECK(centre_of("vertex a 2\nvertex b 2\nedge a b 4") == 2);          // B2
}

TEST_CASE("brute_centre_order rejects incomplete tables") {
  CosetTable t = todd_coxeter(presentation_of(parse_graph("vertex a inf")), 10);
  CHECK_THROWS_AS(brute_centre_order(t), ValidationError);
}

TEST_CASE("brute_abelianisation_order examples") {
  CHECK(brute_abelianisation_order(
            parse_graph("vertex a 2\nvertex b 2\nedge a b 3"), 1000) ==
        GroupOrder::finite(2));
  CHECK(brute_abelianisation_order(
            parse_graph("vertex a 2\nvertex b 2\nedge a b 4"), 1000) ==
        GroupOrder::finite(4));
  CHECK(brute_abelianisation_order(parse_graph("vertex a inf"), 1000) ==
        GroupOrder::infinity());
}

TEST_CASE("todd_coxeter validates input") {
  Presentation p;
  p.generators = {"a"};
  p.relators = {{}};
  CHECK_THROWS_AS(todd_coxeter(p, 10), ValidationError);
  Presentation q;
  q.generators = {"a"};
  q.relators = {{{3, false}}};
  CHECK_THROWS_AS(todd_coxeter(q, 10), ValidationError);
  CHECK_THROWS_AS(todd_coxeter(Presentation{}, 0), ValidationError);
}
