#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dyer/graph.hpp"

namespace dyer {

// Bounds for exhaustive corpus generation: every Dyer graph with at most
// max_vertices vertices, vertex labels drawn from f_values and edge labels
// from m_values, one representative per label-preserving isomorphism class.
struct CorpusBounds {
  int max_vertices = 4;
  std::vector<Order> f_values = {Order::finite(2), Order::finite(3),
                                 Order::finite(4), Order::finite(5),
                                 Order::infinity()};
  std::vector<int> m_values = {2, 3, 4};
  std::uint64_t max_cosets = 200000;   // oracle enumeration cap
  std::uint64_t order_limit = 5000;    // agreement checks use instances up to this
};

std::vector<DyerGraph> generate_corpus(const CorpusBounds& bounds);

struct CorpusSummary {
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  // Serialized first counterexample and the check it failed, when any.
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

// Runs the classifier-vs-oracle agreement suite over the generated corpus:
// finiteness/order, centre, abelianisation, the lift order identity, the
// component-lifting identity, the structural centre statement, the
// cross-criterion consistency between hyperbolicity and acylindrical
// hyperbolicity, the affine-lift equivalence for irreducible graphs, and
// report determinism. Progress lines go to log when given.
CorpusSummary run_corpus_checks(const CorpusBounds& bounds,
                                std::ostream* log = nullptr);

}  // namespace dyer
