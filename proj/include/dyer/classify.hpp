#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyer/coxeter_catalog.hpp"
#include "dyer/graph.hpp"
#include "dyer/order.hpp"

namespace dyer {

// Group family detected from the labelling, most specific tag first:
// f == 2 everywhere is a Coxeter group, f == infinity everywhere a
// right-angled Artin group, all m = 2 a graph product of cyclic groups.
enum class Family {
  CoxeterGroup,
  RightAngledArtinGroup,
  GraphProductOfCyclics,
  GeneralDyer,
};

std::string to_string(Family f);

// Centre of one irreducible component: trivial, the full cyclic group of a
// single vertex, or the order-2 subgroup generated by the longest element of
// a finite Coxeter component.
struct CentreFactor {
  enum class Kind { Trivial, CyclicFull, LongestElementOrder2 };

  std::vector<int> component;
  Kind kind;
  GroupOrder order;
  std::optional<FiniteType> type;  // set for LongestElementOrder2
};

struct CentreDescription {
  std::vector<CentreFactor> factors;  // one per irreducible component
  GroupOrder total_order;
};

// One cyclic factor of the abelianisation: the class of vertices merged by
// odd-m edges, contributing Z_f (all members of a merged class share f = 2).
struct AbelianisationFactor {
  Order order;
  std::vector<int> vertices;
};

struct AbelianisationDescription {
  std::vector<AbelianisationFactor> factors;

  GroupOrder total_order() const;
};

// Evidence for a negative hyperbolicity answer: either a vertex subset
// inducing an irreducible affine diagram of rank >= 3, or two disjoint
// infinite subsets joined completely by m = 2 edges.
struct HyperbolicityWitness {
  enum class Kind { AffineSubset, InfinitePair };

  Kind kind;
  std::vector<int> subset;         // AffineSubset
  std::vector<int> part1, part2;   // InfinitePair
};

struct HyperbolicityResult {
  bool hyperbolic;
  std::optional<HyperbolicityWitness> witness;
};

struct ClassifyOptions {
  // Largest infinite-component size for which the hyperbolicity subset
  // enumeration is attempted; beyond it a CapExceededError is thrown.
  int max_subset_vertices = 20;
};

// Finiteness via the lift: D(g) is finite iff the lifted Coxeter group is.
bool dyer_is_finite(const DyerGraph& g);

// Group order: product of the lifted components' orders divided by 2^k.
GroupOrder dyer_order(const DyerGraph& g);

// Centre, one factor per irreducible component: a single vertex contributes
// its full cyclic group; a multi-vertex component with some f != 2 is
// centreless; a Coxeter component contributes the longest element exactly
// for the finite types that have it central.
CentreDescription dyer_centre(const DyerGraph& g);

// Union-find over vertices merging endpoints of every odd-m edge; one
// cyclic factor per class.
AbelianisationDescription abelianisation(const DyerGraph& g);

Family classify_family(const DyerGraph& g);

// Gromov hyperbolicity: at most one infinite component, and that component
// has no parabolic that is irreducible affine of rank >= 3 nor one that
// splits into two infinite factors.
HyperbolicityResult dyer_is_hyperbolic(const DyerGraph& g,
                                       const ClassifyOptions& options = {});

// Acylindrical hyperbolicity: exactly one infinite component, and it is
// neither Z (a single f = infinity vertex) nor an affine Coxeter group.
bool dyer_is_acyl_hyperbolic(const DyerGraph& g);

struct AnalysisReport {
  DyerGraph graph;
  Family family;
  std::vector<std::vector<int>> components;
  bool finite;
  GroupOrder order;
  CentreDescription centre;
  AbelianisationDescription abelianisation;
  HyperbolicityResult hyperbolicity;
  bool acylindrically_hyperbolic;
};

AnalysisReport analyze(const DyerGraph& g, const ClassifyOptions& options = {});

}  // namespace dyer
