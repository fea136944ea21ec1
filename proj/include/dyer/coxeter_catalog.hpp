#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "dyer/graph.hpp"
#include "dyer/order.hpp"

namespace dyer {

// A Dyer graph with f == 2 everywhere, viewed through the Coxeter-graph
// convention: pairs with m = 2 are non-edges of the diagram, and pairs that
// are non-adjacent in the Dyer graph are diagram edges labelled infinity.
class CoxeterDiagram {
 public:
  explicit CoxeterDiagram(DyerGraph g);

  const DyerGraph& graph() const { return graph_; }
  int rank() const { return graph_.vertex_count(); }

  // Coxeter matrix entry: m(u,v) when adjacent, infinity otherwise.
  Order bond_label(int u, int v) const {
    int b = graph_.bond(u, v);
    return b == 0 ? Order::infinity() : Order::finite(b);
  }

 private:
  DyerGraph graph_;
};

enum class FiniteFamily { A, B, D, E6, E7, E8, F4, H3, H4, I2 };
enum class AffineFamily { A, B, C, D, E6, E7, E8, F4, G2, I1 };

// An irreducible finite Coxeter type. rank is the number of vertices; m is
// the dihedral parameter, used by I2 only. The B and C diagram families
// coincide and are reported as B; G2 is reported as I2(6).
struct FiniteType {
  FiniteFamily family;
  int rank;
  int m = 0;

  friend bool operator==(const FiniteType& a, const FiniteType& b) {
    return a.family == b.family && a.rank == b.rank && a.m == b.m;
  }
};

// An irreducible affine Coxeter type ~X_index; the diagram has index + 1
// vertices (~I1 is the two-generator infinite dihedral diagram).
struct AffineType {
  AffineFamily family;
  int index;

  int rank() const { return index + 1; }

  friend bool operator==(const AffineType& a, const AffineType& b) {
    return a.family == b.family && a.index == b.index;
  }
};

// Irreducible, infinite, and neither finite nor affine type.
struct OtherInfiniteType {
  friend bool operator==(OtherInfiniteType, OtherInfiniteType) { return true; }
};

using DiagramType = std::variant<FiniteType, AffineType, OtherInfiniteType>;

bool is_finite_type(const DiagramType& t);
bool is_affine_type(const DiagramType& t);
std::string to_string(const DiagramType& t);
std::string to_string(const FiniteType& t);

// Matches an irreducible diagram against the finite and affine catalogs by
// exact template isomorphism. Throws ValidationError when the diagram is
// not irreducible.
DiagramType recognize_irreducible(const CoxeterDiagram& d);

// True iff every irreducible component recognizes as a finite type.
bool is_finite_coxeter(const CoxeterDiagram& d);

// True iff every component is finite or affine type and at least one is
// affine.
bool is_affine_coxeter(const CoxeterDiagram& d);

// |W| for a finite type: A_n -> (n+1)!, B_n -> 2^n n!, D_n -> 2^(n-1) n!,
// I2(m) -> 2m, and the exceptional constants.
std::uint64_t finite_order(const FiniteType& t);

struct FiniteTypeFacts {
  std::uint64_t order;
  bool has_central_longest_element;
};

// Centre data for a finite type: the longest element is central exactly for
// A1, B_n (n>=2), D_2n, E7, E8, F4, H3, H4 and I2(even m).
FiniteTypeFacts centre_facts(const FiniteType& t);

}  // namespace dyer
