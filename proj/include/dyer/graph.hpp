#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dyer/order.hpp"

namespace dyer {

// An edge {u, v} with a finite braid label m >= 2. Canonical form has u < v.
struct Edge {
  int u;
  int v;
  int m;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.m == b.m;
  }
};

// A finite simplicial graph with vertex labels f (finite >= 2 or infinity)
// and finite edge labels m >= 2, subject to the Dyer condition: an endpoint
// with f >= 3 forces m = 2 on the edge. Absent edges carry no relation.
// Immutable after construction; vertices are indexed in declaration order.
class DyerGraph {
 public:
  DyerGraph() = default;  // the empty graph (trivial group)

  // Validates and canonicalizes. Throws ValidationError on duplicate names,
  // bad labels, self-loops, repeated edges or Dyer-condition violations.
  static DyerGraph create(std::vector<std::string> names, std::vector<Order> f,
                          std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  Order f(int v) const { return f_.at(v); }

  // Index of a vertex name, or -1 when absent.
  int vertex_index(std::string_view name) const;

  // Edge label between u and v, or 0 when they are not adjacent.
  int bond(int u, int v) const { return bond_[idx(u, v)]; }
  bool adjacent(int u, int v) const { return bond(u, v) != 0; }

  // Edges in canonical order (sorted by endpoint indices).
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const DyerGraph& a, const DyerGraph& b) {
    return a.names_ == b.names_ && a.f_ == b.f_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t idx(int u, int v) const;

  std::vector<std::string> names_;
  std::vector<Order> f_;
  std::vector<Edge> edges_;
  std::vector<int> bond_;  // dense n*n matrix, 0 = not adjacent
  std::unordered_map<std::string, int> index_;
};

// The (V2, Vp, Vinf) split of the vertex set by label: f = 2, finite f >= 3,
// f = infinity. Each list is in declaration order.
struct VertexPartition {
  std::vector<int> v2;
  std::vector<int> vp;
  std::vector<int> vinf;
};

// Parses the .dyer line format. Throws ParseError on syntax problems and
// ValidationError on semantic ones; both carry source positions in the
// message.
DyerGraph parse_graph(std::string_view text);

// Canonical text in the input format; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const DyerGraph& g);

VertexPartition partition_vertices(const DyerGraph& g);

// Subgraph spanned by the vertex indices in t (any order, no duplicates),
// with inherited labels. Vertex order in the result follows declaration
// order of g. Throws ValidationError on bad indices.
DyerGraph induced_subgraph(const DyerGraph& g, const std::vector<int>& t);

// Partition of the vertex set into irreducible components: connected
// components of the non-commutation relation, where u and v are related
// when they are non-adjacent or adjacent with m != 2. Components are
// ordered by smallest contained vertex; members are in declaration order.
std::vector<std::vector<int>> irreducible_components(const DyerGraph& g);

// Same, restricted to the induced subgraph on t. Returned sets contain
// indices of g.
std::vector<std::vector<int>> irreducible_components(const DyerGraph& g,
                                                     const std::vector<int>& t);

}  // namespace dyer
