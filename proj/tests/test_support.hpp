#pragma once

#include <string>
#include <vector>

#include "dyer/graph.hpp"

namespace dyer::testing {

struct DiagramEdge {
  int u, v, m;
};

// Builds the Dyer graph of a Coxeter diagram on n vertices (f = 2
// everywhere): listed pairs carry their label, pairs labelled infinity are
// left non-adjacent, and every unlisted pair gets a commuting m = 2 edge.
// Labels use 0 for infinity.
inline DyerGraph coxeter_graph(int n, const std::vector<DiagramEdge>& diagram) {
  std::vector<std::string> names;
  std::vector<Order> f;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    f.push_back(Order::finite(2));
  }
  std::vector<std::vector<int>> bond(n, std::vector<int>(n, 2));
  for (const DiagramEdge& e : diagram) {
    bond[e.u][e.v] = e.m;
    bond[e.v][e.u] = e.m;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bond[i][j] != 0) edges.push_back({i, j, bond[i][j]});
  return DyerGraph::create(std::move(names), std::move(f), std::move(edges));
}

// Diagram path with the given consecutive labels, e.g. {3, 4} is B3.
inline DyerGraph coxeter_path(const std::vector<int>& labels) {
  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    edges.push_back({static_cast<int>(i), static_cast<int>(i) + 1, labels[i]});
  return coxeter_graph(static_cast<int>(labels.size()) + 1, edges);
}

}  // namespace dyer::testing
