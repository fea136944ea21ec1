#include "dyer/lift.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyer/errors.hpp"

namespace dyer {

namespace {

// Lifted index of each vertex's twin (-1 for f = 2 vertices): twins are
// appended after the originals, in declaration order.
std::vector<int> prime_indices(const DyerGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> prime_of(n, -1);
  int next = n;
  for (int v = 0; v < n; ++v)
    if (g.f(v) != Order::finite(2)) prime_of[v] = next++;
  return prime_of;
}

}  // namespace

LiftResult lift_graph(const DyerGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> prime_of = prime_indices(g);

  std::vector<std::string> names(g.names());
  std::vector<Order> f(n, Order::finite(2));
  for (int v = 0; v < n; ++v) {
    if (prime_of[v] < 0) continue;
    names.push_back(g.name(v) + kPrimeMarker);
    f.push_back(Order::finite(2));
  }

  std::vector<Edge> edges(g.edges());
  for (int v = 0; v < n; ++v) {
    int vp = prime_of[v];
    if (vp < 0) continue;
    // {v, v'} carries f(v) when finite; v in Vinf gets no such edge.
    if (g.f(v).is_finite())
      edges.push_back({v, vp, static_cast<int>(g.f(v).finite_value())});
    // v' commutes with every vertex other than v and itself.
    for (int u = 0; u < n; ++u)
      if (u != v) edges.push_back({u, vp, 2});
    for (int w = 0; w < v; ++w)
      if (prime_of[w] >= 0) edges.push_back({prime_of[w], vp, 2});
  }

  LiftResult r;
  r.k = static_cast<int>(names.size()) - n;
  r.prime_of = std::move(prime_of);
  r.lifted = DyerGraph::create(std::move(names), std::move(f), std::move(edges));
  return r;
}

std::vector<int> lift_subset(const DyerGraph& g, const std::vector<int>& t) {
  const int n = g.vertex_count();
  std::vector<int> prime_of = prime_indices(g);
  std::vector<int> out(t);
  for (int v : out)
    if (v < 0 || v >= n) throw ValidationError("unknown vertex in subset");
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ValidationError("duplicate vertex in subset");
  const std::size_t originals = out.size();
  for (std::size_t i = 0; i < originals; ++i)
    if (prime_of[out[i]] >= 0) out.push_back(prime_of[out[i]]);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t index_factor(const DyerGraph& g) {
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v) k += g.f(v) != Order::finite(2);
  if (k >= 64) throw std::overflow_error("index factor exceeds 64-bit range");
  return std::uint64_t{1} << k;
}

}  // namespace dyer
