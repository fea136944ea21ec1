#pragma once

#include <cstdint>
#include <vector>

#include "dyer/graph.hpp"

namespace dyer {

// Marker appended to a vertex name to form its primed twin. Not permitted by
// the input format, so lifted names never collide with input names.
inline constexpr char kPrimeMarker = '\'';

// The Coxeter graph associated with a Dyer graph: every vertex keeps f = 2,
// each v with f(v) != 2 gains a twin v' that commutes with everything except
// v, and {v, v'} is labelled f(v) when f(v) is finite (no edge when f(v) is
// infinity). The Dyer group embeds in the lifted Coxeter group with index
// 2^k.
struct LiftResult {
  DyerGraph lifted;
  // prime_of[v] is the lifted index of v's twin, or -1 for v with f(v) = 2.
  std::vector<int> prime_of;
  int k;  // |Vp u Vinf|
};

LiftResult lift_graph(const DyerGraph& g);

// T^ = T u {v' | v in T with f(v) != 2}, as indices into lift_graph(g).lifted.
// Original vertices keep their indices in the lift.
std::vector<int> lift_subset(const DyerGraph& g, const std::vector<int>& t);

// 2^|Vp u Vinf|, the index of the Dyer group in the lifted Coxeter group.
std::uint64_t index_factor(const DyerGraph& g);

}  // namespace dyer
