#include "dyer/classify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

#include "dyer/errors.hpp"
#include "dyer/lift.hpp"

namespace dyer {

std::string to_string(Family f) {
  switch (f) {
    case Family::CoxeterGroup: return "coxeter_group";
    case Family::RightAngledArtinGroup: return "right_angled_artin_group";
    case Family::GraphProductOfCyclics: return "graph_product_of_cyclics";
    case Family::GeneralDyer: return "general_dyer";
  }
  return "?";
}

GroupOrder AbelianisationDescription::total_order() const {
  std::uint64_t total = 1;
  for (const AbelianisationFactor& f : factors) {
    if (f.order.is_infinite()) return GroupOrder::infinity();
    total = checked_mul(total, f.order.finite_value());
  }
  return GroupOrder::finite(total);
}

bool dyer_is_finite(const DyerGraph& g) {
  return is_finite_coxeter(CoxeterDiagram(lift_graph(g).lifted));
}

GroupOrder dyer_order(const DyerGraph& g) {
  LiftResult lift = lift_graph(g);
  unsigned __int128 product = 1;
  for (const auto& comp : irreducible_components(lift.lifted)) {
    DiagramType t =
        recognize_irreducible(CoxeterDiagram(induced_subgraph(lift.lifted, comp)));
    const FiniteType* ft = std::get_if<FiniteType>(&t);
    if (ft == nullptr) return GroupOrder::infinity();
    product *= finite_order(*ft);
    if (product > (unsigned __int128)1 << 120)
      throw std::overflow_error("group order exceeds supported range");
  }
  std::uint64_t divisor = index_factor(g);
  if (product % divisor != 0)
    throw std::logic_error("lifted order is not divisible by the index factor");
  product /= divisor;
  if (product > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("group order exceeds 64-bit range");
  return GroupOrder::finite(static_cast<std::uint64_t>(product));
}

namespace {

bool all_f2(const DyerGraph& g, const std::vector<int>& verts) {
  return std::all_of(verts.begin(), verts.end(),
                     [&](int v) { return g.f(v) == Order::finite(2); });
}

CentreFactor centre_of_component(const DyerGraph& g, const std::vector<int>& comp) {
  CentreFactor factor;
  factor.component = comp;
  if (comp.size() == 1) {
    Order f = g.f(comp[0]);
    factor.kind = CentreFactor::Kind::CyclicFull;
    factor.order = f.is_finite() ? GroupOrder::finite(f.finite_value())
                                 : GroupOrder::infinity();
    return factor;
  }
  if (!all_f2(g, comp)) {
    factor.kind = CentreFactor::Kind::Trivial;
    factor.order = GroupOrder::finite(1);
    return factor;
  }
  DiagramType t =
      recognize_irreducible(CoxeterDiagram(induced_subgraph(g, comp)));
  const FiniteType* ft = std::get_if<FiniteType>(&t);
  if (ft != nullptr && centre_facts(*ft).has_central_longest_element) {
    factor.kind = CentreFactor::Kind::LongestElementOrder2;
    factor.order = GroupOrder::finite(2);
    factor.type = *ft;
  } else {
    factor.kind = CentreFactor::Kind::Trivial;
    factor.order = GroupOrder::finite(1);
  }
  return factor;
}

}  // namespace

CentreDescription dyer_centre(const DyerGraph& g) {
  CentreDescription centre;
  bool infinite = false;
  std::uint64_t total = 1;
  for (const auto& comp : irreducible_components(g)) {
    CentreFactor factor = centre_of_component(g, comp);
    if (factor.order.is_infinite())
      infinite = true;
    else
      total = checked_mul(total, factor.order.finite_value());
    centre.factors.push_back(std::move(factor));
  }
  centre.total_order =
      infinite ? GroupOrder::infinity() : GroupOrder::finite(total);
  return centre;
}

AbelianisationDescription abelianisation(const DyerGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (e.m % 2 == 0) continue;
    int ru = find(e.u), rv = find(e.v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  AbelianisationDescription out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.factors.size());
      out.factors.push_back({g.f(v), {}});
    }
    out.factors[slot[r]].vertices.push_back(v);
  }
  return out;
}

Family classify_family(const DyerGraph& g) {
  bool all_2 = true, all_inf = true, all_m2 = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    all_2 = all_2 && g.f(v) == Order::finite(2);
    all_inf = all_inf && g.f(v).is_infinite();
  }
  for (const Edge& e : g.edges()) all_m2 = all_m2 && e.m == 2;
  if (all_2) return Family::CoxeterGroup;
  if (all_inf) return Family::RightAngledArtinGroup;
  if (all_m2) return Family::GraphProductOfCyclics;
  return Family::GeneralDyer;
}

namespace {

// Finiteness of induced parabolics, memoized by vertex bitmask over one
// component's vertex list.
class FinitenessMemo {
 public:
  FinitenessMemo(const DyerGraph& g, std::vector<int> verts)
      : graph_(g), verts_(std::move(verts)) {}

  bool is_finite(std::uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    bool result = dyer_is_finite(induced_subgraph(graph_, subset(mask)));
    memo_.emplace(mask, result);
    return result;
  }

  std::vector<int> subset(std::uint64_t mask) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < verts_.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) out.push_back(verts_[i]);
    return out;
  }

 private:
  const DyerGraph& graph_;
  std::vector<int> verts_;
  std::map<std::uint64_t, bool> memo_;
};

}  // namespace

HyperbolicityResult dyer_is_hyperbolic(const DyerGraph& g,
                                       const ClassifyOptions& options) {
  std::vector<std::vector<int>> components = irreducible_components(g);
  std::vector<std::vector<int>> infinite;
  for (const auto& comp : components) {
    if (!dyer_is_finite(induced_subgraph(g, comp))) infinite.push_back(comp);
    if (infinite.size() == 2) {
      HyperbolicityWitness w;
      w.kind = HyperbolicityWitness::Kind::InfinitePair;
      w.part1 = infinite[0];
      w.part2 = infinite[1];
      return {false, w};
    }
  }
  if (infinite.empty()) return {true, std::nullopt};

  const std::vector<int>& comp = infinite[0];
  if (static_cast<int>(comp.size()) > options.max_subset_vertices)
    throw CapExceededError(
        "hyperbolicity subset enumeration cap exceeded: component has " +
        std::to_string(comp.size()) + " vertices, cap is " +
        std::to_string(options.max_subset_vertices));

  // Clause (a): a subset of V2 inducing an irreducible affine diagram of
  // rank >= 3. Subsets are scanned in increasing bitmask order.
  std::vector<int> v2;
  for (int v : comp)
    if (g.f(v) == Order::finite(2)) v2.push_back(v);
  if (v2.size() >= 3) {
    const std::uint64_t limit = std::uint64_t{1} << v2.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (std::popcount(mask) < 3) continue;
      std::vector<int> t;
      for (std::size_t i = 0; i < v2.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) t.push_back(v2[i]);
      if (irreducible_components(g, t).size() != 1) continue;
      DiagramType dt =
          recognize_irreducible(CoxeterDiagram(induced_subgraph(g, t)));
      if (is_affine_type(dt)) {
        HyperbolicityWitness w;
        w.kind = HyperbolicityWitness::Kind::AffineSubset;
        w.subset = t;
        return {false, w};
      }
    }
  }

  // Clause (b): a subset whose induced subgraph has two infinite
  // irreducible components, i.e. D_T = D_T1 x D_T2 with both infinite.
  FinitenessMemo memo(g, comp);
  const std::uint64_t limit = std::uint64_t{1} << comp.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<int> t = memo.subset(mask);
    std::vector<std::vector<int>> parts = irreducible_components(g, t);
    if (parts.size() < 2) continue;
    std::vector<const std::vector<int>*> infinite_parts;
    for (const auto& part : parts) {
      std::uint64_t part_mask = 0;
      for (int v : part) {
        auto pos = std::find(comp.begin(), comp.end(), v) - comp.begin();
        part_mask |= std::uint64_t{1} << pos;
      }
      if (!memo.is_finite(part_mask)) infinite_parts.push_back(&part);
      if (infinite_parts.size() == 2) {
        HyperbolicityWitness w;
        w.kind = HyperbolicityWitness::Kind::InfinitePair;
        w.part1 = *infinite_parts[0];
        w.part2 = *infinite_parts[1];
        return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

bool dyer_is_acyl_hyperbolic(const DyerGraph& g) {
  std::vector<std::vector<int>> infinite;
  for (const auto& comp : irreducible_components(g))
    if (!dyer_is_finite(induced_subgraph(g, comp))) {
      infinite.push_back(comp);
      if (infinite.size() > 1) return false;
    }
  if (infinite.size() != 1) return false;
  const std::vector<int>& comp = infinite[0];
  // Z: a single generator of infinite order.
  if (comp.size() == 1 && g.f(comp[0]).is_infinite()) return false;
  // An affine Coxeter component (including type ~I1).
  if (all_f2(g, comp)) {
    DiagramType t =
        recognize_irreducible(CoxeterDiagram(induced_subgraph(g, comp)));
    if (is_affine_type(t)) return false;
  }
  return true;
}

AnalysisReport analyze(const DyerGraph& g, const ClassifyOptions& options) {
  AnalysisReport report;
  report.graph = g;
  report.family = classify_family(g);
  report.components = irreducible_components(g);
  report.order = dyer_order(g);
  report.finite = report.order.is_finite();
  report.centre = dyer_centre(g);
  report.abelianisation = abelianisation(g);
  report.hyperbolicity = dyer_is_hyperbolic(g, options);
  report.acylindrically_hyperbolic = dyer_is_acyl_hyperbolic(g);
  return report;
}

}  // namespace dyer
