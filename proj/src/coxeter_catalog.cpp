#include "dyer/coxeter_catalog.hpp"

#include <algorithm>
#include <cassert>

#include "dyer/errors.hpp"

namespace dyer {

namespace {

// Compact diagram form used for template matching: a symmetric label matrix
// with 2 on non-edges and 0 encoding an infinity bond.
struct Matrix {
  int n = 0;
  std::vector<std::uint32_t> m;

  std::uint32_t at(int i, int j) const { return m[i * n + j]; }
  void set(int i, int j, std::uint32_t v) {
    m[i * n + j] = v;
    m[j * n + i] = v;
  }
};

Matrix matrix_of(const CoxeterDiagram& d) {
  Matrix mat;
  mat.n = d.rank();
  mat.m.assign(static_cast<std::size_t>(mat.n) * mat.n, 2);
  for (int i = 0; i < mat.n; ++i)
    for (int j = i + 1; j < mat.n; ++j) {
      Order b = d.bond_label(i, j);
      mat.set(i, j, b.is_finite() ? b.finite_value() : 0);
    }
  return mat;
}

struct TemplateEdge {
  int u, v;
  std::uint32_t m;
};

Matrix matrix_from_edges(int n, const std::vector<TemplateEdge>& edges) {
  Matrix mat;
  mat.n = n;
  mat.m.assign(static_cast<std::size_t>(n) * n, 2);
  for (const TemplateEdge& e : edges) mat.set(e.u, e.v, e.m);
  return mat;
}

// Sorted multiset of diagram-edge labels (entries != 2).
std::vector<std::uint32_t> edge_labels(const Matrix& m) {
  std::vector<std::uint32_t> out;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (m.at(i, j) != 2) out.push_back(m.at(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

// Per-vertex sorted incident label lists, used as a matching invariant.
std::vector<std::vector<std::uint32_t>> vertex_signatures(const Matrix& m) {
  std::vector<std::vector<std::uint32_t>> sig(m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j)
      if (j != i && m.at(i, j) != 2) sig[i].push_back(m.at(i, j));
    std::sort(sig[i].begin(), sig[i].end());
  }
  return sig;
}

// Label-preserving isomorphism test by backtracking; both diagrams are
// connected and tiny, so plain search with vertex-signature pruning is fine.
bool isomorphic(const Matrix& a, const Matrix& b) {
  if (a.n != b.n) return false;
  if (edge_labels(a) != edge_labels(b)) return false;
  auto siga = vertex_signatures(a);
  auto sigb = vertex_signatures(b);
  {
    auto sa = siga;
    auto sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const int n = a.n;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto backtrack = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || siga[i] != sigb[cand]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a.at(i, j) == b.at(cand, map[j]);
      if (!ok) continue;
      map[i] = cand;
      used[cand] = true;
      if (self(self, i + 1)) return true;
      used[cand] = false;
      map[i] = -1;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

std::vector<TemplateEdge> path_edges(int n, std::vector<std::uint32_t> labels) {
  assert(static_cast<int>(labels.size()) == n - 1);
  std::vector<TemplateEdge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, labels[i]});
  return e;
}

std::vector<TemplateEdge> all3_path(int n) {
  return path_edges(n, std::vector<std::uint32_t>(n - 1, 3));
}

// Tree with a centre vertex 0 and simple-edge arms of the given lengths.
std::vector<TemplateEdge> star_arms(const std::vector<int>& arms) {
  std::vector<TemplateEdge> e;
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.push_back({prev, next, 3});
      prev = next++;
    }
  }
  return e;
}

struct Candidate {
  DiagramType type;
  Matrix matrix;
};

// All finite and affine templates with exactly n >= 3 vertices.
std::vector<Candidate> candidates_for(int n) {
  std::vector<Candidate> out;
  auto add = [&](DiagramType t, std::vector<TemplateEdge> edges) {
    out.push_back({t, matrix_from_edges(n, edges)});
  };

  // Finite catalog.
  add(FiniteType{FiniteFamily::A, n}, all3_path(n));
  {
    auto labels = std::vector<std::uint32_t>(n - 1, 3);
    labels.back() = 4;
    add(FiniteType{FiniteFamily::B, n}, path_edges(n, labels));
  }
  if (n >= 4) {
    std::vector<TemplateEdge> e{{0, 2, 3}, {1, 2, 3}};
    for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1, 3});
    add(FiniteType{FiniteFamily::D, n}, e);
  }
  if (n == 6) add(FiniteType{FiniteFamily::E6, 6}, star_arms({1, 2, 2}));
  if (n == 7) add(FiniteType{FiniteFamily::E7, 7}, star_arms({1, 2, 3}));
  if (n == 8) add(FiniteType{FiniteFamily::E8, 8}, star_arms({1, 2, 4}));
  if (n == 4) add(FiniteType{FiniteFamily::F4, 4}, path_edges(4, {3, 4, 3}));
  if (n == 3) add(FiniteType{FiniteFamily::H3, 3}, path_edges(3, {5, 3}));
  if (n == 4) add(FiniteType{FiniteFamily::H4, 4}, path_edges(4, {5, 3, 3}));

  // Affine catalog; ~X_(n-1) has n vertices.
  {
    std::vector<TemplateEdge> cycle;
    for (int i = 0; i < n; ++i) cycle.push_back({i, (i + 1) % n, 3});
    add(AffineType{AffineFamily::A, n - 1}, cycle);
  }
  {
    auto labels = std::vector<std::uint32_t>(n - 1, 3);
    labels.front() = 4;
    labels.back() = 4;
    add(AffineType{AffineFamily::C, n - 1}, path_edges(n, labels));
  }
  if (n >= 4) {
    std::vector<TemplateEdge> e{{0, 2, 3}, {1, 2, 3}};
    for (int i = 2; i + 2 < n; ++i) e.push_back({i, i + 1, 3});
    e.push_back({n - 2, n - 1, 4});
    add(AffineType{AffineFamily::B, n - 1}, e);
  }
  if (n >= 5) {
    std::vector<TemplateEdge> e{{0, 2, 3}, {1, 2, 3}};
    for (int i = 2; i + 3 < n; ++i) e.push_back({i, i + 1, 3});
    e.push_back({n - 3, n - 2, 3});
    e.push_back({n - 3, n - 1, 3});
    add(AffineType{AffineFamily::D, n - 1}, e);
  }
  if (n == 7) add(AffineType{AffineFamily::E6, 6}, star_arms({2, 2, 2}));
  if (n == 8) add(AffineType{AffineFamily::E7, 7}, star_arms({1, 3, 3}));
  if (n == 9) add(AffineType{AffineFamily::E8, 8}, star_arms({1, 2, 5}));
  if (n == 5) add(AffineType{AffineFamily::F4, 4}, path_edges(5, {3, 3, 4, 3}));
  if (n == 3) add(AffineType{AffineFamily::G2, 2}, path_edges(3, {6, 3}));
  return out;
}

}  // namespace

CoxeterDiagram::CoxeterDiagram(DyerGraph g) : graph_(std::move(g)) {
  for (int v = 0; v < graph_.vertex_count(); ++v)
    if (graph_.f(v) != Order::finite(2))
      throw ValidationError("Coxeter diagram requires f = 2 on every vertex; f(" +
                            graph_.name(v) + ") = " + graph_.f(v).to_string());
}

bool is_finite_type(const DiagramType& t) {
  return std::holds_alternative<FiniteType>(t);
}

bool is_affine_type(const DiagramType& t) {
  return std::holds_alternative<AffineType>(t);
}

std::string to_string(const FiniteType& t) {
  switch (t.family) {
    case FiniteFamily::A: return "A" + std::to_string(t.rank);
    case FiniteFamily::B: return "B" + std::to_string(t.rank);
    case FiniteFamily::D: return "D" + std::to_string(t.rank);
    case FiniteFamily::E6: return "E6";
    case FiniteFamily::E7: return "E7";
    case FiniteFamily::E8: return "E8";
    case FiniteFamily::F4: return "F4";
    case FiniteFamily::H3: return "H3";
    case FiniteFamily::H4: return "H4";
    case FiniteFamily::I2: return "I2(" + std::to_string(t.m) + ")";
  }
  return "?";
}

std::string to_string(const DiagramType& t) {
  if (const auto* f = std::get_if<FiniteType>(&t)) return to_string(*f);
  if (const auto* a = std::get_if<AffineType>(&t)) {
    switch (a->family) {
      case AffineFamily::A: return "~A" + std::to_string(a->index);
      case AffineFamily::B: return "~B" + std::to_string(a->index);
      case AffineFamily::C: return "~C" + std::to_string(a->index);
      case AffineFamily::D: return "~D" + std::to_string(a->index);
      case AffineFamily::E6: return "~E6";
      case AffineFamily::E7: return "~E7";
      case AffineFamily::E8: return "~E8";
      case AffineFamily::F4: return "~F4";
      case AffineFamily::G2: return "~G2";
      case AffineFamily::I1: return "~I1";
    }
  }
  return "infinite";
}

DiagramType recognize_irreducible(const CoxeterDiagram& d) {
  const int n = d.rank();
  if (n == 0 || irreducible_components(d.graph()).size() != 1)
    throw ValidationError("recognize_irreducible: diagram is not irreducible");
  if (n == 1) return FiniteType{FiniteFamily::A, 1};
  if (n == 2) {
    Order b = d.bond_label(0, 1);
    if (b.is_infinite()) return AffineType{AffineFamily::I1, 1};
    switch (b.finite_value()) {
      case 3: return FiniteType{FiniteFamily::A, 2};
      case 4: return FiniteType{FiniteFamily::B, 2};
      default: return FiniteType{FiniteFamily::I2, 2, static_cast<int>(b.finite_value())};
    }
  }
  Matrix m = matrix_of(d);
  // No finite or affine template of rank >= 3 carries an infinity bond.
  for (std::uint32_t v : m.m)
    if (v == 0) return OtherInfiniteType{};
  for (const Candidate& c : candidates_for(n))
    if (isomorphic(m, c.matrix)) return c.type;
  return OtherInfiniteType{};
}

bool is_finite_coxeter(const CoxeterDiagram& d) {
  for (const auto& comp : irreducible_components(d.graph())) {
    CoxeterDiagram sub(induced_subgraph(d.graph(), comp));
    if (!is_finite_type(recognize_irreducible(sub))) return false;
  }
  return true;
}

bool is_affine_coxeter(const CoxeterDiagram& d) {
  bool any_affine = false;
  for (const auto& comp : irreducible_components(d.graph())) {
    CoxeterDiagram sub(induced_subgraph(d.graph(), comp));
    DiagramType t = recognize_irreducible(sub);
    if (is_affine_type(t))
      any_affine = true;
    else if (!is_finite_type(t))
      return false;
  }
  return any_affine;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

std::uint64_t pow2(int n) {
  if (n >= 64) throw std::overflow_error("group order exceeds 64-bit range");
  return std::uint64_t{1} << n;
}

void check_finite_type(const FiniteType& t) {
  bool ok = true;
  switch (t.family) {
    case FiniteFamily::A: ok = t.rank >= 1; break;
    case FiniteFamily::B: ok = t.rank >= 2; break;
    case FiniteFamily::D: ok = t.rank >= 4; break;
    case FiniteFamily::E6: ok = t.rank == 6; break;
    case FiniteFamily::E7: ok = t.rank == 7; break;
    case FiniteFamily::E8: ok = t.rank == 8; break;
    case FiniteFamily::F4: ok = t.rank == 4; break;
    case FiniteFamily::H3: ok = t.rank == 3; break;
    case FiniteFamily::H4: ok = t.rank == 4; break;
    case FiniteFamily::I2: ok = t.rank == 2 && t.m >= 3; break;
  }
  if (!ok) throw ValidationError("malformed finite type " + to_string(t));
}

}  // namespace

std::uint64_t finite_order(const FiniteType& t) {
  check_finite_type(t);
  switch (t.family) {
    case FiniteFamily::A: return factorial(t.rank + 1);
    case FiniteFamily::B: return checked_mul(pow2(t.rank), factorial(t.rank));
    case FiniteFamily::D: return checked_mul(pow2(t.rank - 1), factorial(t.rank));
    case FiniteFamily::E6: return 51840;
    case FiniteFamily::E7: return 2903040;
    case FiniteFamily::E8: return 696729600;
    case FiniteFamily::F4: return 1152;
    case FiniteFamily::H3: return 120;
    case FiniteFamily::H4: return 14400;
    case FiniteFamily::I2: return 2 * static_cast<std::uint64_t>(t.m);
  }
  throw std::logic_error("unreachable");
}

FiniteTypeFacts centre_facts(const FiniteType& t) {
  check_finite_type(t);
  bool central = false;
  switch (t.family) {
    case FiniteFamily::A: central = t.rank == 1; break;
    case FiniteFamily::B: central = true; break;
    case FiniteFamily::D: central = t.rank % 2 == 0; break;
    case FiniteFamily::E6: central = false; break;
    case FiniteFamily::E7:
    case FiniteFamily::E8:
    case FiniteFamily::F4:
    case FiniteFamily::H3:
    case FiniteFamily::H4: central = true; break;
    case FiniteFamily::I2: central = t.m % 2 == 0; break;
  }
  return {finite_order(t), central};
}

}  // namespace dyer
