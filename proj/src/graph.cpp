#include "dyer/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "dyer/errors.hpp"

namespace dyer {

namespace {

bool valid_input_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::uint32_t parse_label(const Token& tok, int line_no, const char* what) {
  std::uint32_t value = 0;
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(std::string("expected an integer ") + what + ", got '" +
                         std::string(tok.text) + "'",
                     line_no, tok.column);
  return value;
}

}  // namespace

std::size_t DyerGraph::idx(int u, int v) const {
  return static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v);
}

int DyerGraph::vertex_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

DyerGraph DyerGraph::create(std::vector<std::string> names, std::vector<Order> f,
                            std::vector<Edge> edges) {
  if (names.size() != f.size())
    throw ValidationError("vertex and label lists differ in length");
  DyerGraph g;
  g.names_ = std::move(names);
  g.f_ = std::move(f);
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    if (g.names_[i].empty())
      throw ValidationError("empty vertex name");
    if (!g.index_.emplace(g.names_[i], i).second)
      throw ValidationError("duplicate vertex '" + g.names_[i] + "'");
  }
  g.bond_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ValidationError("edge endpoint out of range");
    if (e.u == e.v)
      throw ValidationError("self-loop at vertex '" + g.names_[e.u] + "'");
    if (e.m < 2) throw ValidationError("edge label must be >= 2");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (g.bond_[g.idx(e.u, e.v)] != 0)
      throw ValidationError("repeated edge {" + g.names_[e.u] + ", " +
                            g.names_[e.v] + "}");
    for (int w : {e.u, e.v}) {
      Order fw = g.f_[w];
      if ((fw.is_infinite() || fw.finite_value() >= 3) && e.m != 2)
        throw ValidationError("Dyer-condition violation: f(" + g.names_[w] +
                              ") >= 3 forces m = 2 on edge {" + g.names_[e.u] +
                              ", " + g.names_[e.v] + "}");
    }
    g.bond_[g.idx(e.u, e.v)] = e.m;
    g.bond_[g.idx(e.v, e.u)] = e.m;
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return g;
}

DyerGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Order> f;
  struct PendingEdge {
    std::string u, v;
    int m;
    int line;
    int column;
  };
  std::vector<PendingEdge> pending;
  std::unordered_map<std::string, int> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (toks[0].text == "vertex") {
      if (toks.size() != 3)
        throw ParseError("expected 'vertex <name> <f>'", line_no, toks[0].column);
      if (!valid_input_name(toks[1].text))
        throw ParseError("invalid vertex name '" + std::string(toks[1].text) +
                             "' (want [A-Za-z0-9_]+)",
                         line_no, toks[1].column);
      std::string name(toks[1].text);
      if (seen.count(name))
        throw ValidationError("duplicate vertex '" + name + "' (line " +
                              std::to_string(line_no) + ")");
      Order order;
      if (toks[2].text == "inf") {
        order = Order::infinity();
      } else {
        std::uint32_t v = parse_label(toks[2], line_no, "or 'inf' for f");
        if (v < 2)
          throw ValidationError("vertex label out of range: f must be >= 2 "
                                "(line " + std::to_string(line_no) + ")");
        order = Order::finite(v);
      }
      seen.emplace(name, static_cast<int>(names.size()));
      names.push_back(std::move(name));
      f.push_back(order);
    } else if (toks[0].text == "edge") {
      if (toks.size() != 4)
        throw ParseError("expected 'edge <name> <name> <m>'", line_no,
                         toks[0].column);
      for (int k : {1, 2}) {
        if (!valid_input_name(toks[k].text))
          throw ParseError("invalid vertex name '" + std::string(toks[k].text) +
                               "' (want [A-Za-z0-9_]+)",
                           line_no, toks[k].column);
        if (!seen.count(std::string(toks[k].text)))
          throw ValidationError("edge references unknown vertex '" +
                                std::string(toks[k].text) + "' (line " +
                                std::to_string(line_no) + ")");
      }
      std::uint32_t m = parse_label(toks[3], line_no, "for m");
      if (m < 2)
        throw ValidationError("edge label out of range: m must be >= 2 (line " +
                              std::to_string(line_no) + ")");
      pending.push_back({std::string(toks[1].text), std::string(toks[2].text),
                         static_cast<int>(m), line_no, toks[1].column});
    } else {
      throw ParseError("unknown declaration '" + std::string(toks[0].text) +
                           "' (expected 'vertex' or 'edge')",
                       line_no, toks[0].column);
    }
    if (eol == text.size()) break;
  }

  std::vector<Edge> edges;
  edges.reserve(pending.size());
  for (const PendingEdge& e : pending)
    edges.push_back({seen.at(e.u), seen.at(e.v), e.m});
  try {
    return DyerGraph::create(std::move(names), std::move(f), std::move(edges));
  } catch (const ValidationError& err) {
    throw ValidationError(std::string(err.what()) + " (while parsing)");
  }
}

std::string serialize_graph(const DyerGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "vertex " << g.name(v) << ' ' << g.f(v).to_string() << '\n';
  for (const Edge& e : g.edges())
    out << "edge " << g.name(e.u) << ' ' << g.name(e.v) << ' ' << e.m << '\n';
  return out.str();
}

VertexPartition partition_vertices(const DyerGraph& g) {
  VertexPartition p;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Order f = g.f(v);
    if (f.is_infinite())
      p.vinf.push_back(v);
    else if (f.finite_value() == 2)
      p.v2.push_back(v);
    else
      p.vp.push_back(v);
  }
  return p;
}

DyerGraph induced_subgraph(const DyerGraph& g, const std::vector<int>& t) {
  std::vector<int> sorted(t);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("duplicate vertex in induced-subgraph request");
  std::vector<std::string> names;
  std::vector<Order> f;
  std::vector<int> new_index(g.vertex_count(), -1);
  for (int v : sorted) {
    if (v < 0 || v >= g.vertex_count())
      throw ValidationError("unknown vertex in induced-subgraph request");
    new_index[v] = static_cast<int>(names.size());
    names.push_back(g.name(v));
    f.push_back(g.f(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (new_index[e.u] >= 0 && new_index[e.v] >= 0)
      edges.push_back({new_index[e.u], new_index[e.v], e.m});
  return DyerGraph::create(std::move(names), std::move(f), std::move(edges));
}

std::vector<std::vector<int>> irreducible_components(const DyerGraph& g) {
  std::vector<int> all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return irreducible_components(g, all);
}

std::vector<std::vector<int>> irreducible_components(const DyerGraph& g,
                                                     const std::vector<int>& t) {
  // Union-find over t under the non-commutation relation.
  std::vector<int> verts(t);
  std::sort(verts.begin(), verts.end());
  const int k = static_cast<int>(verts.size());
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      // Related when non-adjacent (bond 0) or adjacent with m != 2.
      if (g.bond(verts[i], verts[j]) != 2) {
        int ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }
  }
  std::vector<std::vector<int>> components;
  std::vector<int> slot(k, -1);
  for (int i = 0; i < k; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[slot[r]].push_back(verts[i]);
  }
  return components;
}

}  // namespace dyer
