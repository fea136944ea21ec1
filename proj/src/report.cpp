#include "dyer/report.hpp"

#include <sstream>

#include "dyer/errors.hpp"

namespace dyer {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json order_json(GroupOrder o) {
  if (o.is_infinite()) return "infinity";
  return o.finite_value();
}

ordered_json label_json(Order o) {
  if (o.is_infinite()) return "infinity";
  return o.finite_value();
}

std::vector<std::string> names_of(const DyerGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(g.name(v));
  return out;
}

const char* kind_name(CentreFactor::Kind k) {
  switch (k) {
    case CentreFactor::Kind::Trivial: return "trivial";
    case CentreFactor::Kind::CyclicFull: return "cyclic_full";
    case CentreFactor::Kind::LongestElementOrder2:
      return "longest_element_order_2";
  }
  return "?";
}

ordered_json witness_json(const DyerGraph& g, const HyperbolicityWitness& w) {
  ordered_json out;
  if (w.kind == HyperbolicityWitness::Kind::AffineSubset) {
    out["kind"] = "affine_subset";
    out["vertices"] = names_of(g, w.subset);
  } else {
    out["kind"] = "infinite_pair";
    out["part1"] = names_of(g, w.part1);
    out["part2"] = names_of(g, w.part2);
  }
  return out;
}

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ' ';
    out += names[i];
  }
  return out + "}";
}

}  // namespace

ordered_json centre_to_json(const DyerGraph& g, const CentreDescription& centre) {
  ordered_json out;
  out["total_order"] = order_json(centre.total_order);
  out["factors"] = ordered_json::array();
  for (const CentreFactor& f : centre.factors) {
    ordered_json factor;
    factor["component"] = names_of(g, f.component);
    factor["kind"] = kind_name(f.kind);
    factor["order"] = order_json(f.order);
    if (f.type) factor["type"] = to_string(*f.type);
    out["factors"].push_back(std::move(factor));
  }
  return out;
}

ordered_json abelianisation_to_json(const DyerGraph& g,
                                    const AbelianisationDescription& ab) {
  ordered_json out;
  out["factors"] = ordered_json::array();
  for (const AbelianisationFactor& f : ab.factors)
    out["factors"].push_back(
        {{"order", label_json(f.order)}, {"vertices", names_of(g, f.vertices)}});
  return out;
}

ordered_json hyperbolicity_to_json(const DyerGraph& g,
                                   const HyperbolicityResult& r) {
  ordered_json out;
  out["value"] = r.hyperbolic;
  if (r.witness) out["witness"] = witness_json(g, *r.witness);
  return out;
}

ordered_json report_to_json(const AnalysisReport& report) {
  const DyerGraph& g = report.graph;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;

  ordered_json graph;
  graph["vertices"] = ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    graph["vertices"].push_back({{"name", g.name(v)}, {"f", label_json(g.f(v))}});
  graph["edges"] = ordered_json::array();
  for (const Edge& e : g.edges())
    graph["edges"].push_back(
        {{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"m", e.m}});
  doc["graph"] = std::move(graph);

  doc["family"] = to_string(report.family);
  doc["components"] = ordered_json::array();
  for (const auto& comp : report.components)
    doc["components"].push_back(names_of(g, comp));
  doc["finite"] = report.finite;
  doc["order"] = order_json(report.order);

  doc["centre"] = centre_to_json(g, report.centre);
  doc["abelianisation"] = abelianisation_to_json(g, report.abelianisation);
  doc["hyperbolic"] = hyperbolicity_to_json(g, report.hyperbolicity);

  doc["acylindrically_hyperbolic"] = report.acylindrically_hyperbolic;
  return doc;
}

std::string report_to_text(const AnalysisReport& report) {
  const DyerGraph& g = report.graph;
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edges().size() << "\n";
  out << "family: " << to_string(report.family) << "\n";
  out << "components: " << report.components.size() << "\n";
  for (const auto& comp : report.components)
    out << "  " << braces(names_of(g, comp)) << "\n";
  out << "finite: " << (report.finite ? "true" : "false") << "\n";
  out << "order: " << report.order.to_string() << "\n";
  out << "centre order: " << report.centre.total_order.to_string() << "\n";
  for (const CentreFactor& f : report.centre.factors) {
    out << "  " << braces(names_of(g, f.component)) << ": ";
    switch (f.kind) {
      case CentreFactor::Kind::Trivial:
        out << "trivial";
        break;
      case CentreFactor::Kind::CyclicFull:
        out << "cyclic of order " << f.order.to_string();
        break;
      case CentreFactor::Kind::LongestElementOrder2:
        out << "longest element of " << to_string(*f.type) << ", order 2";
        break;
    }
    out << "\n";
  }
  out << "abelianisation:";
  for (const AbelianisationFactor& f : report.abelianisation.factors)
    out << " Z" << (f.order.is_finite() ? std::to_string(f.order.finite_value())
                                        : std::string());
  out << "\n";
  out << "hyperbolic: " << (report.hyperbolicity.hyperbolic ? "true" : "false")
      << "\n";
  if (report.hyperbolicity.witness) {
    const HyperbolicityWitness& w = *report.hyperbolicity.witness;
    if (w.kind == HyperbolicityWitness::Kind::AffineSubset)
      out << "  witness: affine parabolic " << braces(names_of(g, w.subset))
          << "\n";
    else
      out << "  witness: infinite pair " << braces(names_of(g, w.part1)) << " x "
          << braces(names_of(g, w.part2)) << "\n";
  }
  out << "acylindrically hyperbolic: "
      << (report.acylindrically_hyperbolic ? "true" : "false") << "\n";
  return out.str();
}

DyerGraph graph_from_report_json(const json& document) {
  const json& graph = document.at("graph");
  std::vector<std::string> names;
  std::vector<Order> f;
  for (const json& v : graph.at("vertices")) {
    names.push_back(v.at("name").get<std::string>());
    if (v.at("f").is_string())
      f.push_back(Order::infinity());
    else
      f.push_back(Order::finite(v.at("f").get<std::uint32_t>()));
  }
  std::vector<Edge> edges;
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    index[names[i]] = static_cast<int>(i);
  for (const json& e : graph.at("edges"))
    edges.push_back({index.at(e.at("u").get<std::string>()),
                     index.at(e.at("v").get<std::string>()),
                     e.at("m").get<int>()});
  return DyerGraph::create(std::move(names), std::move(f), std::move(edges));
}

}  // namespace dyer
