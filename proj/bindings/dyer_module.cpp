#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <vector>

#include "dyer/classify.hpp"
#include "dyer/corpus.hpp"
#include "dyer/errors.hpp"
#include "dyer/lift.hpp"
#include "dyer/oracle.hpp"
#include "dyer/report.hpp"

namespace py = pybind11;
using namespace dyer;

namespace {

py::object order_to_py(Order o) {
  if (o.is_finite()) return py::int_(o.finite_value());
  return py::float_(std::numeric_limits<double>::infinity());
}

py::object group_order_to_py(GroupOrder o) {
  if (o.is_finite()) return py::int_(o.finite_value());
  return py::float_(std::numeric_limits<double>::infinity());
}

std::vector<int> indices_of(const DyerGraph& g,
                            const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const std::string& name : names) {
    int v = g.vertex_index(name);
    if (v < 0) throw ValidationError("unknown vertex '" + name + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> names_of(const DyerGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.name(v));
  return out;
}

py::dict witness_to_py(const DyerGraph& g, const HyperbolicityWitness& w) {
  py::dict d;
  if (w.kind == HyperbolicityWitness::Kind::AffineSubset) {
    d["kind"] = "affine_subset";
    d["vertices"] = names_of(g, w.subset);
  } else {
    d["kind"] = "infinite_pair";
    d["part1"] = names_of(g, w.part1);
    d["part2"] = names_of(g, w.part2);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(dyer, m) {
  m.doc() = "structural analysis of Dyer groups given as labelled graphs";

  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "GraphValidationError",
                                          PyExc_ValueError);
  py::register_exception<CapExceededError>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<DyerGraph>(m, "DyerGraph")
      .def_static("parse", [](const std::string& text) { return parse_graph(text); },
                  py::arg("text"))
      .def("serialize", [](const DyerGraph& g) { return serialize_graph(g); })
      .def_property_readonly("vertices",
                             [](const DyerGraph& g) { return g.names(); })
      .def("f", [](const DyerGraph& g, const std::string& name) {
        int v = g.vertex_index(name);
        if (v < 0) throw ValidationError("unknown vertex '" + name + "'");
        return order_to_py(g.f(v));
      })
      .def("edges",
           [](const DyerGraph& g) {
             std::vector<std::tuple<std::string, std::string, int>> out;
             for (const Edge& e : g.edges())
               out.emplace_back(g.name(e.u), g.name(e.v), e.m);
             return out;
           })
      .def("induced",
           [](const DyerGraph& g, const std::vector<std::string>& names) {
             return induced_subgraph(g, indices_of(g, names));
           })
      .def("__eq__", [](const DyerGraph& a, const DyerGraph& b) { return a == b; })
      .def("__len__", &DyerGraph::vertex_count)
      .def("__repr__", [](const DyerGraph& g) {
        return "DyerGraph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edges().size()) + " edges)";
      });

  m.def("components", [](const DyerGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& comp : irreducible_components(g))
      out.push_back(names_of(g, comp));
    return out;
  });

  m.def("partition", [](const DyerGraph& g) {
    VertexPartition p = partition_vertices(g);
    py::dict d;
    d["v2"] = names_of(g, p.v2);
    d["vp"] = names_of(g, p.vp);
    d["vinf"] = names_of(g, p.vinf);
    return d;
  });

  m.def("lift", [](const DyerGraph& g) {
    LiftResult r = lift_graph(g);
    py::dict primes;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (r.prime_of[v] >= 0)
        primes[py::str(g.name(v))] = r.lifted.name(r.prime_of[v]);
    return py::make_tuple(r.lifted, primes, r.k);
  });

  m.def("lift_subset", [](const DyerGraph& g, const std::vector<std::string>& t) {
    LiftResult r = lift_graph(g);
    return names_of(r.lifted, lift_subset(g, indices_of(g, t)));
  });

  m.def("index_factor", [](const DyerGraph& g) { return index_factor(g); });

  m.def("is_finite", [](const DyerGraph& g) { return dyer_is_finite(g); });
  m.def("order", [](const DyerGraph& g) { return group_order_to_py(dyer_order(g)); });
  m.def("family", [](const DyerGraph& g) { return to_string(classify_family(g)); });

  m.def("centre", [](const DyerGraph& g) {
    CentreDescription c = dyer_centre(g);
    py::list factors;
    for (const CentreFactor& f : c.factors) {
      py::dict d;
      d["component"] = names_of(g, f.component);
      d["kind"] = f.kind == CentreFactor::Kind::Trivial         ? "trivial"
                  : f.kind == CentreFactor::Kind::CyclicFull ? "cyclic_full"
                                                            : "longest_element_order_2";
      d["order"] = group_order_to_py(f.order);
      if (f.type) d["type"] = to_string(*f.type);
      factors.append(d);
    }
    py::dict out;
    out["total_order"] = group_order_to_py(c.total_order);
    out["factors"] = factors;
    return out;
  });

  m.def("abelianisation", [](const DyerGraph& g) {
    py::list factors;
    for (const AbelianisationFactor& f : abelianisation(g).factors) {
      py::dict d;
      d["order"] = order_to_py(f.order);
      d["vertices"] = names_of(g, f.vertices);
      factors.append(d);
    }
    return factors;
  });

  m.def(
      "is_hyperbolic",
      [](const DyerGraph& g, int max_subset_vertices) {
        ClassifyOptions options;
        options.max_subset_vertices = max_subset_vertices;
        HyperbolicityResult r = dyer_is_hyperbolic(g, options);
        py::object witness = py::none();
        if (r.witness) witness = witness_to_py(g, *r.witness);
        return py::make_tuple(r.hyperbolic, witness);
      },
      py::arg("graph"), py::arg("max_subset_vertices") = 20);

  m.def("is_acylindrically_hyperbolic",
        [](const DyerGraph& g) { return dyer_is_acyl_hyperbolic(g); });

  m.def(
      "analyze_json",
      [](const DyerGraph& g, int max_subset_vertices) {
        ClassifyOptions options;
        options.max_subset_vertices = max_subset_vertices;
        return report_to_json(analyze(g, options)).dump(2);
      },
      py::arg("graph"), py::arg("max_subset_vertices") = 20);

  m.def(
      "brute_order",
      [](const DyerGraph& g, std::uint64_t max_cosets) -> py::object {
        auto r = brute_order(g, max_cosets);
        if (!r) return py::none();
        return py::int_(*r);
      },
      py::arg("graph"), py::arg("max_cosets") = 1000000);

  m.def(
      "brute_centre_order",
      [](const DyerGraph& g, std::uint64_t max_cosets) -> py::object {
        CosetTable t = todd_coxeter(presentation_of(g), max_cosets);
        if (!t.complete()) return py::none();
        return py::int_(brute_centre_order(t));
      },
      py::arg("graph"), py::arg("max_cosets") = 1000000);

  m.def(
      "brute_abelianisation_order",
      [](const DyerGraph& g, std::uint64_t max_cosets) -> py::object {
        auto r = brute_abelianisation_order(g, max_cosets);
        if (!r) return py::none();
        return group_order_to_py(*r);
      },
      py::arg("graph"), py::arg("max_cosets") = 1000000);

  m.def(
      "corpus_check",
      [](int max_vertices, std::uint64_t max_cosets) {
        CorpusBounds bounds;
        bounds.max_vertices = max_vertices;
        bounds.max_cosets = max_cosets;
        CorpusSummary s = run_corpus_checks(bounds);
        py::dict d;
        d["graphs"] = s.graphs;
        d["checks"] = s.checks;
        d["failures"] = s.failures;
        if (!s.first_failure.empty()) d["first_failure"] = s.first_failure;
        return d;
      },
      py::arg("max_vertices") = 2, py::arg("max_cosets") = 200000);
}
