#include "dyer/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyer/classify.hpp"
#include "dyer/corpus.hpp"
#include "dyer/errors.hpp"
#include "dyer/lift.hpp"
#include "dyer/oracle.hpp"
#include "dyer/report.hpp"

namespace dyer {

namespace {

using nlohmann::ordered_json;

DyerGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::vector<std::string> names_of(const DyerGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.name(v));
  return out;
}

void emit(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << "\n";
}

struct OracleSettings {
  std::string path;
  std::uint64_t max_cosets = 1000000;
  bool json = false;
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"structural analysis of Dyer groups given as labelled graphs"};
  app.require_subcommand(1);

  struct {
    std::string path;
    bool json = false;
    int max_subset_vertices = 20;
    std::uint64_t max_cosets = 1000000;
    int max_vertices = 4;
    std::string oracle_what;
  } opt;

  auto add_graph_command = [&](const std::string& name, const std::string& help,
                               bool subset_cap = false) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.path, "graph file (.dyer)")->required();
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
    if (subset_cap)
      sub->add_option("--max-subset-vertices", opt.max_subset_vertices,
                      "largest infinite component certified exhaustively");
    return sub;
  };

  CLI::App* validate = add_graph_command("validate", "parse and validate a graph");
  CLI::App* analyze_cmd =
      add_graph_command("analyze", "full structural report", true);
  CLI::App* decompose =
      add_graph_command("decompose", "irreducible components");
  CLI::App* lift_cmd =
      add_graph_command("lift", "associated Coxeter graph of the lift");
  CLI::App* finite_cmd = add_graph_command("finite", "finiteness");
  CLI::App* order_cmd = add_graph_command("order", "group order");
  CLI::App* centre_cmd = add_graph_command("centre", "centre description");
  CLI::App* hyperbolic_cmd =
      add_graph_command("hyperbolic", "Gromov hyperbolicity", true);
  CLI::App* ah_cmd = add_graph_command("ah", "acylindrical hyperbolicity");
  CLI::App* abelian_cmd = add_graph_command("abelian", "abelianisation");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "coset-enumeration oracle (order | centre | abelian)");
  oracle_cmd
      ->add_option("what", opt.oracle_what, "one of: order, centre, abelian")
      ->required()
      ->check(CLI::IsMember({"order", "centre", "abelian"}));
  oracle_cmd->add_option("file", opt.path, "graph file (.dyer)")->required();
  oracle_cmd->add_option("--max-cosets", opt.max_cosets,
                         "cap on cosets allocated during enumeration");
  oracle_cmd->add_flag("--json", opt.json, "emit JSON instead of text");

  CLI::App* corpus_cmd = app.add_subcommand(
      "corpus-check", "exhaustive classifier-vs-oracle agreement suite");
  corpus_cmd->add_option("--max-vertices", opt.max_vertices,
                         "largest corpus graph generated");
  corpus_cmd->add_option("--max-cosets", opt.max_cosets,
                         "cap on cosets allocated during enumeration");
  corpus_cmd->add_flag("--json", opt.json, "emit JSON instead of text");

  std::vector<const char*> argv{"dyer"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*validate) {
      DyerGraph g = load_graph(opt.path);
      if (opt.json) {
        ordered_json doc;
        doc["valid"] = true;
        doc["vertices"] = g.vertex_count();
        doc["edges"] = g.edges().size();
        emit(out, doc);
      } else {
        out << "ok: " << g.vertex_count() << " vertices, " << g.edges().size()
            << " edges\n";
      }
    } else if (*analyze_cmd) {
      DyerGraph g = load_graph(opt.path);
      ClassifyOptions options;
      options.max_subset_vertices = opt.max_subset_vertices;
      AnalysisReport report = analyze(g, options);
      if (opt.json)
        emit(out, report_to_json(report));
      else
        out << report_to_text(report);
    } else if (*decompose) {
      DyerGraph g = load_graph(opt.path);
      auto components = irreducible_components(g);
      if (opt.json) {
        ordered_json doc;
        doc["components"] = ordered_json::array();
        for (const auto& comp : components)
          doc["components"].push_back(names_of(g, comp));
        emit(out, doc);
      } else {
        for (const auto& comp : components) {
          for (std::size_t i = 0; i < comp.size(); ++i)
            out << (i ? " " : "") << g.name(comp[i]);
          out << "\n";
        }
      }
    } else if (*lift_cmd) {
      DyerGraph g = load_graph(opt.path);
      LiftResult lift = lift_graph(g);
      if (opt.json) {
        ordered_json doc;
        doc["k"] = lift.k;
        doc["index_factor"] = index_factor(g);
        doc["graph"] = serialize_graph(lift.lifted);
        emit(out, doc);
      } else {
        out << serialize_graph(lift.lifted);
      }
    } else if (*finite_cmd) {
      DyerGraph g = load_graph(opt.path);
      bool finite = dyer_is_finite(g);
      if (opt.json)
        emit(out, ordered_json{{"finite", finite}});
      else
        out << (finite ? "true" : "false") << "\n";
    } else if (*order_cmd) {
      DyerGraph g = load_graph(opt.path);
      GroupOrder order = dyer_order(g);
      if (opt.json) {
        ordered_json doc;
        doc["order"] =
            order.is_finite() ? ordered_json(order.finite_value()) : "infinity";
        emit(out, doc);
      } else {
        out << order.to_string() << "\n";
      }
    } else if (*centre_cmd) {
      DyerGraph g = load_graph(opt.path);
      CentreDescription centre = dyer_centre(g);
      if (opt.json) {
        emit(out, centre_to_json(g, centre));
      } else {
        out << "centre order: " << centre.total_order.to_string() << "\n";
        for (const CentreFactor& f : centre.factors) {
          out << "  {";
          for (std::size_t i = 0; i < f.component.size(); ++i)
            out << (i ? " " : "") << g.name(f.component[i]);
          out << "}: ";
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
      }
    } else if (*hyperbolic_cmd) {
      DyerGraph g = load_graph(opt.path);
      ClassifyOptions options;
      options.max_subset_vertices = opt.max_subset_vertices;
      HyperbolicityResult r = dyer_is_hyperbolic(g, options);
      if (opt.json) {
        emit(out, hyperbolicity_to_json(g, r));
      } else {
        out << (r.hyperbolic ? "true" : "false") << "\n";
        if (r.witness) {
          const HyperbolicityWitness& w = *r.witness;
          if (w.kind == HyperbolicityWitness::Kind::AffineSubset) {
            out << "witness: affine parabolic {";
            for (std::size_t i = 0; i < w.subset.size(); ++i)
              out << (i ? " " : "") << g.name(w.subset[i]);
            out << "}\n";
          } else {
            out << "witness: infinite pair {";
            for (std::size_t i = 0; i < w.part1.size(); ++i)
              out << (i ? " " : "") << g.name(w.part1[i]);
            out << "} x {";
            for (std::size_t i = 0; i < w.part2.size(); ++i)
              out << (i ? " " : "") << g.name(w.part2[i]);
            out << "}\n";
          }
        }
      }
    } else if (*ah_cmd) {
      DyerGraph g = load_graph(opt.path);
      bool ah = dyer_is_acyl_hyperbolic(g);
      if (opt.json)
        emit(out, ordered_json{{"acylindrically_hyperbolic", ah}});
      else
        out << (ah ? "true" : "false") << "\n";
    } else if (*abelian_cmd) {
      DyerGraph g = load_graph(opt.path);
      AbelianisationDescription ab = abelianisation(g);
      if (opt.json) {
        emit(out, abelianisation_to_json(g, ab));
      } else {
        if (ab.factors.empty()) {
          out << "trivial\n";
        } else {
          for (std::size_t i = 0; i < ab.factors.size(); ++i) {
            const AbelianisationFactor& f = ab.factors[i];
            out << (i ? " x " : "") << "Z";
            if (f.order.is_finite()) out << f.order.finite_value();
          }
          out << "\n";
        }
      }
    } else if (*oracle_cmd) {
      DyerGraph g = load_graph(opt.path);
      if (opt.oracle_what == "order") {
        CosetTable table = todd_coxeter(presentation_of(g), opt.max_cosets);
        if (!table.complete()) {
          if (opt.json)
            emit(out, ordered_json{{"status", "cap_exceeded"},
                                   {"cosets_defined", table.coset_count()}});
          err << "cap exceeded after " << table.coset_count() << " cosets\n";
          return kExitCapExceeded;
        }
        if (opt.json)
          emit(out, ordered_json{{"status", "complete"},
                                 {"order", table.coset_count()}});
        else
          out << table.coset_count() << "\n";
      } else if (opt.oracle_what == "centre") {
        CosetTable table = todd_coxeter(presentation_of(g), opt.max_cosets);
        if (!table.complete()) {
          err << "cap exceeded after " << table.coset_count() << " cosets\n";
          return kExitCapExceeded;
        }
        std::uint64_t centre = brute_centre_order(table);
        if (opt.json)
          emit(out, ordered_json{{"status", "complete"},
                                 {"centre_order", centre}});
        else
          out << centre << "\n";
      } else {
        auto ab = brute_abelianisation_order(g, opt.max_cosets);
        if (!ab.has_value()) {
          err << "cap exceeded\n";
          return kExitCapExceeded;
        }
        if (opt.json) {
          ordered_json doc;
          doc["status"] = "complete";
          doc["abelianisation_order"] =
              ab->is_finite() ? ordered_json(ab->finite_value()) : "infinity";
          emit(out, doc);
        } else {
          out << ab->to_string() << "\n";
        }
      }
    } else if (*corpus_cmd) {
      CorpusBounds bounds;
      bounds.max_vertices = opt.max_vertices;
      bounds.max_cosets = opt.max_cosets;
      CorpusSummary summary = run_corpus_checks(bounds, &err);
      if (opt.json) {
        ordered_json doc;
        doc["graphs"] = summary.graphs;
        doc["checks"] = summary.checks;
        doc["failures"] = summary.failures;
        if (!summary.first_failure.empty())
          doc["first_failure"] = summary.first_failure;
        emit(out, doc);
      } else {
        out << (summary.ok() ? "PASS" : "FAIL") << ": " << summary.graphs
            << " graphs, " << summary.checks << " checks, " << summary.failures
            << " failures\n";
        if (!summary.first_failure.empty())
          out << summary.first_failure << "\n";
      }
      if (!summary.ok()) return kExitUsage;
    }
  } catch (const ParseError& e) {
    err << opt.path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ValidationError& e) {
    err << opt.path << ": " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace dyer
