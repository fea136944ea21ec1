#include "dyer/corpus.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "dyer/classify.hpp"
#include "dyer/errors.hpp"
#include "dyer/lift.hpp"
#include "dyer/oracle.hpp"
#include "dyer/report.hpp"

namespace dyer {

namespace {

std::string vertex_name(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

// Label-preserving canonical key: the lexicographically smallest encoding of
// (f labels, pair labels) over all vertex permutations.
std::vector<std::uint8_t> canonical_key(int n, const std::vector<int>& f_idx,
                                        const std::vector<int>& pair_code) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur;
  do {
    cur.clear();
    for (int p = 0; p < n; ++p) cur.push_back(static_cast<std::uint8_t>(f_idx[perm[p]]));
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        int i = std::min(perm[p], perm[q]), j = std::max(perm[p], perm[q]);
        cur.push_back(static_cast<std::uint8_t>(pair_code[i * n + j]));
      }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<DyerGraph> generate_corpus(const CorpusBounds& bounds) {
  std::vector<DyerGraph> out;
  const int kf = static_cast<int>(bounds.f_values.size());
  const int km = static_cast<int>(bounds.m_values.size());
  for (int n = 0; n <= bounds.max_vertices; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::vector<std::uint8_t>> seen;
    std::vector<int> f_idx(n, 0);
    for (;;) {
      std::vector<int> edge_choice(pairs, 0);  // 0 = no edge, else m index + 1
      for (;;) {
        // Assemble and validate.
        std::vector<int> pair_code(n * n, 0);
        std::vector<Edge> edges;
        bool valid = true;
        int p = 0;
        for (int i = 0; i < n && valid; ++i)
          for (int j = i + 1; j < n && valid; ++j, ++p) {
            int choice = edge_choice[p];
            pair_code[i * n + j] = choice;
            if (choice == 0) continue;
            int m = bounds.m_values[choice - 1];
            for (int endpoint : {i, j}) {
              Order f = bounds.f_values[f_idx[endpoint]];
              if ((f.is_infinite() || f.finite_value() >= 3) && m != 2)
                valid = false;
            }
            edges.push_back({i, j, m});
          }
        if (valid && seen.insert(canonical_key(n, f_idx, pair_code)).second) {
          std::vector<std::string> names;
          std::vector<Order> f;
          for (int i = 0; i < n; ++i) {
            names.push_back(vertex_name(i));
            f.push_back(bounds.f_values[f_idx[i]]);
          }
          out.push_back(DyerGraph::create(std::move(names), std::move(f),
                                          std::move(edges)));
        }
        // Next edge assignment.
        int pos = pairs - 1;
        while (pos >= 0 && edge_choice[pos] == km) edge_choice[pos--] = 0;
        if (pos < 0) break;
        ++edge_choice[pos];
      }
      // Next f assignment.
      int pos = n - 1;
      while (pos >= 0 && f_idx[pos] == kf - 1) f_idx[pos--] = 0;
      if (pos < 0) break;
      ++f_idx[pos];
    }
  }
  return out;
}

namespace {

struct Checker {
  const CorpusBounds& bounds;
  std::uint64_t checks = 0;
  std::optional<std::string> failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && !failure) failure = what;
  }

  void run(const DyerGraph& g) {
    const bool finite = dyer_is_finite(g);
    const GroupOrder order = dyer_order(g);
    expect(finite == order.is_finite(), "finiteness and order disagree");

    LiftResult lift = lift_graph(g);
    const bool in_oracle_range =
        finite && order.finite_value() <= bounds.order_limit;

    if (in_oracle_range) {
      CosetTable table = todd_coxeter(presentation_of(g), bounds.max_cosets);
      expect(table.complete(), "oracle hit the cap on a finite instance");
      if (table.complete()) {
        expect(table.coset_count() == order.finite_value(),
               "oracle order " + std::to_string(table.coset_count()) +
                   " != classified order " + order.to_string());
        GroupOrder centre_total = dyer_centre(g).total_order;
        expect(centre_total.is_finite() &&
                   brute_centre_order(table) == centre_total.finite_value(),
               "oracle centre order " + std::to_string(brute_centre_order(table)) +
                   " != classified centre order " + centre_total.to_string());
      }
      auto ab = brute_abelianisation_order(g, bounds.max_cosets);
      expect(ab.has_value() && *ab == abelianisation(g).total_order(),
             "oracle abelianisation disagrees with structural abelianisation");
      auto lifted_order = brute_order(lift.lifted, bounds.max_cosets);
      expect(lifted_order.has_value() &&
                 *lifted_order == checked_mul(order.finite_value(), index_factor(g)),
             "lift order identity |W| = |D| * 2^k failed");
    } else if (!finite) {
      auto disproof = brute_order(g, std::min<std::uint64_t>(bounds.max_cosets, 5000));
      expect(!disproof.has_value(),
             "oracle completed on an instance classified as infinite");
    }

    // Component lifting: components of the lift are the lifted components.
    {
      auto lifted_components = irreducible_components(lift.lifted);
      std::vector<std::vector<int>> expected;
      for (const auto& comp : irreducible_components(g))
        expected.push_back(lift_subset(g, comp));
      expect(lifted_components == expected,
             "components of the lift differ from lifted components");
    }

    const auto components = irreducible_components(g);

    // Structural centre statement for irreducible mixed graphs.
    if (components.size() == 1 && g.vertex_count() >= 2) {
      bool mixed = false;
      for (int v = 0; v < g.vertex_count(); ++v)
        mixed = mixed || g.f(v) != Order::finite(2);
      if (mixed) {
        CentreDescription centre = dyer_centre(g);
        expect(centre.factors.size() == 1 &&
                   centre.factors[0].kind == CentreFactor::Kind::Trivial &&
                   centre.total_order == GroupOrder::finite(1),
               "irreducible multi-vertex graph with some f != 2 must be centreless");
      }
    }

    // Cross-criterion consistency and determinism.
    {
      HyperbolicityResult hyp = dyer_is_hyperbolic(g);
      bool ah = dyer_is_acyl_hyperbolic(g);
      if (hyp.hyperbolic && !finite) {
        std::vector<std::vector<int>> infinite_comps;
        for (const auto& comp : components)
          if (!dyer_is_finite(induced_subgraph(g, comp)))
            infinite_comps.push_back(comp);
        expect(infinite_comps.size() == 1,
               "hyperbolic infinite graph must have one infinite component");
        const auto& comp = infinite_comps[0];
        bool is_z = comp.size() == 1 && g.f(comp[0]).is_infinite();
        bool is_i1 = false;
        if (comp.size() == 2 && g.f(comp[0]) == Order::finite(2) &&
            g.f(comp[1]) == Order::finite(2))
          is_i1 = !g.adjacent(comp[0], comp[1]);
        if (!is_z && !is_i1)
          expect(ah, "hyperbolic non-elementary graph must be acylindrically "
                     "hyperbolic");
      }
      AnalysisReport first = analyze(g);
      AnalysisReport second = analyze(g);
      expect(report_to_json(first).dump() == report_to_json(second).dump(),
             "analysis report is not deterministic");
    }

    // Dual route through the lift: D(g) and the lifted Coxeter group agree
    // on hyperbolicity and acylindrical hyperbolicity.
    {
      HyperbolicityResult direct = dyer_is_hyperbolic(g);
      HyperbolicityResult via_lift = dyer_is_hyperbolic(lift.lifted);
      expect(direct.hyperbolic == via_lift.hyperbolic,
             "hyperbolicity disagrees between the graph and its lift");
      expect(dyer_is_acyl_hyperbolic(g) == dyer_is_acyl_hyperbolic(lift.lifted),
             "acylindrical hyperbolicity disagrees between the graph and its "
             "lift");
    }

    // Affine-lift equivalence for irreducible graphs.
    if (components.size() == 1) {
      auto lifted_comps = irreducible_components(lift.lifted);
      expect(lifted_comps.size() == 1, "lift of an irreducible graph splits");
      DiagramType lifted_type =
          recognize_irreducible(CoxeterDiagram(lift.lifted));
      bool side_a = false;
      if (g.vertex_count() >= 3) {
        bool coxeter = true;
        for (int v = 0; v < g.vertex_count(); ++v)
          coxeter = coxeter && g.f(v) == Order::finite(2);
        if (coxeter)
          side_a = is_affine_type(
              recognize_irreducible(CoxeterDiagram(g)));
      }
      bool side_b = is_affine_type(lifted_type) &&
                    lift.lifted.vertex_count() >= 3;
      expect(side_a == side_b, "affine recognition does not commute with lift");

      bool lifted_i1 = false;
      if (const auto* at = std::get_if<AffineType>(&lifted_type))
        lifted_i1 = at->family == AffineFamily::I1;
      bool expect_i1 =
          (g.vertex_count() == 1 && g.f(0).is_infinite()) ||
          (g.vertex_count() == 2 && g.f(0) == Order::finite(2) &&
           g.f(1) == Order::finite(2) && !g.adjacent(0, 1));
      expect(lifted_i1 == expect_i1, "infinite-dihedral lift detection failed");
    }

    // Adding a commuting f = infinity vertex (isolated in the diagram
    // sense: m = 2 edges to everything) gives D x Z: infinite, and either a
    // second infinite component or a plain Z factor, so never acylindrically
    // hyperbolic.
    {
      std::vector<std::string> names = g.names();
      std::vector<Order> f;
      for (int v = 0; v < g.vertex_count(); ++v) f.push_back(g.f(v));
      names.push_back("zz_direct");
      f.push_back(Order::infinity());
      std::vector<Edge> edges = g.edges();
      for (int v = 0; v < g.vertex_count(); ++v)
        edges.push_back({v, g.vertex_count(), 2});
      DyerGraph extended =
          DyerGraph::create(std::move(names), std::move(f), std::move(edges));
      expect(!dyer_is_finite(extended),
             "adding a Z direct factor must give an infinite group");
      expect(!dyer_is_acyl_hyperbolic(extended),
             "adding a Z direct factor must break acylindrical hyperbolicity");
    }
  }
};

}  // namespace

CorpusSummary run_corpus_checks(const CorpusBounds& bounds, std::ostream* log) {
  CorpusSummary summary;
  std::vector<DyerGraph> corpus = generate_corpus(bounds);
  summary.graphs = corpus.size();
  for (const DyerGraph& g : corpus) {
    Checker checker{bounds, 0, std::nullopt};
    checker.run(g);
    summary.checks += checker.checks;
    if (checker.failure) {
      ++summary.failures;
      if (summary.first_failure.empty()) {
        std::ostringstream msg;
        msg << *checker.failure << "\ncounterexample:\n" << serialize_graph(g);
        summary.first_failure = msg.str();
      }
    }
  }
  if (log) {
    *log << "corpus graphs: " << summary.graphs << "\n"
         << "checks run: " << summary.checks << "\n"
         << "failures: " << summary.failures << "\n";
    if (!summary.first_failure.empty())
      *log << "first failure: " << summary.first_failure << "\n";
  }
  return summary;
}

}  // namespace dyer
