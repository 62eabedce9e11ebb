#include <atomic>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rootpoly/json_io.hpp"
#include "rootpoly/verify.hpp"

using namespace rootpoly;
using nlohmann::json;

namespace {

EdgeOrdering parse_order(const std::string& spec, const Digraph& d) {
  std::vector<EdgeId> ids;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) ids.push_back(std::stoi(tok));
  EdgeOrdering pi = EdgeOrdering::from_rank_order(ids);
  if (!pi.is_bijection_on(d))
    throw std::invalid_argument("--order must list every edge id exactly once");
  return pi;
}

int cmd_hstar(const std::string& path, const std::string& order, bool oracle, bool components,
              bool as_json) {
  Digraph d = digraph_from_file(path);
  if (!d.weakly_connected()) {
    if (!components) throw std::invalid_argument("graph is disconnected; pass --components");
    Polynomial h = hstar_components(d);
    if (as_json)
      std::cout << json{{"hstar", polynomial_to_json(h)}}.dump() << "\n";
    else
      std::cout << h.str() << "\n";
    return 0;
  }
  Polynomial h = order.empty() ? hstar(d) : hstar_via_dissection(d, parse_order(order, d));
  json out{{"hstar", polynomial_to_json(h)}};
  bool match = true;
  if (oracle) {
    Polynomial ho = hstar_oracle(d);
    match = (h == ho);
    out["oracle"] = polynomial_to_json(ho);
    out["match"] = match;
  }
  if (as_json) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << h.str() << "\n";
    if (oracle)
      std::cout << "oracle: " << hstar_oracle(d).str() << "  " << (match ? "MATCH" : "MISMATCH")
                << "\n";
  }
  return match ? 0 : 1;
}

int cmd_report(const std::string& path, bool as_json) {
  Digraph d = digraph_from_file(path);
  MonotonicityReport rep = monotonicity_report(d);
  if (as_json) {
    std::cout << report_to_json(d, rep).dump(2) << "\n";
  } else {
    std::cout << "h* = " << rep.hstar.str() << "\n";
    for (const EdgeReport& er : rep.edges) {
      std::cout << "edge " << er.id << ": delete " << er.deletion_hstar.str()
                << (er.deletion_le ? " <= h*" : " NOT <= h*")
                << (er.deletion_eq ? " (equal)" : "")
                << (er.deletion_agrees ? "" : " PREDICATE DISAGREES");
      if (!er.loop) {
        std::cout << "; contract " << er.contraction_hstar->str()
                  << (er.contraction_le ? " <= h*" : " NOT <= h*")
                  << (er.contraction_eq ? " (equal)" : "")
                  << (er.contraction_agrees ? "" : " PREDICATE DISAGREES");
      } else {
        std::cout << "; loop";
      }
      std::cout << "\n";
    }
  }
  return (rep.all_le() && rep.all_agree()) ? 0 : 1;
}

int cmd_facets(const std::string& path, bool as_json) {
  Digraph d = digraph_from_file(path);
  LatticePolytope p = polytope_of(d);
  if (as_json) {
    std::cout << polytope_to_json(p).dump(2) << "\n";
    return 0;
  }
  std::cout << "dimension " << p.dimension() << ", " << p.generators().size() << " generators\n";
  if (p.dimension() == 0) return 0;
  FacetClassification fc = classify_facets(d, p);
  for (const CutFacet& cf : fc.cut_facets) {
    std::cout << "cut facet: shores {";
    for (size_t i = 0; i < cf.cut.shore0.size(); ++i)
      std::cout << (i ? "," : "") << cf.cut.shore0[i];
    std::cout << "} -> {";
    for (size_t i = 0; i < cf.cut.shore1.size(); ++i)
      std::cout << (i ? "," : "") << cf.cut.shore1[i];
    std::cout << "} edges {";
    for (size_t i = 0; i < cf.cut.edge_ids.size(); ++i)
      std::cout << (i ? "," : "") << cf.cut.edge_ids[i];
    std::cout << "}\n";
  }
  for (const LayeringFacet& lf : fc.layering_facets) {
    std::cout << "layering facet: l = (";
    for (size_t i = 0; i < lf.layering.size(); ++i) std::cout << (i ? "," : "") << lf.layering[i];
    std::cout << ") tight {";
    for (size_t i = 0; i < lf.tight_edges.size(); ++i)
      std::cout << (i ? "," : "") << lf.tight_edges[i];
    std::cout << "}\n";
  }
  return 0;
}

int cmd_ehrhart(const std::string& path, int k, bool as_json) {
  Digraph d = digraph_from_file(path);
  LatticePolytope p = polytope_of(d);
  std::vector<Int> counts = ehrhart_counts(p, k);
  if (as_json) {
    std::cout << json{{"counts", counts}}.dump() << "\n";
  } else {
    for (size_t i = 0; i < counts.size(); ++i) std::cout << (i ? " " : "") << counts[i];
    std::cout << "\n";
  }
  return 0;
}

struct VerifyTotals {
  long graphs = 0;
  long failures = 0;
  std::vector<std::string> messages;
};

int cmd_verify(int max_vertices, int max_edges, bool tutte, int max_base_vertices,
               int max_base_edges, std::uint64_t seed, bool dedup, int jobs, bool as_json) {
  VerifyTotals totals;
  if (jobs <= 0) jobs = (int)std::max(1u, std::thread::hardware_concurrency());

  if (tutte) {
    UndirectedCorpusSpec spec;
    spec.max_vertices = max_base_vertices;
    spec.max_edges = max_base_edges;
    spec.dedup = dedup;
    std::vector<UndirectedGraph> corpus = enumerate_undirected(spec);
    totals.graphs = (long)corpus.size();
    std::atomic<size_t> next{0};
    std::vector<std::vector<std::string>> results(corpus.size());
    auto worker = [&] {
      for (size_t i = next++; i < corpus.size(); i = next++) {
        if (auto bad = check_tutte_correspondence(corpus[i])) results[i].push_back(*bad);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& msgs : results)
      for (auto& m : msgs) {
        ++totals.failures;
        totals.messages.push_back(m);
      }
  } else {
    CorpusSpec spec;
    spec.max_vertices = max_vertices;
    spec.max_edges = max_edges;
    spec.dedup = dedup;
    std::vector<Digraph> corpus = enumerate_digraphs(spec);
    totals.graphs = (long)corpus.size();
    CheckOptions opts;
    opts.seed = seed;
    std::atomic<size_t> next{0};
    std::vector<std::vector<CheckFailure>> results(corpus.size());
    auto worker = [&] {
      for (size_t i = next++; i < corpus.size(); i = next++)
        results[i] = check_digraph(corpus[i], opts);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& fs : results)
      for (auto& f : fs) {
        ++totals.failures;
        totals.messages.push_back(std::string(check_name(f.kind)) + ": " + f.detail);
      }
  }

  if (as_json) {
    json out{{"graphs", totals.graphs}, {"failures", totals.failures},
             {"messages", totals.messages}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& m : totals.messages) std::cout << "FAIL " << m << "\n";
    std::cout << totals.graphs << " graphs checked, ";
    if (totals.failures == 0)
      std::cout << "all checks passed\n";
    else
      std::cout << totals.failures << " failures\n";
  }
  return totals.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h*-polynomials of extended root polytopes of directed multigraphs"};
  app.require_subcommand(1);

  std::string path, order;
  bool oracle = false, components = false, as_json = false;
  int k = 1;
  int max_vertices = 3, max_edges = 4, max_base_vertices = 4, max_base_edges = 5;
  bool tutte = false, dedup = false;
  std::uint64_t seed = 0;
  int jobs = 0;

  auto* hs = app.add_subcommand("hstar", "h* of a digraph, two ways");
  hs->add_option("file", path, "digraph json")->required();
  hs->add_option("--order", order, "edge ids in rank order, e.g. 2,0,1");
  hs->add_flag("--oracle", oracle, "also run the Ehrhart oracle and compare");
  hs->add_flag("--components", components, "accept disconnected input");
  hs->add_flag("--json", as_json, "machine output");

  auto* rp = app.add_subcommand("report", "per-edge minor monotonicity report");
  rp->add_option("file", path, "digraph json")->required();
  rp->add_flag("--json", as_json, "machine output");

  auto* fc = app.add_subcommand("facets", "facet H-representation and classification");
  fc->add_option("file", path, "digraph json")->required();
  fc->add_flag("--json", as_json, "machine output");

  auto* eh = app.add_subcommand("ehrhart", "lattice point counts of dilates");
  eh->add_option("file", path, "digraph json")->required();
  eh->add_option("-k", k, "largest dilate")->required();
  eh->add_flag("--json", as_json, "machine output");

  auto* vf = app.add_subcommand("verify", "exhaustive corpus checks");
  vf->add_option("--max-vertices", max_vertices, "digraph corpus bound");
  vf->add_option("--max-edges", max_edges, "digraph corpus bound");
  vf->add_flag("--tutte", tutte, "check the Tutte correspondence instead");
  vf->add_option("--max-base-vertices", max_base_vertices, "undirected corpus bound");
  vf->add_option("--max-base-edges", max_base_edges, "undirected corpus bound");
  vf->add_option("--seed", seed, "ordering sample seed");
  vf->add_flag("--dedup", dedup, "one representative per isomorphism class");
  vf->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  vf->add_flag("--json", as_json, "machine output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hs->parsed()) return cmd_hstar(path, order, oracle, components, as_json);
    if (rp->parsed()) return cmd_report(path, as_json);
    if (fc->parsed()) return cmd_facets(path, as_json);
    if (eh->parsed()) return cmd_ehrhart(path, k, as_json);
    if (vf->parsed())
      return cmd_verify(max_vertices, max_edges, tutte, max_base_vertices, max_base_edges, seed,
                        dedup, jobs, as_json);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
