#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rexlab/constructions.hpp"
#include "rexlab/graph.hpp"
#include "rexlab/numtheory.hpp"
#include "rexlab/regularize.hpp"
#include "rexlab/report.hpp"
#include "rexlab/verify.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;
constexpr int kExitInfeasible = 4;

std::int64_t default_budget() {
  if (const char* env = std::getenv("REXLAB_BUDGET")) return std::atoll(env);
  return 10000000;
}

std::int64_t factorial(int s) {
  std::int64_t f = 1;
  for (int i = 2; i <= s; ++i) f *= i;
  return f;
}

void emit(const rexlab::Graph& g, const rexlab::ReportOptions& opt,
          const std::string& out_path, const std::string& report_path) {
  if (!out_path.empty()) rexlab::write_edge_list_file(g, out_path);
  auto rep = rexlab::verification_report(g, opt);
  if (!report_path.empty()) rexlab::write_json_file(rep, report_path);
  std::cout << rep.dump(2) << "\n";
}

struct ContractFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractFailure("contract check failed: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular Turan number construction lab"};
  app.require_subcommand(1);

  std::string family, out_path, report_path, graph_path, which = "r1";
  std::int64_t n = 0, p = 0, q = 0, M = 0;
  int t = 1, s = 2, k = -1;
  bool loops = false, keep_loops = false, spectra = false;
  std::int64_t budget = default_budget();
  std::int64_t seed = 0;
  std::vector<std::int64_t> orders;
  std::vector<std::int64_t> conn_set;
  std::vector<int> free_queries;

  auto* construct = app.add_subcommand("construct", "build a single graph family");
  construct->add_option("family", family,
                        "one of: bipartite-c4, bipartite-k2t, h, h-star, brown, norm, "
                        "er-parsons, cayley-sum")
      ->required();
  construct->add_option("--p", p, "prime parameter");
  construct->add_option("--q", q, "prime parameter (er-parsons)");
  construct->add_option("--t", t, "divisor parameter t");
  construct->add_option("--s", s, "extension degree s");
  construct->add_option("--m", M, "bipartite half-size M");
  construct->add_option("--k", k, "regular degree (subset size), defaults to the full set");
  construct->add_flag("--loops", loops, "keep loops (norm graphs)");
  construct->add_flag("--keep-loops", keep_loops, "keep loops (cayley-sum)");
  construct->add_option("--orders", orders, "cyclic factor orders (cayley-sum)");
  construct->add_option("--set", conn_set, "connection set element indices (cayley-sum)");
  construct->add_option("--which", which, "er-parsons output: er, r1 or r2");
  construct->add_option("--out", out_path, "edge-list output path");
  construct->add_option("--report", report_path, "JSON report path");

  auto* pipeline = app.add_subcommand("pipeline", "run an end-to-end pipeline");
  pipeline->add_option("family", family, "one of: c4, k2t, k33, kst")->required();
  pipeline->add_option("--n", n, "vertex count")->required();
  pipeline->add_option("--t", t, "t parameter (k2t, kst)");
  pipeline->add_option("--s", s, "s parameter (kst)");
  pipeline->add_option("--budget", budget, "Hamilton search node-expansion budget");
  pipeline->add_option("--seed", seed, "search seed (recorded; search is deterministic)");
  pipeline->add_option("--out", out_path, "edge-list output path");
  pipeline->add_option("--report", report_path, "JSON report path");

  auto* verify = app.add_subcommand("verify", "verify a graph file");
  verify->add_option("file", graph_path, "edge-list file")->required();
  verify->add_option("--free", free_queries, "freeness queries as s t pairs");
  verify->add_flag("--spectra", spectra, "compute adjacency/Laplacian spectra");
  verify->add_option("--report", report_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      rexlab::ReportOptions opt;
      rexlab::Graph g;
      if (family == "bipartite-c4") {
        auto A = rexlab::bose_chowla(p);
        int kk = k < 0 ? static_cast<int>(p) : k;
        std::vector<std::int64_t> sub(A.elements.begin(), A.elements.begin() + kk);
        g = rexlab::bipartite_sum(M, sub, A);
        opt.freeness = {{2, 2}};
        require(rexlab::check_regular(g) == std::optional<int>(kk), "k-regular");
        require(rexlab::is_kst_free(g, 2, 2), "C4-free");
      } else if (family == "bipartite-k2t") {
        auto A = rexlab::quotient_set(p, t);
        int kk = k < 0 ? static_cast<int>(p) : k;
        std::vector<std::int64_t> sub(A.elements.begin(), A.elements.begin() + kk);
        g = rexlab::bipartite_sum(M, sub, A);
        opt.freeness = {{2, 2 * t + 1}};
        require(rexlab::check_regular(g) == std::optional<int>(kk), "k-regular");
        require(rexlab::is_kst_free(g, 2, 2 * t + 1), "K_{2,2t+1}-free");
      } else if (family == "h") {
        g = rexlab::h_graph(p, t);
        opt.freeness = {{2, t + 1}};
        auto hist = rexlab::degree_histogram(g);
        require(hist[static_cast<int>(p - 2)] == p - 1, "p-1 vertices of degree p-2");
        require(rexlab::is_kst_free(g, 2, t + 1), "K_{2,t+1}-free");
      } else if (family == "h-star") {
        g = rexlab::h_star(p, t);
        opt.freeness = {{2, 2 * t + 1}};
        require(rexlab::check_regular(g) == std::optional<int>(static_cast<int>(p - 1)),
                "(p-1)-regular");
        require(rexlab::is_kst_free(g, 2, 2 * t + 1), "K_{2,2t+1}-free");
      } else if (family == "brown") {
        g = rexlab::brown(p);
        opt.freeness = {{3, 3}};
        require(rexlab::check_regular(g) == std::optional<int>(static_cast<int>(p * p - p)),
                "(p^2-p)-regular");
        require(rexlab::is_kst_free(g, 3, 3), "K_{3,3}-free");
      } else if (family == "norm") {
        g = rexlab::norm_graph(p, s, loops);
        std::int64_t D = 1, pw = 1;
        for (int i = 1; i < s; ++i) {
          pw *= p;
          D += pw;
        }
        opt.freeness = {{s, static_cast<int>(factorial(s)) + 1}};
        require(static_cast<std::int64_t>(g.absolute_points.size()) == D,
                "absolute point count (q^s-1)/(q-1)");
        if (loops)
          require(rexlab::check_regular(g) == std::optional<int>(static_cast<int>(D)),
                  "loop-inclusive regularity");
        require(rexlab::is_kst_free(g, s, static_cast<int>(factorial(s)) + 1),
                "K_{s,s!+1}-free");
      } else if (family == "er-parsons") {
        auto pg = rexlab::er_polarity(q ? q : p);
        g = which == "er" ? pg.er : which == "r2" ? pg.r2 : pg.r1;
        if (which != "er") opt.freeness = {{2, 2}};
      } else if (family == "cayley-sum") {
        rexlab::AbelianGroup G{orders};
        g = rexlab::cayley_sum(G, conn_set, keep_loops);
        if (keep_loops)
          require(rexlab::check_regular(g) ==
                      std::optional<int>(static_cast<int>(conn_set.size())),
                  "|S|-regular with loops counted once");
      } else {
        std::cerr << "unknown family: " << family << "\n";
        return kExitUsage;
      }
      emit(g, opt, out_path, report_path);
      return 0;
    }

    if (pipeline->parsed()) {
      rexlab::PipelineResult res;
      std::vector<std::pair<int, int>> freeness;
      if (family == "c4") {
        res = rexlab::pipeline_c4(n);
        freeness = {{2, 2}};
      } else if (family == "k2t") {
        res = rexlab::pipeline_k2t(n, t);
        freeness = {{2, 2 * t + 1}};
      } else if (family == "k33") {
        res = rexlab::pipeline_k33(n);
        freeness = {{3, 3}};
      } else if (family == "kst") {
        res = rexlab::pipeline_kst(n, s, t, budget);
        freeness = {{s, t}};
      } else {
        std::cerr << "unknown pipeline: " << family << "\n";
        return kExitUsage;
      }
      rexlab::ReportOptions opt;
      opt.freeness = freeness;
      opt.target_degree = res.target_bound;
      opt.construction_log = res.construction_log;
      opt.construction_log.push_back("seed " + std::to_string(seed));
      emit(res.graph, opt, out_path, report_path);
      return 0;
    }

    if (verify->parsed()) {
      if (free_queries.size() % 2 != 0) {
        std::cerr << "--free takes s t pairs\n";
        return kExitUsage;
      }
      rexlab::Graph g;
      try {
        g = rexlab::read_edge_list_file(graph_path);
      } catch (const std::exception& e) {
        std::cerr << "malformed graph file: " << e.what() << "\n";
        return kExitUsage;
      }
      rexlab::ReportOptions opt;
      for (std::size_t i = 0; i + 1 < free_queries.size(); i += 2)
        opt.freeness.push_back({free_queries[i], free_queries[i + 1]});
      opt.spectra = spectra;
      emit(g, opt, "", report_path);
      return 0;
    }
  } catch (const rexlab::InfeasibleError& e) {
    auto j = rexlab::infeasibility_report(e);
    if (!report_path.empty()) rexlab::write_json_file(j, report_path);
    std::cout << j.dump(2) << "\n";
    return kExitInfeasible;
  } catch (const ContractFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitContract;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return 0;
}
