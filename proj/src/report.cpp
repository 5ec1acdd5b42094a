#include "rexlab/report.hpp"

#include <cmath>
#include <fstream>

#include "rexlab/verify.hpp"

namespace rexlab {

namespace {

double sig12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  double mag = std::pow(10.0, 11 - std::floor(std::log10(std::abs(x))));
  return std::round(x * mag) / mag;
}

}  // namespace

nlohmann::json verification_report(const Graph& g, const ReportOptions& opt) {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = g.n();
  j["edge_count"] = g.edge_count();
  j["loop_count"] = g.loop_count();
  auto reg = check_regular(g);
  if (reg)
    j["regular_degree"] = *reg;
  else
    j["regular_degree"] = nullptr;
  nlohmann::json hist = nlohmann::json::object();
  for (auto [d, c] : degree_histogram(g)) hist[std::to_string(d)] = c;
  j["degree_histogram"] = hist;
  nlohmann::json codeg = nlohmann::json::object(), freeness = nlohmann::json::object();
  for (auto [s, t] : opt.freeness) {
    int mc = max_codegree(g, s);
    codeg[std::to_string(s)] = mc;
    freeness[std::to_string(s) + "," + std::to_string(t)] = (mc <= t - 1);
  }
  j["max_codegree"] = codeg;
  j["freeness"] = freeness;
  if (opt.spectra && g.n() <= 2000) {
    auto adj = adjacency_spectrum(g);
    auto lap = laplacian_spectrum(g);
    double top = adj.eigenvalues.back();
    double max_nontrivial = 0.0;
    for (std::size_t i = 0; i + 1 < adj.eigenvalues.size(); ++i)
      max_nontrivial = std::max(max_nontrivial, std::abs(adj.eigenvalues[i]));
    j["spectral"] = {{"top_adjacency", sig12(top)},
                     {"max_nontrivial_abs", sig12(max_nontrivial)},
                     {"laplacian_second", sig12(lap.eigenvalues.size() > 1
                                                    ? lap.eigenvalues[1]
                                                    : 0.0)}};
  } else {
    j["spectral"] = nullptr;
  }
  if (opt.target_degree) {
    j["bound_comparison"] = {
        {"achieved_edges", g.edge_count()},
        {"target_degree", sig12(*opt.target_degree)},
        {"target_edges", sig12(g.n() * *opt.target_degree / 2.0)}};
  } else {
    j["bound_comparison"] = nullptr;
  }
  if (!opt.construction_log.empty()) j["construction_log"] = opt.construction_log;
  return j;
}

nlohmann::json infeasibility_report(const InfeasibleError& err) {
  nlohmann::json j;
  j["schema"] = 1;
  j["infeasible"] = true;
  j["message"] = err.what();
  j["constraints"] = err.constraints;
  return j;
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << j.dump(2) << "\n";
}

}  // namespace rexlab
