#ifndef REXLAB_REPORT_HPP
#define REXLAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rexlab/graph.hpp"
#include "rexlab/regularize.hpp"

namespace rexlab {

struct ReportOptions {
  std::vector<std::pair<int, int>> freeness;  // (s, t) queries
  bool spectra = false;
  std::optional<double> target_degree;  // theorem bound at this n
  std::vector<std::string> construction_log;
};

/// VerificationReport as versioned JSON (schema 1); floats are rounded
/// to 12 significant digits.
nlohmann::json verification_report(const Graph& g, const ReportOptions& opt = {});

nlohmann::json infeasibility_report(const InfeasibleError& err);

void write_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace rexlab

#endif
