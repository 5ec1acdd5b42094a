#ifndef REXLAB_REGULARIZE_HPP
#define REXLAB_REGULARIZE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rexlab/graph.hpp"

namespace rexlab {

/// Thrown when a pipeline cannot realize its contract at the requested
/// size.  `constraints` lists the violated conditions with numbers.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string what, std::vector<std::string> constraints)
      : std::runtime_error(std::move(what)), constraints(std::move(constraints)) {}
  std::vector<std::string> constraints;
};

enum class EdgeSubsetKind { two_factor, hamilton_cycle, matching };

struct EdgeSubset {
  std::vector<std::pair<int, int>> edges;
  EdgeSubsetKind kind = EdgeSubsetKind::matching;
};

/// A 2-factor of G (every vertex has exactly two incident subset edges),
/// via Euler-circuit orientation and a perfect matching in the derived
/// out/in bipartite graph.  Requires all degrees even and >= 2, no loops.
EdgeSubset two_factor(const Graph& g);

/// Remove k edge-disjoint 2-factors from a regular even-degree graph.
Graph strip_two_factors(const Graph& g, int k);

/// Backtracking Hamilton-cycle search, neighbors ordered by ascending
/// residual degree, with a rotation-based closing attempt at full-length
/// dead ends.  Deterministic.  Returns nullopt when the search space or
/// the node-expansion budget is exhausted.
std::optional<EdgeSubset> hamilton_cycle(const Graph& g,
                                         std::int64_t budget = 10000000);

struct EqualizedComponent {
  Graph graph;
  std::vector<int> min_degree_vertices;
};

enum class EqualizeVariant { a, b };

/// Degree equalization of a loopless norm graph per the two target degree
/// sequences: variant a removes k Hamilton cycles; variant b removes k-1
/// Hamilton cycles and then a near-perfect matching missing one absolute
/// point (taken from a final Hamilton cycle).
EqualizedComponent equalize_norm_component(const Graph& norm, int k, EqualizeVariant variant,
                                           std::int64_t budget = 10000000);

/// Perfect matching on the union of >= 3 disjoint groups in which every
/// edge joins two different groups.  Requires max group < sum of the rest
/// and even total (reported with the violated inequality otherwise).
EdgeSubset cross_matching(const std::vector<std::vector<int>>& groups);

struct PipelineResult {
  Graph graph;
  int degree = 0;
  double target_bound = 0.0;  // the theorem's leading-term degree at this n
  std::vector<std::string> construction_log;
};

PipelineResult pipeline_c4(std::int64_t n);
PipelineResult pipeline_k2t(std::int64_t n, int t);
PipelineResult pipeline_k33(std::int64_t n);
PipelineResult pipeline_kst(std::int64_t n, int s, int t, std::int64_t budget = 10000000);

}  // namespace rexlab

#endif
