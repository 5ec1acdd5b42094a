#ifndef REXLAB_VERIFY_HPP
#define REXLAB_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rexlab/constructions.hpp"
#include "rexlab/graph.hpp"

namespace rexlab {

/// Brute-force codegree oracle: maximum over s-subsets of vertices of the
/// number of common neighbors (loops never count).  G is K_{s,t}-free iff
/// the result is at most t-1.  Exhaustive for s <= 3; s >= 4 only for
/// n <= 64.  With stop_at set, returns early once a value > stop_at is
/// seen (the return value is then only a witness, not the maximum).
int max_codegree(const Graph& g, int s, std::optional<int> stop_at = std::nullopt);

/// K_{s,t}-freeness via the codegree oracle, with early exit.
bool is_kst_free(const Graph& g, int s, int t);

std::map<int, int> degree_histogram(const Graph& g);

/// Common degree (loop counted once) if the graph is regular.
std::optional<int> check_regular(const Graph& g);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  std::string method;               // "numeric" or "character_sum"
};

/// Eigenvalues of the symmetric 0/1 adjacency matrix with 1 on the
/// diagonal at loops, by cyclic Jacobi rotations.  n <= 2000.
SpectrumResult adjacency_spectrum(const Graph& g);

/// Eigenvalues of the combinatorial Laplacian D - A; loops contribute
/// equally to D and A and cancel.  n <= 2000.
SpectrumResult laplacian_spectrum(const Graph& g);

/// Spectrum of cayley_sum(G, S, keep_loops) assembled from character
/// sums: real characters contribute chi(S), conjugate pairs contribute
/// +|chi(S)| and -|chi(S)|.  |G| <= 5000.
SpectrumResult cayley_spectrum(const AbelianGroup& G, const std::vector<std::int64_t>& S);

struct SpectralGapReport {
  int n = 0;
  double average_degree = 0.0;
  double max_gap = 0.0;  // max over i>0 of |d - mu_i|
  std::optional<double> norm_graph_bound;  // q^{s/2} + 1 + 6j when known
  double butler_chung_ratio = 0.0;         // informational only
  int removed_cycles = 0;
};

/// Laplacian spectral-gap diagnostic.  norm_q/norm_s, when given, supply
/// the provenance for the q^{s/2} + 1 + 6j bound.  Requires G connected.
SpectralGapReport spectral_gap_report(const Graph& g, int removed_cycles = 0,
                                      std::optional<std::int64_t> norm_q = std::nullopt,
                                      std::optional<int> norm_s = std::nullopt);

}  // namespace rexlab

#endif
