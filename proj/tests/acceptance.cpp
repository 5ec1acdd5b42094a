// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  All expected values are exact contracts re-checked here with
// independent oracles.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rexlab/constructions.hpp"
#include "rexlab/field.hpp"
#include "rexlab/graph.hpp"
#include "rexlab/numtheory.hpp"
#include "rexlab/regularize.hpp"
#include "rexlab/verify.hpp"

using namespace rexlab;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << idx << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool crit1_h_star() {
  for (std::int64_t p : {5, 13, 17}) {
    for (int t = 1; t <= 4; ++t) {
      if ((p - 1) % t != 0) continue;
      Graph g = h_star(p, t);
      if (g.n() != p * (p - 1) / t + 1) return false;
      if (check_regular(g) != std::optional<int>(static_cast<int>(p - 1))) return false;
      if (max_codegree(g, 2) > 2 * t) return false;
    }
  }
  return true;
}

bool crit2_brown() {
  for (std::int64_t p : {3, 5, 7}) {
    Graph g = brown(p);
    if (g.n() != p * p * p) return false;
    if (check_regular(g) != std::optional<int>(static_cast<int>(p * p - p))) return false;
    if (max_codegree(g, 3) > 2) return false;
  }
  return true;
}

std::int64_t repunit(std::int64_t p, int s) {
  std::int64_t d = 0, q = 1;
  for (int i = 0; i < s; ++i) {
    d += q;
    q *= p;
  }
  return d;  // (p^s - 1)/(p - 1)
}

std::int64_t factorial(int s) {
  std::int64_t f = 1;
  for (int i = 2; i <= s; ++i) f *= i;
  return f;
}

const std::vector<std::pair<std::int64_t, int>> kNormCases = {{3, 2}, {5, 2}, {7, 2}, {3, 3}};

bool crit3_norm() {
  for (auto [p, s] : kNormCases) {
    Graph g = norm_graph(p, s, true);
    const std::int64_t d = repunit(p, s);
    if (check_regular(g) != std::optional<int>(static_cast<int>(d))) return false;
    if (static_cast<std::int64_t>(g.absolute_points.size()) != d) return false;
    if (max_codegree(g, s) > factorial(s)) return false;
  }
  return true;
}

bool crit4_spectral() {
  for (auto [p, s] : kNormCases) {
    Graph g = norm_graph(p, s, true);
    auto numeric = adjacency_spectrum(g);
    const double bound = std::pow(static_cast<double>(p), s / 2.0);
    for (std::size_t i = 0; i + 1 < numeric.eigenvalues.size(); ++i)
      if (std::abs(numeric.eigenvalues[i]) > bound + 1e-9) return false;

    FiniteField F = gf(p, s);
    std::vector<std::int64_t> S1;
    for (std::int64_t x = 1; x < F.q(); ++x)
      if (F.dlog(x) % (p - 1) == 0) S1.push_back(x);
    AbelianGroup G{std::vector<std::int64_t>(s, p)};
    auto chars = cayley_spectrum(G, S1);
    if (chars.eigenvalues.size() != numeric.eigenvalues.size()) return false;
    for (std::size_t i = 0; i < chars.eigenvalues.size(); ++i)
      if (std::abs(chars.eigenvalues[i] - numeric.eigenvalues[i]) > 1e-6) return false;
  }
  return true;
}

bool crit5_gauss() {
  std::vector<std::pair<std::int64_t, int>> fields;
  for (std::int64_t p = 2; p <= 121; ++p) {
    if (!is_prime(p)) continue;
    std::int64_t q = p;
    for (int m = 1; q <= 121; ++m, q *= p)
      if (m <= 4) fields.push_back({p, m});
  }
  for (auto [p, m] : fields) {
    FiniteField F = gf(p, m);
    const std::int64_t q = F.q();
    const double root = std::sqrt(static_cast<double>(q));
    for (std::int64_t h = 1; h < q; ++h) {
      if ((q - 1) % h != 0) continue;
      for (std::int64_t b = 1; b < q; ++b)
        if (std::abs(F.subgroup_char_sum(h, b)) > root + 1e-9) return false;
    }
    for (std::int64_t j = 1; j < q - 1; ++j)
      for (std::int64_t b = 1; b < q; ++b)
        if (std::abs(std::abs(F.gauss_sum(j, b)) - root) >= 1e-9) return false;
  }
  return true;
}

bool crit6_sidon() {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    auto A = bose_chowla(p);
    if (static_cast<std::int64_t>(A.elements.size()) != p) return false;
    if (max_difference_count(A.elements, A.modulus) != 1) return false;
  }
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (int t = 1; t < p; ++t) {
      if ((p - 1) % t != 0) continue;
      auto Q = quotient_set(p, t);
      if (static_cast<std::int64_t>(Q.elements.size()) != p) return false;
      if (max_difference_count(Q.elements, Q.modulus) > t) return false;
    }
  }
  return true;
}

bool crit7_factorization() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> pick_n(8, 60), pick_k(1, 4);
  auto is_connected = [](const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    return cnt == g.n();
  };
  int done = 0;
  while (done < 50) {
    int d = 2 * pick_k(rng), n = pick_n(rng);
    if (n < 3 * d) continue;
    Graph g(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    bool ok = true;
    for (int c = 0; c < d / 2 && ok; ++c) {
      bool placed = false;
      for (int attempt = 0; attempt < 5000 && !placed; ++attempt) {
        std::shuffle(perm.begin(), perm.end(), rng);
        bool clean = true;
        for (int i = 0; i < n && clean; ++i)
          if (g.has_edge(perm[i], perm[(i + 1) % n])) clean = false;
        if (!clean) continue;
        for (int i = 0; i < n; ++i) g.add_edge(perm[i], perm[(i + 1) % n]);
        placed = true;
      }
      ok = placed;
    }
    if (!ok || !is_connected(g)) continue;
    ++done;
    std::set<std::pair<int, int>> seen;
    Graph cur = g;
    for (int i = 0; i < d / 2; ++i) {
      auto tf = two_factor(cur);
      std::vector<int> deg(n, 0);
      for (auto [u, v] : tf.edges) {
        if (!cur.has_edge(u, v)) return false;
        if (seen.count({u, v})) return false;
        seen.insert({u, v});
        deg[u]++;
        deg[v]++;
        cur.remove_edge(u, v);
      }
      for (int v = 0; v < n; ++v)
        if (deg[v] != 2) return false;
    }
    if (cur.edge_count() != 0) return false;
  }
  if (hamilton_cycle(petersen_graph()).has_value()) return false;
  for (int n = 3; n <= 12; ++n) {
    for (const Graph& g : {cycle_graph(n), complete_graph(n)}) {
      auto hc = hamilton_cycle(g);
      if (!hc || static_cast<int>(hc->edges.size()) != n) return false;
      std::vector<int> deg(n, 0);
      for (auto [u, v] : hc->edges) {
        if (!g.has_edge(u, v)) return false;
        deg[u]++;
        deg[v]++;
      }
      for (int v = 0; v < n; ++v)
        if (deg[v] != 2) return false;
    }
  }
  return true;
}

bool crit8_degree_sequences() {
  Graph n33 = norm_graph(3, 3, false);
  auto a = equalize_norm_component(n33, 1, EqualizeVariant::a);
  if (degree_histogram(a.graph) != std::map<int, int>{{10, 13}, {11, 14}}) return false;
  auto b = equalize_norm_component(n33, 1, EqualizeVariant::b);
  if (degree_histogram(b.graph) != std::map<int, int>{{11, 12}, {12, 15}}) return false;
  return true;
}

bool crit9_pipelines() {
  {
    auto r = pipeline_c4(71);
    if (r.graph.n() != 71 || check_regular(r.graph) != std::optional<int>(2)) return false;
    if (max_codegree(r.graph, 2) > 1) return false;
  }
  {
    auto r = pipeline_c4(60);
    if (r.graph.n() != 60 || check_regular(r.graph) != std::optional<int>(3)) return false;
    if (max_codegree(r.graph, 2) > 1) return false;
  }
  {
    auto r = pipeline_k2t(415, 2);
    if (r.graph.n() != 415 || check_regular(r.graph) != std::optional<int>(12)) return false;
    if (max_codegree(r.graph, 2) > 4) return false;
  }
  {
    auto r = pipeline_k33(179);
    if (r.graph.n() != 179 || check_regular(r.graph) != std::optional<int>(6)) return false;
    if (r.graph.edge_count() != 537 || max_codegree(r.graph, 3) > 2) return false;
  }
  {
    auto r = pipeline_kst(81, 3, 7);
    if (r.graph.n() != 81 || check_regular(r.graph) != std::optional<int>(12)) return false;
    if (r.graph.edge_count() != 486 || max_codegree(r.graph, 3) > 6) return false;
  }
  auto infeasible = [](auto&& call) {
    try {
      call();
    } catch (const InfeasibleError&) {
      return true;
    }
    return false;
  };
  if (!infeasible([] { pipeline_c4(5); })) return false;
  if (!infeasible([] { pipeline_kst(179, 3, 7); })) return false;
  if (!infeasible([] { pipeline_k33(30); })) return false;
  return true;
}

bool crit10_laplacian() {
  Graph loopless = norm_graph(3, 3, false);
  Graph with_loops = norm_graph(3, 3, true);
  auto a = laplacian_spectrum(loopless);
  auto b = laplacian_spectrum(with_loops);
  for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
    if (std::abs(a.eigenvalues[i] - b.eigenvalues[i]) > 1e-9) return false;

  auto hc = hamilton_cycle(loopless);
  if (!hc) return false;
  Graph stripped = loopless;
  for (auto [u, v] : hc->edges) stripped.remove_edge(u, v);
  auto c = laplacian_spectrum(stripped);
  for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
    if (std::abs(a.eigenvalues[i] - c.eigenvalues[i]) >= 4.0) return false;
  return true;
}

}  // namespace

int main() {
  report(1, "h_star contracts", crit1_h_star());
  report(2, "brown contracts", crit2_brown());
  report(3, "norm graph contracts", crit3_norm());
  report(4, "spectral bound and character spectra", crit4_spectral());
  report(5, "character and gauss sums", crit5_gauss());
  report(6, "sidon and quotient certification", crit6_sidon());
  report(7, "factorization engine", crit7_factorization());
  report(8, "equalized degree sequences", crit8_degree_sequences());
  report(9, "end-to-end pipelines", crit9_pipelines());
  report(10, "laplacian identity and movement", crit10_laplacian());
  if (failures) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
