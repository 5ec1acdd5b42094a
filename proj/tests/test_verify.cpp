#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rexlab/constructions.hpp"
#include "rexlab/field.hpp"
#include "rexlab/graph.hpp"
#include "rexlab/verify.hpp"

using namespace rexlab;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("codegree oracle") {
  CHECK(max_codegree(complete_graph(4), 2) == 2);
  CHECK(max_codegree(cycle_graph(5), 2) == 1);
  CHECK(max_codegree(cycle_graph(5), 1) == 2);
  CHECK(max_codegree(brown(3), 3) <= 2);
  // loops never count as common neighbors
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_loop(1);
  CHECK(max_codegree(g, 2) == 1);
  CHECK(max_codegree(g, 1) == 2);

  CHECK(is_kst_free(cycle_graph(5), 2, 2));
  CHECK_FALSE(is_kst_free(complete_graph(4), 2, 2));

  // deep recursion path (s >= 4) against the small-n guard
  CHECK(max_codegree(complete_graph(6), 4) == 2);
  CHECK_THROWS_AS(max_codegree(complete_graph(70), 4), std::invalid_argument);
}

TEST_CASE("degree histogram and regularity") {
  CHECK(degree_histogram(cycle_graph(7)) == std::map<int, int>{{2, 7}});
  auto h = degree_histogram(h_graph(5, 2));
  CHECK(h == std::map<int, int>{{3, 4}, {4, 6}});
  CHECK_FALSE(check_regular(h_graph(5, 2)).has_value());
  CHECK(check_regular(h_star(5, 2)) == 4);
  CHECK(check_regular(cycle_graph(7)) == 2);
}

TEST_CASE("adjacency spectra") {
  auto k3 = adjacency_spectrum(complete_graph(3));
  REQUIRE(k3.eigenvalues.size() == 3);
  CHECK(k3.eigenvalues[0] == doctest::Approx(-1).epsilon(kTol));
  CHECK(k3.eigenvalues[1] == doctest::Approx(-1).epsilon(kTol));
  CHECK(k3.eigenvalues[2] == doctest::Approx(2).epsilon(kTol));
  CHECK(k3.method == "numeric");

  Graph pm(4);
  pm.add_edge(0, 1);
  pm.add_edge(2, 3);
  auto s = adjacency_spectrum(pm);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1).epsilon(kTol));
  CHECK(s.eigenvalues[3] == doctest::Approx(1).epsilon(kTol));

  // loop-inclusive norm graph: top eigenvalue is the degree, rest within sqrt(q^s)
  auto n32 = adjacency_spectrum(norm_graph(3, 2, true));
  CHECK(n32.eigenvalues.back() == doctest::Approx(4).epsilon(1e-8));
  for (std::size_t i = 0; i + 1 < n32.eigenvalues.size(); ++i)
    CHECK(std::abs(n32.eigenvalues[i]) <= 3.0 + kTol);

  // trace check: eigenvalue sum equals the diagonal loop count
  double tr = 0;
  for (double ev : n32.eigenvalues) tr += ev;
  CHECK(tr == doctest::Approx(norm_graph(3, 2, true).loop_count()).epsilon(1e-6));
}

TEST_CASE("laplacian spectra") {
  auto k2 = laplacian_spectrum(complete_graph(2));
  CHECK(k2.eigenvalues[0] == doctest::Approx(0).epsilon(kTol));
  CHECK(k2.eigenvalues[1] == doctest::Approx(2).epsilon(kTol));

  auto two = laplacian_spectrum(disjoint_union({complete_graph(3), complete_graph(3)}));
  CHECK(std::abs(two.eigenvalues[0]) < kTol);
  CHECK(std::abs(two.eigenvalues[1]) < kTol);
  CHECK(two.eigenvalues[2] > 0.5);

  // loops cancel in D - A
  auto a = laplacian_spectrum(norm_graph(3, 3, false));
  auto b = laplacian_spectrum(norm_graph(3, 3, true));
  for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
    CHECK(a.eigenvalues[i] == doctest::Approx(b.eigenvalues[i]).epsilon(kTol));
}

TEST_CASE("character-sum Cayley spectra") {
  AbelianGroup z4{{4}};
  auto s = cayley_spectrum(z4, {1});
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(s.method == "character_sum");
  CHECK(s.eigenvalues[0] == doctest::Approx(-1).epsilon(kTol));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1).epsilon(kTol));
  CHECK(s.eigenvalues[2] == doctest::Approx(1).epsilon(kTol));
  CHECK(s.eigenvalues[3] == doctest::Approx(1).epsilon(kTol));

  auto z = cayley_spectrum(z4, {});
  for (double ev : z.eigenvalues) CHECK(std::abs(ev) < kTol);

  // norm-1 connection set over the additive group of GF(27)
  FiniteField F = gf(3, 3);
  std::vector<std::int64_t> S1;
  for (std::int64_t x = 1; x < 27; ++x)
    if (F.dlog(x) % 2 == 0) S1.push_back(x);
  AbelianGroup G{{3, 3, 3}};
  auto cs = cayley_spectrum(G, S1);
  CHECK(cs.eigenvalues.back() == doctest::Approx(13).epsilon(1e-8));
  for (std::size_t i = 0; i + 1 < cs.eigenvalues.size(); ++i)
    CHECK(std::abs(cs.eigenvalues[i]) <= std::sqrt(27.0) + kTol);

  // agrees with the numeric eigensolver on the same graph
  auto numeric = adjacency_spectrum(cayley_sum(G, S1, true));
  for (std::size_t i = 0; i < numeric.eigenvalues.size(); ++i)
    CHECK(cs.eigenvalues[i] == doctest::Approx(numeric.eigenvalues[i]).epsilon(1e-6));
}

TEST_CASE("spectral gap diagnostics") {
  Graph n33 = norm_graph(3, 3, false);
  auto rep = spectral_gap_report(n33, 0, 3, 3);
  CHECK(rep.n == 27);
  REQUIRE(rep.norm_graph_bound.has_value());
  CHECK(*rep.norm_graph_bound == doctest::Approx(std::sqrt(27.0) + 1).epsilon(1e-9));
  CHECK(rep.max_gap <= *rep.norm_graph_bound);

  auto rep1 = spectral_gap_report(n33, 1, 3, 3);
  CHECK(*rep1.norm_graph_bound == doctest::Approx(std::sqrt(27.0) + 7).epsilon(1e-9));

  auto c8 = spectral_gap_report(cycle_graph(8));
  CHECK(c8.average_degree == doctest::Approx(2.0));
  CHECK(c8.max_gap == doctest::Approx(2.0).epsilon(1e-8));  // |d - mu| peaks at mu = 4

  // disconnected graphs are rejected
  CHECK_THROWS(spectral_gap_report(disjoint_union({complete_graph(3), complete_graph(3)})));
}
