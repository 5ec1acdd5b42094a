#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rexlab/constructions.hpp"
#include "rexlab/field.hpp"
#include "rexlab/numtheory.hpp"
#include "rexlab/verify.hpp"

using namespace rexlab;

TEST_CASE("abelian group indexing") {
  AbelianGroup G{{3, 5}};
  CHECK(G.size() == 15);
  for (std::int64_t i = 0; i < 15; ++i) CHECK(G.index(G.element(i)) == i);
  CHECK(G.add(G.index({1, 4}), G.index({2, 3})) == G.index({0, 2}));
  CHECK(G.neg(G.index({1, 2})) == G.index({2, 3}));
  CHECK(G.add(G.index({1, 2}), G.neg(G.index({1, 2}))) == 0);
}

TEST_CASE("cayley sum graphs") {
  AbelianGroup z4{{4}};
  Graph m = cayley_sum(z4, {1}, true);
  CHECK(m.edge_count() == 2);
  CHECK(m.has_edge(0, 1));
  CHECK(m.has_edge(2, 3));
  CHECK(m.loop_count() == 0);
  for (int v = 0; v < 4; ++v) CHECK(m.degree(v) == 1);

  AbelianGroup z5{{5}};
  Graph g = cayley_sum(z5, {0}, true);
  CHECK(g.has_loop(0));
  CHECK(g.has_edge(1, 4));
  CHECK(g.has_edge(2, 3));
  CHECK(g.edge_count() == 2);

  Graph empty = cayley_sum(z5, {}, true);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.loop_count() == 0);

  // loop-inclusive degree is |S| at every vertex
  AbelianGroup G{{2, 6}};
  std::vector<std::int64_t> S = {0, 3, 7, 10};
  Graph c = cayley_sum(G, S, true);
  for (int v = 0; v < c.n(); ++v) CHECK(c.degree(v) == 4);
}

TEST_CASE("bipartite sum graphs") {
  auto A3 = bose_chowla(3);
  Graph b = bipartite_sum(30, A3.elements, A3);
  CHECK(b.n() == 60);
  CHECK(check_regular(b) == 3);
  CHECK(max_codegree(b, 2) <= 1);  // C4-free
  CHECK(b.part_sizes == std::vector<int>{30, 30});

  DifferenceSet single{{1}, 5, 1};
  Graph pm = bipartite_sum(10, {1}, single);
  CHECK(pm.n() == 20);
  CHECK(check_regular(pm) == 1);

  auto q13 = quotient_set(13, 2);
  std::vector<std::int64_t> sub(q13.elements.begin(), q13.elements.begin() + 12);
  Graph k = bipartite_sum(168, sub, q13);
  CHECK(k.n() == 336);
  CHECK(check_regular(k) == 12);
  CHECK(max_codegree(k, 2) <= 4);  // K_{2,5}-free

  CHECK_THROWS_AS(bipartite_sum(10, {1}, q13), std::invalid_argument);  // modulus 84 > 5
  CHECK_THROWS_AS(bipartite_sum(168, {2}, q13), std::invalid_argument); // 2 not in the set
}

TEST_CASE("H graphs") {
  Graph h52 = h_graph(5, 2);
  CHECK(h52.n() == 10);
  auto hist = degree_histogram(h52);
  CHECK(hist[3] == 4);
  CHECK(hist[4] == 6);
  CHECK(max_codegree(h52, 2) <= 2);  // K_{2,3}-free
  CHECK(h52.absolute_points.size() == 4);

  Graph h54 = h_graph(5, 4);
  CHECK(h54.n() == 5);
  auto hist2 = degree_histogram(h54);
  CHECK(hist2[3] == 4);
  CHECK(hist2[4] == 1);

  Graph h132 = h_graph(13, 2);
  CHECK(h132.n() == 78);
  auto hist3 = degree_histogram(h132);
  CHECK(hist3[11] == 12);
  CHECK(hist3[12] == 66);
  CHECK(max_codegree(h132, 2) <= 2);
}

TEST_CASE("H graph absolute points match the closed form") {
  // absolute points are (x, 2^{-1} theta^{2x} mu^r) over x and r
  for (auto [p, t] : std::vector<std::pair<std::int64_t, int>>{{5, 2}, {5, 4}, {13, 2}, {13, 4}}) {
    FiniteField F = gf(p, 1);
    const std::int64_t n1 = (p - 1) / t;
    AbelianGroup G{{n1, p}};
    const std::int64_t half = F.inv(2);
    const std::int64_t mu = F.gen_pow(n1);
    std::set<std::int64_t> expect;
    for (std::int64_t x = 0; x < n1; ++x)
      for (int r = 0; r < t; ++r)
        expect.insert(G.index({x, F.mul(half, F.mul(F.gen_pow(2 * x), F.pow(mu, r)))}));
    Graph h = h_graph(p, t);
    std::set<std::int64_t> got(h.absolute_points.begin(), h.absolute_points.end());
    CHECK(got == expect);
  }
}

TEST_CASE("no vertex adjacent to more than 2t absolute points") {
  for (auto [p, t] : std::vector<std::pair<std::int64_t, int>>{{5, 2}, {7, 2}, {13, 2}, {13, 4}}) {
    Graph h = h_graph(p, t);
    std::set<int> abs(h.absolute_points.begin(), h.absolute_points.end());
    for (int v = 0; v < h.n(); ++v) {
      int c = 0;
      for (int w : h.neighbors(v)) c += abs.count(w);
      CHECK(c <= 2 * t);
    }
  }
}

TEST_CASE("H star graphs") {
  Graph s52 = h_star(5, 2);
  CHECK(s52.n() == 11);
  CHECK(check_regular(s52) == 4);
  CHECK(max_codegree(s52, 2) <= 4);  // K_{2,5}-free

  Graph s54 = h_star(5, 4);
  CHECK(s54.n() == 6);
  CHECK(check_regular(s54) == 4);

  Graph s132 = h_star(13, 2);
  CHECK(s132.n() == 79);
  CHECK(check_regular(s132) == 12);
  CHECK(max_codegree(s132, 2) <= 4);
}

TEST_CASE("Brown graphs") {
  Graph b3 = brown(3);
  CHECK(b3.n() == 27);
  CHECK(check_regular(b3) == 6);
  CHECK(max_codegree(b3, 3) <= 2);  // K_{3,3}-free
  // alpha = 1 for p = 3: eta(1) = +1 = -eta(2)
  FiniteField f3 = gf(3, 1);
  CHECK(f3.quad_char(1) == -f3.quad_char(2));

  Graph b5 = brown(5);
  CHECK(b5.n() == 125);
  CHECK(check_regular(b5) == 20);

  CHECK_THROWS_AS(brown(2), std::invalid_argument);
  CHECK_THROWS_AS(brown(17), std::invalid_argument);
}

TEST_CASE("norm graphs") {
  Graph n32 = norm_graph(3, 2, false);
  CHECK(n32.n() == 9);
  CHECK(n32.absolute_points.size() == 4);
  auto hist = degree_histogram(n32);
  CHECK(hist[3] == 4);
  CHECK(hist[4] == 5);
  CHECK(max_codegree(n32, 2) <= 2);  // K_{2,3}-free

  Graph n33 = norm_graph(3, 3, false);
  CHECK(n33.n() == 27);
  CHECK(n33.absolute_points.size() == 13);
  auto hist2 = degree_histogram(n33);
  CHECK(hist2[13] == 14);
  CHECK(hist2[12] == 13);
  CHECK(max_codegree(n33, 3) <= 6);  // K_{3,7}-free

  Graph n52 = norm_graph(5, 2, false);
  CHECK(n52.n() == 25);
  CHECK(n52.absolute_points.size() == 6);
  auto hist3 = degree_histogram(n52);
  CHECK(hist3[5] == 6);
  CHECK(hist3[6] == 19);

  // loop-inclusive variant is regular, loops exactly at absolute points
  Graph o33 = norm_graph(3, 3, true);
  CHECK(check_regular(o33) == 13);
  CHECK(o33.loops() == o33.absolute_points);

  CHECK_THROWS_AS(norm_graph(2, 2, false), std::invalid_argument);
  CHECK_THROWS_AS(norm_graph(3, 4, false), std::invalid_argument);
  CHECK_THROWS_AS(norm_graph(13, 3, false), std::invalid_argument);  // 2197 > 2000
}

TEST_CASE("polarity and Parsons graphs") {
  auto p5 = er_polarity(5);
  CHECK(p5.er.n() == 31);
  CHECK(p5.er.absolute_points.size() == 6);  // q+1 self-polar points
  CHECK(p5.r1.n() == 15);
  CHECK(check_regular(p5.r1) == 2);
  CHECK(max_codegree(p5.r1, 2) <= 1);
  CHECK(p5.r2.n() == 10);
  CHECK(check_regular(p5.r2) == 3);
  CHECK(max_codegree(p5.r2, 2) <= 1);

  auto p7 = er_polarity(7);
  CHECK(p7.r1.n() == 28);
  CHECK(check_regular(p7.r1) == 3);
  CHECK(p7.r2.n() == 21);
  CHECK(check_regular(p7.r2) == 4);

  auto p13 = er_polarity(13);
  CHECK(p13.r1.n() == 91);
  CHECK(check_regular(p13.r1) == 6);
  CHECK(max_codegree(p13.r1, 2) <= 1);

  CHECK_THROWS_AS(er_polarity(2), std::invalid_argument);
  CHECK_THROWS_AS(er_polarity(9), std::invalid_argument);
}
