#include "rexlab/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rexlab/verify.hpp"

namespace rexlab {

std::vector<std::int64_t> AbelianGroup::element(std::int64_t idx) const {
  std::vector<std::int64_t> e(orders.size());
  for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
    e[i] = idx % orders[i];
    idx /= orders[i];
  }
  return e;
}

std::int64_t AbelianGroup::index(const std::vector<std::int64_t>& e) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i)
    idx = idx * orders[i] + ((e[i] % orders[i]) + orders[i]) % orders[i];
  return idx;
}

std::int64_t AbelianGroup::add(std::int64_t a, std::int64_t b) const {
  std::int64_t idx = 0;
  std::vector<std::int64_t> ea = element(a), eb = element(b);
  for (std::size_t i = 0; i < orders.size(); ++i)
    idx = idx * orders[i] + (ea[i] + eb[i]) % orders[i];
  return idx;
}

std::int64_t AbelianGroup::neg(std::int64_t a) const {
  std::int64_t idx = 0;
  std::vector<std::int64_t> e = element(a);
  for (std::size_t i = 0; i < orders.size(); ++i)
    idx = idx * orders[i] + (orders[i] - e[i]) % orders[i];
  return idx;
}

Graph cayley_sum(const AbelianGroup& G, const std::vector<std::int64_t>& S,
                 bool keep_loops) {
  const std::int64_t n = G.size();
  std::vector<char> in_s(n, 0);
  for (auto s : S) {
    if (s < 0 || s >= n) throw std::invalid_argument("connection set element out of range");
    if (in_s[s]) throw std::invalid_argument("duplicate connection set element");
    in_s[s] = 1;
  }
  Graph g(static_cast<int>(n));
  g.labels.resize(n);
  for (std::int64_t v = 0; v < n; ++v) g.labels[v] = G.element(v);
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u + 1; v < n; ++v)
      if (in_s[G.add(u, v)]) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    if (keep_loops && in_s[G.add(u, u)]) g.add_loop(static_cast<int>(u));
  }
  if (keep_loops) {
    // loop-inclusive degree is |S| everywhere; checked on every build
    for (std::int64_t v = 0; v < n; ++v)
      if (g.degree(static_cast<int>(v)) != static_cast<int>(S.size()))
        throw std::logic_error("cayley sum degree invariant violated");
  }
  return g;
}

Graph bipartite_sum(std::int64_t M, const std::vector<std::int64_t>& A,
                    const DifferenceSet& provenance) {
  if (provenance.modulus > M / 2)
    throw std::invalid_argument("embedding condition violated: modulus > floor(M/2)");
  std::set<std::int64_t> prov(provenance.elements.begin(), provenance.elements.end());
  std::vector<char> in_a(M, 0);
  for (auto a : A) {
    if (!prov.count(a)) throw std::invalid_argument("A is not a subset of the difference set");
    std::int64_t rep = (a == 0) ? provenance.modulus : a;  // view in {1,...,floor(M/2)}
    in_a[rep % M] = 1;
  }
  Graph g(static_cast<int>(2 * M));
  for (std::int64_t x = 0; x < M; ++x)
    for (std::int64_t y = 0; y < M; ++y)
      if (in_a[(x + y) % M]) g.add_edge(static_cast<int>(x), static_cast<int>(M + y));
  g.part_sizes = {static_cast<int>(M), static_cast<int>(M)};
  return g;
}

namespace {

// Connection set of H_{p,t}: {(a mod (p-1)/t, theta^a) : a in Z_{p-1}}.
std::vector<std::int64_t> h_connection_set(const FiniteField& Fp, std::int64_t p, int t,
                                           const AbelianGroup& G) {
  std::vector<std::int64_t> S;
  const std::int64_t r = (p - 1) / t;
  for (std::int64_t a = 0; a < p - 1; ++a) S.push_back(G.index({a % r, Fp.gen_pow(a)}));
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  return S;
}

}  // namespace

Graph h_graph(std::int64_t p, int t) {
  if (p < 3) throw std::invalid_argument("p must be an odd prime");
  if (t < 1 || (p - 1) % t != 0) throw std::invalid_argument("t must divide p-1");
  FiniteField Fp = gf(p, 1);
  AbelianGroup G{{(p - 1) / t, p}};
  auto S = h_connection_set(Fp, p, t, G);
  Graph g = cayley_sum(G, S, /*keep_loops=*/false);
  std::vector<char> in_s(G.size(), 0);
  for (auto s : S) in_s[s] = 1;
  for (std::int64_t v = 0; v < G.size(); ++v)
    if (in_s[G.add(v, v)]) g.absolute_points.push_back(static_cast<int>(v));
  return g;
}

Graph h_star(std::int64_t p, int t) {
  Graph h = h_graph(p, t);
  Graph g(h.n() + 1);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  for (int v : h.absolute_points) g.add_edge(v, h.n());
  g.labels = h.labels;
  g.labels.push_back({});  // apex
  return g;
}

Graph brown(std::int64_t p) {
  if (p % 2 == 0) throw std::invalid_argument("p must be odd");
  if (p > 13) throw std::invalid_argument("Brown graph capped at p <= 13");
  FiniteField Fp = gf(p, 1);
  std::int64_t alpha = -1;
  const int target = -Fp.quad_char(p - 1);  // -eta(-1)
  for (std::int64_t a = 1; a < p; ++a)
    if (Fp.quad_char(a) == target) {
      alpha = a;
      break;
    }
  const std::int64_t n = p * p * p;
  Graph g(static_cast<int>(n));
  g.labels.resize(n);
  auto coord = [p](std::int64_t v) {
    return std::vector<std::int64_t>{v / (p * p), (v / p) % p, v % p};
  };
  for (std::int64_t v = 0; v < n; ++v) g.labels[v] = coord(v);
  for (std::int64_t u = 0; u < n; ++u) {
    auto cu = coord(u);
    for (std::int64_t v = u + 1; v < n; ++v) {
      auto cv = coord(v);
      std::int64_t s = 0;
      for (int i = 0; i < 3; ++i) {
        std::int64_t d = cu[i] - cv[i];
        s += d * d;
      }
      if (s % p == alpha) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return g;
}

Graph norm_graph(std::int64_t p, int s, bool with_loops) {
  if (p % 2 == 0) throw std::invalid_argument("norm graphs require odd characteristic");
  if (s != 2 && s != 3) throw std::invalid_argument("s must be 2 or 3");
  std::int64_t q = 1;
  for (int i = 0; i < s; ++i) q *= p;
  if (q > 2000) throw std::invalid_argument("norm graph capped at p^s <= 2000");
  FiniteField F = gf(p, s);
  // N(x) = 1 iff dlog(x) is divisible by p-1
  std::vector<std::int64_t> S1;
  for (std::int64_t x = 1; x < q; ++x)
    if (F.dlog(x) % (p - 1) == 0) S1.push_back(x);
  std::vector<char> in_s(q, 0);
  for (auto x : S1) in_s[x] = 1;
  Graph g(static_cast<int>(q));
  g.labels.resize(q);
  for (std::int64_t v = 0; v < q; ++v) g.labels[v] = F.coeffs(v);
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = a + 1; b < q; ++b)
      if (in_s[F.add(a, b)]) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    if (in_s[F.add(a, a)]) {
      g.absolute_points.push_back(static_cast<int>(a));
      if (with_loops) g.add_loop(static_cast<int>(a));
    }
  }
  return g;
}

PolarityGraphs er_polarity(std::int64_t q) {
  if (q < 3 || q > 31 || !is_prime(q)) throw std::invalid_argument("q must be an odd prime <= 31");
  FiniteField Fp = gf(q, 1);
  // normalized projective points: (1,y,z), (0,1,z), (0,0,1)
  std::vector<std::vector<std::int64_t>> pts;
  for (std::int64_t y = 0; y < q; ++y)
    for (std::int64_t z = 0; z < q; ++z) pts.push_back({1, y, z});
  for (std::int64_t z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  const int n = static_cast<int>(pts.size());
  auto dot = [&](int a, int b) {
    std::int64_t s = 0;
    for (int i = 0; i < 3; ++i) s += pts[a][i] * pts[b][i];
    return s % q;
  };
  Graph er(n);
  er.labels = pts;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v)
      if (dot(u, v) == 0) er.add_edge(u, v);
    if (dot(u, u) == 0) er.absolute_points.push_back(u);
  }

  // split non-self-polar points by the quadratic character of x.x
  std::vector<int> plus, minus;
  for (int v = 0; v < n; ++v) {
    std::int64_t d = dot(v, v);
    if (d == 0) continue;
    (Fp.quad_char(d) == 1 ? plus : minus).push_back(v);
  }
  auto induce = [&](const std::vector<int>& verts) {
    Graph g(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
      g.labels.push_back(pts[verts[i]]);
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (er.has_edge(verts[i], verts[j]))
          g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
  };
  Graph ga = induce(plus), gb = induce(minus);
  const std::int64_t n1 = (q + 1) * q / 2, n2 = q * (q - 1) / 2;
  // R1 on C(q+1,2) vertices is (q-1)/2-regular; R2 on C(q,2) vertices is
  // (q+1)/2-regular (forced by parity: C(q,2)*(q-1)/2 is odd when
  // q == 3 mod 4).  Both must come out C4-free.
  auto parsons_ok = [&](const Graph& g, std::int64_t want_n, std::int64_t want_d) {
    auto d = check_regular(g);
    return g.n() == want_n && d && *d == want_d && max_codegree(g, 2, 1) <= 1;
  };
  PolarityGraphs out;
  out.er = std::move(er);
  // assign R1/R2 by measured vertex count, falling back to the
  // complementary assignment before failing
  for (bool swapped : {false, true}) {
    const Graph& cand1 = swapped ? gb : ga;
    const Graph& cand2 = swapped ? ga : gb;
    if (parsons_ok(cand1, n1, (q - 1) / 2) && parsons_ok(cand2, n2, (q + 1) / 2)) {
      out.r1 = cand1;
      out.r2 = cand2;
      return out;
    }
  }
  throw std::runtime_error("Parsons contract verification failed");
}

}  // namespace rexlab
