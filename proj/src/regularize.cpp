#include "rexlab/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "rexlab/constructions.hpp"
#include "rexlab/numtheory.hpp"
#include "rexlab/verify.hpp"

namespace rexlab {

namespace {

// Hopcroft-Karp maximum matching; left/right both indexed 0..n-1, edges
// given as adjacency lists on the left side.
struct BipartiteMatcher {
  int n;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> pair_u, pair_v, dist;

  explicit BipartiteMatcher(int n, const std::vector<std::vector<int>>& adj)
      : n(n), adj(adj), pair_u(n, -1), pair_v(n, -1), dist(n) {}

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < n; ++u) {
      dist[u] = pair_u[u] < 0 ? 0 : -1;
      if (pair_u[u] < 0) q.push(u);
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = pair_v[v];
        if (w < 0) {
          found = true;
        } else if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = pair_v[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        pair_u[u] = v;
        pair_v[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  }

  int run() {
    int matched = 0;
    while (bfs())
      for (int u = 0; u < n; ++u)
        if (pair_u[u] < 0 && dfs(u)) ++matched;
    return matched;
  }
};

// Euler circuit orientation of every component; returns directed edges.
std::vector<std::pair<int, int>> euler_orient(const Graph& g) {
  const int n = g.n();
  auto edge_list = g.edges();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (to, edge id)
  for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
    auto [u, v] = edge_list[e];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<char> used(edge_list.size(), 0);
  std::vector<std::size_t> it(n, 0);
  std::vector<std::pair<int, int>> directed;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start] || adj[start].empty()) continue;
    // Hierholzer
    std::vector<int> stack = {start}, circuit;
    while (!stack.empty()) {
      int v = stack.back();
      seen[v] = 1;
      while (it[v] < adj[v].size() && used[adj[v][it[v]].second]) ++it[v];
      if (it[v] == adj[v].size()) {
        circuit.push_back(v);
        stack.pop_back();
      } else {
        auto [to, id] = adj[v][it[v]];
        used[id] = 1;
        stack.push_back(to);
      }
    }
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
      directed.push_back({circuit[i + 1], circuit[i]});
  }
  return directed;
}

std::int64_t factorial(int s) {
  std::int64_t f = 1;
  for (int i = 2; i <= s; ++i) f *= i;
  return f;
}

}  // namespace

EdgeSubset two_factor(const Graph& g) {
  const int n = g.n();
  if (g.loop_count() > 0) throw std::invalid_argument("two_factor requires a loopless graph");
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 0) throw std::invalid_argument("isolated vertex");
    if (d % 2 != 0) throw std::invalid_argument("odd-degree vertex present");
  }
  auto directed = euler_orient(g);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : directed) adj[u].push_back(v);
  BipartiteMatcher matcher(n, adj);
  if (matcher.run() != n) throw std::runtime_error("graph has no 2-factor");
  EdgeSubset out;
  out.kind = EdgeSubsetKind::two_factor;
  for (int u = 0; u < n; ++u) {
    int v = matcher.pair_u[u];
    out.edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  if (static_cast<int>(out.edges.size()) != n)
    throw std::runtime_error("two_factor produced a degenerate subset");
  return out;
}

Graph strip_two_factors(const Graph& g, int k) {
  auto d = check_regular(g);
  if (!d || *d % 2 != 0) throw std::invalid_argument("strip_two_factors needs even regular input");
  if (*d < 2 * k) throw std::invalid_argument("not enough degree to strip");
  Graph cur = g;
  for (int i = 0; i < k; ++i) {
    auto tf = two_factor(cur);
    for (auto [u, v] : tf.edges) cur.remove_edge(u, v);
  }
  auto d2 = check_regular(cur);
  if (!d2 || *d2 != *d - 2 * k) throw std::runtime_error("stripping missed the target degree");
  return cur;
}

std::optional<EdgeSubset> hamilton_cycle(const Graph& g, std::int64_t budget) {
  const int n = g.n();
  if (n < 3) throw std::invalid_argument("hamilton_cycle requires n >= 3");
  std::vector<char> on_path(n, 0);
  std::vector<int> path = {0};
  on_path[0] = 1;
  auto residual = [&](int v) {
    int c = 0;
    for (int w : g.neighbors(v))
      if (!on_path[w]) ++c;
    return c;
  };
  // frames of candidate successors, in exploration order
  std::vector<std::vector<int>> frames;
  std::vector<std::size_t> frame_pos;
  auto push_frame = [&](int v) {
    std::vector<std::pair<int, int>> cand;
    for (int w : g.neighbors(v))
      if (!on_path[w]) cand.push_back({residual(w), w});
    std::sort(cand.begin(), cand.end());
    std::vector<int> order;
    for (auto& [r, w] : cand) order.push_back(w);
    frames.push_back(std::move(order));
    frame_pos.push_back(0);
  };
  push_frame(0);
  std::int64_t expansions = 0;

  auto make_cycle = [&](const std::vector<int>& cyc) {
    EdgeSubset out;
    out.kind = EdgeSubsetKind::hamilton_cycle;
    for (int i = 0; i < n; ++i) {
      int u = cyc[i], v = cyc[(i + 1) % n];
      out.edges.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  };

  while (!frames.empty()) {
    if (static_cast<int>(path.size()) == n) {
      int tail = path.back();
      if (g.has_edge(tail, path[0])) return make_cycle(path);
      // rotation: tail ~ path[i] turns path[i+1] into the new endpoint
      for (int i = 0; i + 2 < n; ++i) {
        if (g.has_edge(tail, path[i]) && g.has_edge(path[i + 1], path[0])) {
          std::vector<int> cyc(path.begin(), path.begin() + i + 1);
          for (int j = n - 1; j > i; --j) cyc.push_back(path[j]);
          return make_cycle(cyc);
        }
      }
      // fall through to backtrack
    }
    auto& frame = frames.back();
    auto& pos = frame_pos.back();
    bool advanced = false;
    while (pos < frame.size() && static_cast<int>(path.size()) < n) {
      int next = frame[pos++];
      if (on_path[next]) continue;
      if (++expansions > budget) return std::nullopt;
      on_path[next] = 1;
      path.push_back(next);
      push_frame(next);
      advanced = true;
      break;
    }
    if (!advanced) {
      // backtrack
      frames.pop_back();
      frame_pos.pop_back();
      on_path[path.back()] = 0;
      path.pop_back();
    }
  }
  return std::nullopt;
}

EqualizedComponent equalize_norm_component(const Graph& norm, int k, EqualizeVariant variant,
                                           std::int64_t budget) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (norm.loop_count() > 0) throw std::invalid_argument("expected the loopless norm graph");
  if (norm.absolute_points.empty())
    throw std::invalid_argument("norm graph must carry its absolute points");
  const int n = norm.n();
  if (variant == EqualizeVariant::b && n % 2 == 0)
    throw std::invalid_argument("variant b requires odd q^s");
  Graph cur = norm;
  int full_cycles = (variant == EqualizeVariant::a) ? k : k - 1;
  for (int j = 0; j < full_cycles; ++j) {
    for (int v = 0; v < n; ++v)
      if (cur.degree(v) < 2) throw std::invalid_argument("degree would go negative");
    auto hc = hamilton_cycle(cur, budget);
    if (!hc) throw std::runtime_error("Hamilton search budget exhausted");
    for (auto [u, v] : hc->edges) cur.remove_edge(u, v);
  }
  if (variant == EqualizeVariant::b) {
    auto hc = hamilton_cycle(cur, budget);
    if (!hc) throw std::runtime_error("Hamilton search budget exhausted");
    // walk the cycle starting at an absolute point, then match the
    // remaining n-1 vertices pairwise along it
    std::vector<std::vector<int>> cyc_adj(n);
    for (auto [u, v] : hc->edges) {
      cyc_adj[u].push_back(v);
      cyc_adj[v].push_back(u);
    }
    const int start = norm.absolute_points.front();
    std::vector<int> order = {start};
    int prev = start, v = cyc_adj[start][0];
    while (v != start) {
      order.push_back(v);
      int nxt = (cyc_adj[v][0] == prev) ? cyc_adj[v][1] : cyc_adj[v][0];
      prev = v;
      v = nxt;
    }
    if (static_cast<int>(order.size()) != n)
      throw std::runtime_error("Hamilton cycle walk is not spanning");
    for (std::size_t i = 1; i + 1 < order.size(); i += 2) cur.remove_edge(order[i], order[i + 1]);
  }
  EqualizedComponent out;
  int mind = cur.degree(0);
  for (int u = 1; u < n; ++u) mind = std::min(mind, cur.degree(u));
  for (int u = 0; u < n; ++u)
    if (cur.degree(u) == mind) out.min_degree_vertices.push_back(u);
  out.graph = std::move(cur);
  return out;
}

EdgeSubset cross_matching(const std::vector<std::vector<int>>& groups) {
  const int ell = static_cast<int>(groups.size());
  if (ell < 3) throw std::invalid_argument("cross_matching needs at least 3 groups");
  std::vector<std::int64_t> sizes;
  std::int64_t total = 0, largest = 0;
  for (auto& grp : groups) {
    sizes.push_back(static_cast<std::int64_t>(grp.size()));
    total += sizes.back();
    largest = std::max(largest, sizes.back());
  }
  if (total % 2 != 0) {
    std::ostringstream os;
    os << "total group size " << total << " is odd";
    throw std::invalid_argument(os.str());
  }
  if (largest >= total - largest) {
    std::ostringstream os;
    os << "largest group violates " << largest << " < " << (total - largest);
    throw std::invalid_argument(os.str());
  }
  // repeatedly pair one vertex from the largest group with one from the
  // second largest; deterministic within-group order
  std::vector<std::size_t> pos(ell, 0);
  auto remaining = [&](int i) { return sizes[i] - static_cast<std::int64_t>(pos[i]); };
  EdgeSubset out;
  out.kind = EdgeSubsetKind::matching;
  for (std::int64_t step = 0; step < total / 2; ++step) {
    int a = -1, b = -1;
    for (int i = 0; i < ell; ++i) {
      if (remaining(i) == 0) continue;
      if (a < 0 || remaining(i) > remaining(a)) {
        b = a;
        a = i;
      } else if (b < 0 || remaining(i) > remaining(b)) {
        b = i;
      }
    }
    if (b < 0) throw std::runtime_error("cross_matching ran out of groups");
    out.edges.push_back({groups[a][pos[a]++], groups[b][pos[b]++]});
  }
  return out;
}

namespace {

void certify_pipeline(const Graph& g, int degree, int s, int t,
                      const char* name) {
  auto d = check_regular(g);
  if (!d || *d != degree) {
    std::ostringstream os;
    os << name << ": output is not " << degree << "-regular";
    throw std::runtime_error(os.str());
  }
  if (!is_kst_free(g, s, t)) {
    std::ostringstream os;
    os << name << ": output is not K_{" << s << "," << t << "}-free";
    throw std::runtime_error(os.str());
  }
}

std::string log_line(const std::string& s) { return s; }

}  // namespace

PipelineResult pipeline_c4(std::int64_t n) {
  if (n < 4) throw std::invalid_argument("n must be at least 4");
  PipelineResult res;
  res.target_bound = std::sqrt(static_cast<double>(n) / 6.0);
  if (n % 2 == 0) {
    const std::int64_t M = n / 2, half = M / 2;
    std::int64_t best = -1;
    for (auto p : primes_up_to(static_cast<std::int64_t>(std::sqrt(double(half + 1))) + 2))
      if (p * p - 1 <= half) best = p;
    if (best < 0) {
      std::ostringstream os;
      os << "no prime p' with p'^2-1 <= floor(M/2) = " << half;
      throw InfeasibleError("pipeline_c4 infeasible", {os.str()});
    }
    auto A = bose_chowla(best);
    res.graph = bipartite_sum(M, A.elements, A);
    res.degree = static_cast<int>(best);
    res.construction_log.push_back(log_line("even branch: M = " + std::to_string(M) +
                                            ", Bose-Chowla prime " + std::to_string(best)));
  } else {
    std::vector<std::string> constraints;
    const std::int64_t pmax = static_cast<std::int64_t>(std::sqrt(2.0 * n / 3.0));
    auto primes = primes_up_to(std::min<std::int64_t>(pmax, 31));
    bool built = false;
    for (auto it = primes.rbegin(); it != primes.rend() && !built; ++it) {
      const std::int64_t p = *it;
      if (p < 3) break;
      const std::int64_t r = (p % 4 == 1) ? (p + 1) * p / 2 : p * (p - 1) / 2;
      if (r > n) continue;
      const std::int64_t N = n - r;
      // R1 is (p-1)/2-regular, R2 is (p+1)/2-regular; the bipartite part
      // must match whichever component is used
      const int k = static_cast<int>((p % 4 == 1) ? (p - 1) / 2 : (p + 1) / 2);
      if (N == 0) {
        auto pg = er_polarity(p);
        res.graph = (p % 4 == 1) ? pg.r1 : pg.r2;
        res.degree = k;
        res.construction_log.push_back("odd branch: Parsons graph alone, p = " +
                                       std::to_string(p));
        built = true;
        break;
      }
      const std::int64_t M = N / 2, half = M / 2;
      std::int64_t pp = -1;
      for (auto q : primes_up_to(static_cast<std::int64_t>(std::sqrt(double(half + 1))) + 2))
        if (q * q - 1 <= half && q >= k) pp = q;
      if (pp < 0) {
        std::ostringstream os;
        os << "p = " << p << ": no prime p' >= " << k << " with p'^2-1 <= " << half;
        constraints.push_back(os.str());
        continue;
      }
      auto pg = er_polarity(p);
      auto A = bose_chowla(pp);
      std::vector<std::int64_t> sub(A.elements.begin(), A.elements.begin() + k);
      Graph B = bipartite_sum(M, sub, A);
      res.graph = disjoint_union({(p % 4 == 1) ? pg.r1 : pg.r2, B});
      res.degree = k;
      res.construction_log.push_back(
          "odd branch: p = " + std::to_string(p) + " (" +
          ((p % 4 == 1) ? "R1" : "R2") + "), Bose-Chowla prime " + std::to_string(pp) +
          ", bipartite M = " + std::to_string(M));
      built = true;
    }
    if (!built) {
      if (constraints.empty())
        constraints.push_back("no Parsons prime p <= min(floor(sqrt(2n/3)), 31) fits n = " +
                              std::to_string(n));
      throw InfeasibleError("pipeline_c4 infeasible", constraints);
    }
  }
  certify_pipeline(res.graph, res.degree, 2, 2, "pipeline_c4");
  return res;
}

PipelineResult pipeline_k2t(std::int64_t n, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (n % 2 != 0 && (t % 2 != 0)) throw std::invalid_argument("odd n requires even t");
  PipelineResult res;
  if (n % 2 == 0) {
    res.target_bound = std::sqrt(static_cast<double>(t) * n / 4.0);
    const std::int64_t M = n / 2, half = M / 2;
    std::int64_t best = -1;
    for (auto p : primes_up_to(static_cast<std::int64_t>(std::sqrt(double(half) * t + 1)) + 2))
      if (p > 2 && (p - 1) % t == 0 && (p * p - 1) / t <= half) best = p;
    if (best < 0) {
      std::ostringstream os;
      os << "no prime p' == 1 (mod " << t << ") with (p'^2-1)/" << t
         << " <= floor(M/2) = " << half;
      throw InfeasibleError("pipeline_k2t infeasible", {os.str()});
    }
    auto A = quotient_set(best, t);
    res.graph = bipartite_sum(M, A.elements, A);
    res.degree = static_cast<int>(best);
    res.construction_log.push_back("even branch: M = " + std::to_string(M) +
                                   ", quotient prime " + std::to_string(best));
  } else {
    res.target_bound = std::sqrt(static_cast<double>(t) * n / 5.0);
    std::vector<std::string> constraints;
    auto primes = primes_up_to(static_cast<std::int64_t>(std::sqrt(double(n) * t)) + 2 * t + 2);
    bool built = false;
    for (auto it = primes.rbegin(); it != primes.rend() && !built; ++it) {
      const std::int64_t p = *it;
      if (p < 3 || (p - 1) % (2 * t) != 0) continue;
      const std::int64_t h = p * (p - 1) / t + 1;
      if (h > n) continue;
      const std::int64_t N = n - h;
      const int k = static_cast<int>(p - 1);
      if (N == 0) {
        res.graph = h_star(p, t);
        res.degree = k;
        res.construction_log.push_back("odd branch: H* alone, p = " + std::to_string(p));
        built = true;
        break;
      }
      const std::int64_t M = N / 2, half = M / 2;
      std::int64_t pp = -1;
      for (auto q : primes_up_to(static_cast<std::int64_t>(std::sqrt(double(half) * t + 1)) + 2))
        if (q > 2 && (q - 1) % t == 0 && (q * q - 1) / t <= half && q >= k) pp = q;
      if (pp < 0) {
        std::ostringstream os;
        os << "p = " << p << ": no prime p' >= " << k << " == 1 (mod " << t
           << ") with (p'^2-1)/" << t << " <= " << half;
        constraints.push_back(os.str());
        continue;
      }
      auto A = quotient_set(pp, t);
      std::vector<std::int64_t> sub(A.elements.begin(), A.elements.begin() + k);
      Graph B = bipartite_sum(M, sub, A);
      res.graph = disjoint_union({h_star(p, t), B});
      res.degree = k;
      res.construction_log.push_back("odd branch: H*(p=" + std::to_string(p) + ",t=" +
                                     std::to_string(t) + ") + bipartite from quotient prime " +
                                     std::to_string(pp) + ", M = " + std::to_string(M));
      built = true;
    }
    if (!built) {
      if (constraints.empty())
        constraints.push_back("no prime p == 1 (mod " + std::to_string(2 * t) +
                              ") with p(p-1)/" + std::to_string(t) + " + 1 <= " +
                              std::to_string(n));
      throw InfeasibleError("pipeline_k2t infeasible", constraints);
    }
  }
  certify_pipeline(res.graph, res.degree, 2, 2 * t + 1, "pipeline_k2t");
  return res;
}

PipelineResult pipeline_k33(std::int64_t n) {
  auto decomp = prime_power_decompose(n, 3, 14, /*balance=*/true, /*min_prime=*/3,
                                      /*max_prime=*/13);
  if (!decomp) {
    throw InfeasibleError(
        "pipeline_k33 infeasible",
        {"no decomposition of " + std::to_string(n) +
         " into at most 14 cubes of odd primes in [3, 13]"});
  }
  const auto& ps = decomp->primes;  // descending
  const std::int64_t pmin = ps.back();
  const std::int64_t target = pmin * pmin - pmin;
  PipelineResult res;
  res.target_bound = std::pow(static_cast<double>(n) / (n % 2 ? 13.0 : 14.0), 2.0 / 3.0);
  std::vector<Graph> comps;
  std::ostringstream log;
  log << "decomposition:";
  for (auto p : ps) log << " " << p << "^3";
  res.construction_log.push_back(log.str());
  for (auto p : ps) {
    const std::int64_t d = p * p - p;
    const int k = static_cast<int>((d - target) / 2);
    Graph b = brown(p);
    if (k > 0) b = strip_two_factors(b, k);
    res.construction_log.push_back("brown(" + std::to_string(p) + "): stripped " +
                                   std::to_string(k) + " two-factors");
    comps.push_back(std::move(b));
  }
  res.graph = comps.size() == 1 ? std::move(comps.front()) : disjoint_union(comps);
  res.degree = static_cast<int>(target);
  certify_pipeline(res.graph, res.degree, 3, 3, "pipeline_k33");
  return res;
}

PipelineResult pipeline_kst(std::int64_t n, int s, int t, std::int64_t budget) {
  if (s < 3) throw std::invalid_argument("s must be >= 3");
  if (t <= factorial(s)) throw std::invalid_argument("t must exceed s!");
  std::int64_t max_p = 3;
  while (true) {
    std::int64_t pw = 1;
    for (int i = 0; i < s; ++i) pw *= (max_p + 1);
    if (pw > 2000) break;
    ++max_p;
  }
  auto decomp = prime_power_decompose(n, s, 14, /*balance=*/true, /*min_prime=*/3, max_p);
  if (!decomp) {
    throw InfeasibleError("pipeline_kst infeasible",
                          {"no decomposition of " + std::to_string(n) + " into at most 14 " +
                           std::to_string(s) + "-th powers of odd primes <= " +
                           std::to_string(max_p)});
  }
  const auto& ps = decomp->primes;
  if (ps.size() < 3) {
    throw InfeasibleError("pipeline_kst infeasible",
                          {"decomposition has " + std::to_string(ps.size()) +
                           " components; the matching step needs at least 3"});
  }
  PipelineResult res;
  res.target_bound = std::pow(static_cast<double>(n), 1.0 - 1.0 / s);
  std::ostringstream log;
  log << "decomposition:";
  for (auto p : ps) log << " " << p << "^" << s;
  res.construction_log.push_back(log.str());

  auto big_d = [&](std::int64_t p) {
    std::int64_t q = 1, d = 0;
    for (int i = 0; i < s; ++i) {
      d += q;
      q *= p;
    }
    return d;  // (p^s-1)/(p-1)
  };
  const std::int64_t d_min = big_d(ps.back());
  const EqualizeVariant variant =
      (n % 2 == 0 || s % 2 == 0) ? EqualizeVariant::a : EqualizeVariant::b;
  const int final_degree =
      static_cast<int>(variant == EqualizeVariant::a ? d_min - 2 : d_min - 1);
  if (final_degree < 2)
    throw InfeasibleError("pipeline_kst infeasible",
                          {"target degree " + std::to_string(final_degree) + " below 2"});

  std::vector<Graph> comps;
  std::vector<std::vector<int>> groups;
  int offset = 0;
  for (auto p : ps) {
    const std::int64_t d_i = big_d(p);
    const int k = static_cast<int>((d_i - d_min) / 2 + 1);
    Graph ng = norm_graph(p, s, /*with_loops=*/false);
    auto eq = equalize_norm_component(ng, k, variant, budget);
    res.construction_log.push_back("norm(" + std::to_string(p) + "," + std::to_string(s) +
                                   "): variant " +
                                   (variant == EqualizeVariant::a ? "a" : "b") + ", k = " +
                                   std::to_string(k) + ", min-degree vertices = " +
                                   std::to_string(eq.min_degree_vertices.size()));
    std::vector<int> grp;
    for (int v : eq.min_degree_vertices) grp.push_back(offset + v);
    groups.push_back(std::move(grp));
    offset += eq.graph.n();
    comps.push_back(std::move(eq.graph));
  }
  Graph g = disjoint_union(comps);
  // Lemma 10 feasibility on the min-degree groups
  {
    std::vector<std::int64_t> sizes;
    std::int64_t total = 0, largest = 0;
    for (auto& grp : groups) {
      sizes.push_back(static_cast<std::int64_t>(grp.size()));
      total += sizes.back();
      largest = std::max(largest, sizes.back());
    }
    if (largest >= total - largest || total % 2 != 0) {
      std::ostringstream os;
      os << "min-degree group sizes (";
      for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
      os << ") violate " << largest << " < " << (total - largest);
      if (total % 2 != 0) os << " or have odd total " << total;
      throw InfeasibleError("pipeline_kst infeasible", {os.str()});
    }
  }
  auto matching = cross_matching(groups);
  for (auto [u, v] : matching.edges) g.add_edge(u, v);
  res.construction_log.push_back("cross matching of " + std::to_string(matching.edges.size()) +
                                 " edges");
  res.graph = std::move(g);
  res.degree = final_degree;
  certify_pipeline(res.graph, res.degree, s, t, "pipeline_kst");
  return res;
}

}  // namespace rexlab
