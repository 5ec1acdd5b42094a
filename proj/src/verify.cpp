#include "rexlab/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace rexlab {

namespace {

int intersect_count(const std::uint64_t* a, const std::uint64_t* b, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

int max_codegree_deep(const Graph& g, int s, std::optional<int> stop_at,
                      std::vector<int>& picked, std::vector<std::uint64_t>& inter, int best) {
  const int words = g.words();
  const int depth = static_cast<int>(picked.size());
  const int start = depth == 0 ? 0 : picked.back() + 1;
  for (int v = start; v < g.n(); ++v) {
    std::vector<std::uint64_t> next(words);
    if (depth == 0) {
      std::copy(g.row(v), g.row(v) + words, next.begin());
    } else {
      const std::uint64_t* r = g.row(v);
      for (int w = 0; w < words; ++w) next[w] = inter[w] & r[w];
    }
    picked.push_back(v);
    if (depth + 1 == s) {
      int c = 0;
      for (int w = 0; w < words; ++w) c += std::popcount(next[w]);
      best = std::max(best, c);
    } else {
      best = max_codegree_deep(g, s, stop_at, picked, next, best);
    }
    picked.pop_back();
    if (stop_at && best > *stop_at) return best;
  }
  return best;
}

}  // namespace

int max_codegree(const Graph& g, int s, std::optional<int> stop_at) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  if (s >= 4 && g.n() > 64) throw std::invalid_argument("s >= 4 limited to n <= 64");
  const int n = g.n();
  const int words = g.words();
  if (s == 1) {
    int best = 0;
    for (int v = 0; v < n; ++v)
      best = std::max(best, intersect_count(g.row(v), g.row(v), words));
    return best;
  }
  if (s == 2) {
    int best = 0;
    for (int u = 0; u < n; ++u) {
      const std::uint64_t* ru = g.row(u);
      for (int v = u + 1; v < n; ++v) {
        best = std::max(best, intersect_count(ru, g.row(v), words));
        if (stop_at && best > *stop_at) return best;
      }
    }
    return best;
  }
  if (s == 3) {
    int best = 0;
    std::vector<std::uint64_t> uv(words);
    for (int u = 0; u < n; ++u) {
      const std::uint64_t* ru = g.row(u);
      for (int v = u + 1; v < n; ++v) {
        const std::uint64_t* rv = g.row(v);
        for (int w = 0; w < words; ++w) uv[w] = ru[w] & rv[w];
        for (int x = v + 1; x < n; ++x) {
          best = std::max(best, intersect_count(uv.data(), g.row(x), words));
          if (stop_at && best > *stop_at) return best;
        }
      }
    }
    return best;
  }
  std::vector<int> picked;
  std::vector<std::uint64_t> inter;
  return max_codegree_deep(g, s, stop_at, picked, inter, 0);
}

bool is_kst_free(const Graph& g, int s, int t) { return max_codegree(g, s, t - 1) <= t - 1; }

std::map<int, int> degree_histogram(const Graph& g) {
  std::map<int, int> h;
  for (int v = 0; v < g.n(); ++v) h[g.degree(v)]++;
  return h;
}

std::optional<int> check_regular(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  int d = g.degree(0);
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

namespace {

// Cyclic Jacobi on a dense symmetric matrix stored row-major.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[std::size_t(i) * n + j]; };
  double fro = 0.0;
  for (double x : a) fro += x * x;
  const double tol = 1e-12 * std::max(1.0, std::sqrt(fro));
  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) < tol) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double app = at(p, p), aqq = at(q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

SpectrumResult adjacency_spectrum(const Graph& g) {
  const int n = g.n();
  if (n > 2000) throw std::invalid_argument("dense spectrum capped at n <= 2000");
  std::vector<double> a(std::size_t(n) * n, 0.0);
  for (auto [u, v] : g.edges()) a[std::size_t(u) * n + v] = a[std::size_t(v) * n + u] = 1.0;
  for (int v : g.loops()) a[std::size_t(v) * n + v] = 1.0;
  return {jacobi_eigenvalues(std::move(a), n), "numeric"};
}

SpectrumResult laplacian_spectrum(const Graph& g) {
  const int n = g.n();
  if (n > 2000) throw std::invalid_argument("dense spectrum capped at n <= 2000");
  std::vector<double> a(std::size_t(n) * n, 0.0);
  for (auto [u, v] : g.edges()) {
    a[std::size_t(u) * n + v] = a[std::size_t(v) * n + u] = -1.0;
    a[std::size_t(u) * n + u] += 1.0;
    a[std::size_t(v) * n + v] += 1.0;
  }
  return {jacobi_eigenvalues(std::move(a), n), "numeric"};
}

SpectrumResult cayley_spectrum(const AbelianGroup& G, const std::vector<std::int64_t>& S) {
  const std::int64_t n = G.size();
  if (n > 5000) throw std::invalid_argument("cayley spectrum capped at |G| <= 5000");
  std::vector<std::vector<std::int64_t>> selem;
  selem.reserve(S.size());
  for (auto s : S) selem.push_back(G.element(s));
  std::vector<double> ev;
  ev.reserve(n);
  const int r = static_cast<int>(G.orders.size());
  for (std::int64_t b = 0; b < n; ++b) {
    std::int64_t nb = G.neg(b);
    if (b > nb) continue;  // conjugate handled at nb
    auto eb = G.element(b);
    std::complex<double> chi = 0.0;
    for (const auto& x : selem) {
      double ang = 0.0;
      for (int i = 0; i < r; ++i)
        ang += static_cast<double>(eb[i] * x[i]) / static_cast<double>(G.orders[i]);
      ang *= 2.0 * std::numbers::pi;
      chi += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    if (b == nb) {
      ev.push_back(chi.real());  // real character
    } else {
      ev.push_back(std::abs(chi));
      ev.push_back(-std::abs(chi));
    }
  }
  std::sort(ev.begin(), ev.end());
  return {std::move(ev), "character_sum"};
}

SpectralGapReport spectral_gap_report(const Graph& g, int removed_cycles,
                                      std::optional<std::int64_t> norm_q,
                                      std::optional<int> norm_s) {
  auto lap = laplacian_spectrum(g);
  int zero_mult = 0;
  for (double mu : lap.eigenvalues)
    if (std::abs(mu) < 1e-9) ++zero_mult;
  if (zero_mult != 1) throw std::invalid_argument("spectral gap report requires a connected graph");
  SpectralGapReport rep;
  rep.n = g.n();
  rep.removed_cycles = removed_cycles;
  double dsum = 0.0;
  for (int v = 0; v < g.n(); ++v) dsum += g.degree(v) - (g.has_loop(v) ? 1 : 0);
  rep.average_degree = dsum / g.n();
  for (std::size_t i = 1; i < lap.eigenvalues.size(); ++i)
    rep.max_gap = std::max(rep.max_gap, std::abs(rep.average_degree - lap.eigenvalues[i]));
  if (norm_q && norm_s)
    rep.norm_graph_bound = std::pow(double(*norm_q), *norm_s / 2.0) + 1.0 + 6.0 * removed_cycles;
  const double n = g.n();
  double denom = rep.average_degree * std::pow(std::log(std::log(n)), 2) /
                 (std::log(n) * std::log(std::log(std::log(n))));
  rep.butler_chung_ratio = rep.max_gap / denom;
  return rep;
}

}  // namespace rexlab
