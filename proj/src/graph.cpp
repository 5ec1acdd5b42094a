#include "rexlab/graph.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rexlab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), adj_(std::size_t(n) * words_, 0), loop_(n, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::check(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-edge; use add_loop");
  adj_[std::size_t(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64);
  adj_[std::size_t(v) * words_ + u / 64] |= std::uint64_t(1) << (u % 64);
}

void Graph::remove_edge(int u, int v) {
  check(u);
  check(v);
  adj_[std::size_t(u) * words_ + v / 64] &= ~(std::uint64_t(1) << (v % 64));
  adj_[std::size_t(v) * words_ + u / 64] &= ~(std::uint64_t(1) << (u % 64));
}

bool Graph::has_edge(int u, int v) const {
  check(u);
  check(v);
  if (u == v) return false;
  return (adj_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1;
}

void Graph::add_loop(int v) {
  check(v);
  loop_[v] = 1;
}

bool Graph::has_loop(int v) const {
  check(v);
  return loop_[v] != 0;
}

int Graph::degree(int v) const {
  check(v);
  int d = loop_[v] ? 1 : 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(adj_[std::size_t(v) * words_ + w]);
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (int v = 0; v < n_; ++v)
    for (int w = 0; w < words_; ++w) total += std::popcount(adj_[std::size_t(v) * words_ + w]);
  return total / 2;
}

std::int64_t Graph::edge_count_with_loops() const { return edge_count() + loop_count(); }

const std::uint64_t* Graph::row(int v) const {
  check(v);
  return adj_.data() + std::size_t(v) * words_;
}

std::vector<int> Graph::neighbors(int v) const {
  check(v);
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = adj_[std::size_t(v) * words_ + w];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back(w * 64 + b);
      word &= word - 1;
    }
  }
  return out;
}

std::vector<int> Graph::loops() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (loop_[v]) out.push_back(v);
  return out;
}

int Graph::loop_count() const {
  int c = 0;
  for (int v = 0; v < n_; ++v) c += loop_[v];
  return c;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph disjoint_union(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw std::invalid_argument("empty union");
  int total = 0;
  for (const auto& g : graphs) total += g.n();
  Graph out(total);
  bool any_labels = false;
  for (const auto& g : graphs)
    if (!g.labels.empty()) any_labels = true;
  if (any_labels) out.labels.resize(total);
  int off = 0;
  for (const auto& g : graphs) {
    for (auto [u, v] : g.edges()) out.add_edge(off + u, off + v);
    for (int v : g.loops()) out.add_loop(off + v);
    for (int v : g.absolute_points) out.absolute_points.push_back(off + v);
    if (any_labels && !g.labels.empty())
      for (int v = 0; v < g.n(); ++v) out.labels[off + v] = g.labels[v];
    out.part_sizes.push_back(g.n());
    off += g.n();
  }
  return out;
}

void write_edge_list(const Graph& g, std::ostream& os) {
  os << "n " << g.n() << " loops " << g.loop_count() << "\n";
  for (int v : g.loops()) os << "L " << v << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
}

Graph read_edge_list(std::istream& is) {
  std::string tag_n, tag_loops;
  int n = -1, k = -1;
  if (!(is >> tag_n >> n >> tag_loops >> k) || tag_n != "n" || tag_loops != "loops" || n < 0 ||
      k < 0)
    throw std::runtime_error("malformed edge-list header");
  Graph g(n);
  for (int i = 0; i < k; ++i) {
    std::string tag;
    int v;
    if (!(is >> tag >> v) || tag != "L") throw std::runtime_error("malformed loop line");
    g.add_loop(v);
  }
  int u, v;
  std::pair<int, int> prev{-1, -1};
  while (is >> u >> v) {
    if (u >= v) throw std::runtime_error("edge not in u < v form");
    if (std::pair<int, int>{u, v} <= prev)
      throw std::runtime_error("edges not in ascending order");
    prev = {u, v};
    g.add_edge(u, v);
  }
  return g;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(g, os);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_edge_list(is);
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

}  // namespace rexlab
