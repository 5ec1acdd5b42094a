#ifndef REXLAB_GRAPH_HPP
#define REXLAB_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rexlab {

/// Finite simple graph with a separate, explicitly tracked loop set.
/// Adjacency is stored as bitset rows; loops never appear in the rows
/// (adjacency-matrix exports place a 1 on the diagonal instead), so the
/// combinatorial Laplacian is insensitive to loops.  degree() counts a
/// loop as one neighbor.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  void add_loop(int v);
  bool has_loop(int v) const;

  /// Loop counted as one.
  int degree(int v) const;

  /// Non-loop edges only.
  std::int64_t edge_count() const;
  /// Non-loop edges plus loops (each loop contributes one).
  std::int64_t edge_count_with_loops() const;

  /// Pointer to the words() adjacency words of v.
  const std::uint64_t* row(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<int> loops() const;
  int loop_count() const;

  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  // optional metadata carried by the algebraic constructions
  std::vector<int> part_sizes;                    // component/bipartition record
  std::vector<int> absolute_points;               // sorted vertex ids
  std::vector<std::vector<std::int64_t>> labels;  // per-vertex algebraic label

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;   // n_ rows of words_ words
  std::vector<std::uint8_t> loop_;   // indicator
  void check(int v) const;
};

/// Disjoint union; part_sizes records component boundaries, labels,
/// loops and absolute points are preserved with offsets.
Graph disjoint_union(const std::vector<Graph>& graphs);

/// Text edge-list format: header "n <n> loops <k>", k lines "L v", then
/// edges "u v" with u < v in ascending lexicographic order.
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);
void write_edge_list_file(const Graph& g, const std::string& path);
Graph read_edge_list_file(const std::string& path);

// Small named graphs used throughout the tests and pipelines.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

}  // namespace rexlab

#endif
