#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace symlap {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Adjacency bitmask over the upper triangle, row-major: bit 0 is {0,1},
/// bit 1 is {0,2}, ..., bit n-2 is {0,n-1}, bit n-1 is {1,2}, and so on.
using Bitmask = std::uint64_t;

/// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  /// Throws RangeError for n < 1 or an out-of-range index, ParseError for
  /// self-loops and duplicate edges (in either orientation).
  Graph(int n, std::vector<Edge> edges);

  static Graph from_bitmask(int n, Bitmask mask);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int degree(Vertex i) const { return degrees_.at(static_cast<std::size_t>(i)); }
  int min_degree() const noexcept;
  bool has_edge(Vertex i, Vertex j) const noexcept;
  std::vector<Vertex> neighbors(Vertex i) const;

  Bitmask bitmask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::uint8_t> adjacency_;
};

/// Index of the bit that encodes {i, j} in a Bitmask for n vertices.
int pair_bit(int n, Vertex i, Vertex j);

/// Parse the edge-list format: a header line "n m" followed by m lines "i j"
/// (0-based). Blank lines are ignored.
Graph from_edge_list(std::string_view text);

/// Inverse of from_edge_list; edges are written in lexicographic order.
std::string to_edge_list(const Graph& g);

enum class Family { complete, complete_bipartite, star, cycle };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// complete(n): K_n, n >= 2. complete_bipartite(a, b): parts {0..a-1} and
/// {a..a+b-1}, a, b >= 1. star(n): K_{1,n-1} with hub 0, n >= 2. cycle(n):
/// edges {i, i+1 mod n}, n >= 3. `b` is only read for complete_bipartite.
Graph generate(Family family, int a, int b = 0);

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int n);
Graph cycle(int n);

/// Breadth-first search from vertex 0 reaches every vertex.
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Connectivity of a bitmask-encoded graph without materializing a Graph.
bool is_connected_mask(int n, Bitmask mask);

inline constexpr int kMinEnumerate = 2;
inline constexpr int kMaxEnumerate = 7;

/// Visit every labeled connected graph on n vertices whose bitmask lies in
/// [lo, hi), in increasing bitmask order. Requires 2 <= n <= 7.
void for_each_connected(int n, Bitmask lo, Bitmask hi,
                        const std::function<void(const Graph&)>& visit);

/// Whole bitmask range.
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);

/// Upper bound (exclusive) of the bitmask space for n vertices.
Bitmask mask_space(int n);

/// Materialized enumeration; prefer for_each_connected for n = 7.
std::vector<Graph> enumerate_connected(int n);

}  // namespace symlap
