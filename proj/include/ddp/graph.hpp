#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddp {

// Dense matrix operations (distance decompositions, eigensolves, polynomial
// oracles) refuse graphs above this order.
inline constexpr int kDenseOrderCap = 5000;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph on vertices 0..n-1, adjacency lists kept sorted.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // Text format: first non-comment line "n m", then m lines "u v" with
  // 0 <= u < v < n. Lines starting with '#' are skipped. Duplicate edges,
  // loops, reversed repeats and malformed lines raise ParseError.
  static Graph parse_edge_list(std::string_view text);
  static Graph load_file(const std::string& path);

  std::string to_edge_list() const;  // canonical form, parses back bit-identically

  int order() const { return n_; }
  long edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

 private:
  int n_ = 0;
  long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct DegreeProfile {
  int min_degree;
  int max_degree;
  bool regular;
};

DegreeProfile degree_profile(const Graph& g);

// Single-source BFS distances; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Max eccentricity over all vertices; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

using ByteMatrix = std::vector<std::vector<std::uint8_t>>;

// 0/1 distance-layer matrices A_0 .. A_d, where A_i(u,v) = 1 iff
// dist(u,v) = i. sum_to_j reports whether they add up to the all-ones
// matrix, i.e. whether every distance is at most d.
struct DistanceDecomposition {
  int d;
  std::vector<ByteMatrix> layers;
  bool sum_to_j;
  std::string detail;  // first violation when sum_to_j is false
};

// Requires a connected graph and d >= 0.
DistanceDecomposition distance_decomposition(const Graph& g, int d);

}  // namespace ddp
