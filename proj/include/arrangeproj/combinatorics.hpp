#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arrangeproj {

// Vertices are 1-based throughout: a graph on n vertices lives on {1, ..., n}.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Block = std::vector<Vertex>;

/// Simple undirected graph on [n]. Edges are stored as (i, j) with i < j in
/// lexicographic order, which fixes the edge indexing used by orientations.
class Graph {
public:
  /// Throws std::invalid_argument on loops, duplicates or endpoints outside [n].
  /// Pairs may be given in either order; they are normalized to i < j.
  explicit Graph(int n, std::vector<Edge> edges = {});

  static Graph complete(int n);
  static Graph edgeless(int n) { return Graph(n); }
  static Graph path(int n);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(Vertex u, Vertex w) const;
  std::vector<Vertex> neighbors(Vertex u) const;

  /// True iff the subgraph induced on `vertices` is connected (empty counts as not).
  bool induces_connected(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;  // n*n, row-major, 0-based
};

/// Every labeled graph on [n], indexed by the bitmask over the lexicographically
/// ordered pairs (1,2), (1,3), ..., (n-1,n); bit 0 is the first pair.
std::vector<Graph> all_graphs(int n);
Graph graph_from_mask(int n, std::uint64_t mask);

/// Permutation of [n] in one-line notation.
class Permutation {
public:
  explicit Permutation(std::vector<Vertex> word);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  const std::vector<Vertex>& word() const noexcept { return word_; }
  Vertex operator[](std::size_t i) const { return word_[i]; }
  Permutation reversed() const;
  /// Position (0-based) of each value: position(word[i]) == i.
  std::vector<std::size_t> positions() const;
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Vertex> word_;
};

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Blocks are stored sorted ascending. Block order is significant.
class OrderedSetPartition {
public:
  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint and cover [n].
  OrderedSetPartition(int n, std::vector<Block> blocks);

  int ground_size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::string to_string() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
  int n_;
  std::vector<Block> blocks_;
};

/// Unordered set partition of [n], kept canonical: each block sorted, blocks
/// sorted by their minimum. Houses flats of graphical arrangements.
class SetPartition {
public:
  SetPartition(int n, std::vector<Block> blocks);
  static SetPartition singletons(int n);
  static SetPartition from(const OrderedSetPartition& ordered);

  int ground_size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  /// Index of the block holding vertex v.
  std::size_t block_of(Vertex v) const { return block_index_[static_cast<std::size_t>(v - 1)]; }
  /// Every block of *this lies inside some block of `coarser`.
  bool refines(const SetPartition& coarser) const;
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

private:
  int n_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_index_;
};

/// All set partitions of [n] (restricted growth string order).
std::vector<SetPartition> all_set_partitions(int n);

/// All ordered set partitions of [n]: each set partition with its blocks in
/// every order. These label the faces of the braid arrangement.
std::vector<OrderedSetPartition> all_ordered_set_partitions(int n);

/// Orientation of every edge of a graph; each edge (i, j) points tail -> head.
/// A region of the graphical arrangement has head = endpoint with the larger
/// coordinate.
class AcyclicOrientation {
public:
  /// `heads[k]` is the head of graph.edges()[k]. Throws std::invalid_argument
  /// when a head is not an endpoint or the orientation has a directed cycle.
  AcyclicOrientation(Graph graph, std::vector<Vertex> heads);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& heads() const noexcept { return heads_; }
  /// Arcs as (tail, head), in edge order.
  std::vector<Edge> arcs() const;
  /// Heads of arcs leaving `v`.
  const std::vector<Vertex>& out_neighbors(Vertex v) const {
    return out_[static_cast<std::size_t>(v - 1)];
  }
  /// "1->2 3->2", or "-" when there are no edges.
  std::string to_string() const;

  friend bool operator==(const AcyclicOrientation& a, const AcyclicOrientation& b) {
    return a.graph_ == b.graph_ && a.heads_ == b.heads_;
  }

private:
  Graph graph_;
  std::vector<Vertex> heads_;
  std::vector<std::vector<Vertex>> out_;
};

struct RightToLeftMinima {
  std::size_t count;
  std::vector<std::size_t> positions;  // 1-based, increasing
};

RightToLeftMinima rl_min(const Permutation& sigma);
std::size_t lr_max(const Permutation& sigma);

/// Reachability closure R_i along out-arcs, including i; sorted.
std::vector<Vertex> reachable_set(const AcyclicOrientation& gamma, Vertex i);

/// Source components S_1, S_2, ...: repeatedly peel R_m off the unassigned
/// vertices, m being the smallest unassigned vertex.
OrderedSetPartition source_components(const AcyclicOrientation& gamma);

/// Every acyclic orientation once. Order: lexicographic over the per-edge head
/// choice sequence (edge 0 most significant, lower endpoint before upper).
std::vector<AcyclicOrientation> enumerate_acyclic_orientations(const Graph& g);

/// Head of each edge is whichever endpoint occurs earlier in sigma.
AcyclicOrientation orientation_of_permutation(const Graph& g, const Permutation& sigma);

/// All sigma in which every head precedes its tail, lexicographic order.
std::vector<Permutation> linear_extensions(const AcyclicOrientation& gamma);

/// Greedy: emit the smallest vertex whose out-neighbors are all emitted.
Permutation lex_min_extension(const AcyclicOrientation& gamma);

/// Cut sigma's word after each right-to-left minimum.
OrderedSetPartition partition_at_rl_minima(const Permutation& sigma);

}  // namespace arrangeproj
