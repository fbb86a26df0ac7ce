#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qlift/bitmatrix.hpp"
#include "qlift/intmatrix.hpp"

namespace qlift {

// ---------------------------------------------------------------------------
// Generic multigraphs and paths
// ---------------------------------------------------------------------------

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph whose edges carry a reference orientation from -> to.
/// Parallel edges and loops are allowed.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

/// An edge traversed along (forward) or against its reference orientation.
struct OrientedEdge {
  std::size_t edge = 0;
  bool forward = true;
  bool operator==(const OrientedEdge&) const = default;
};

using EdgePath = std::vector<OrientedEdge>;

std::size_t tail(const Graph& g, OrientedEdge e);
std::size_t head(const Graph& g, OrientedEdge e);

/// True iff consecutive edges share endpoints and the path ends where it starts.
bool is_closed_path(const Graph& g, const EdgePath& path);

/// Vertex sets of the connected components, each sorted, ordered by lowest vertex.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

/// E - V + components.
std::size_t first_betti_number(const Graph& g);

// ---------------------------------------------------------------------------
// Tanner graphs
// ---------------------------------------------------------------------------

/// Simple bipartite graph of checks versus bits, one edge per nonzero entry.
struct TannerGraph {
  std::size_t check_count = 0;
  std::size_t bit_count = 0;
  /// (check, bit) pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Checks are vertices [0, check_count), bits follow; edges oriented check -> bit.
  Graph graph() const;
};

TannerGraph tanner_graph(const BitMatrix& h);

struct SignedEdge {
  std::size_t check = 0;
  std::size_t bit = 0;
  /// Index among the parallel edges joining this check and bit.
  std::size_t parallel = 0;
  int sign = 1;
  bool operator==(const SignedEdge&) const = default;
};

/// Bipartite multigraph of a Z-lifted check matrix: |h(x,q)| parallel edges
/// between x and q, all carrying sgn h(x,q). May be restricted to a subset of
/// its vertices (see induced_subgraph_z).
struct SignedMultigraph {
  std::size_t check_count = 0;
  std::size_t bit_count = 0;
  /// Present vertices, ascending.
  std::vector<std::size_t> checks;
  std::vector<std::size_t> bits;
  /// Ordered by (check, bit, parallel).
  std::vector<SignedEdge> edges;

  /// Compact graph over present vertices: present checks first, then present
  /// bits, each ascending. Edge i of the result is edges[i], oriented check -> bit.
  Graph graph() const;
  std::size_t edge_count(std::size_t check, std::size_t bit) const;
};

SignedMultigraph signed_lifted_tanner(const IntMatrix& h);

/// Keeps bits in supp(z_row), checks adjacent to them, and all edges between.
SignedMultigraph induced_subgraph_z(const SignedMultigraph& t, std::span<const std::int64_t> z_row);

// ---------------------------------------------------------------------------
// Spanning forests and cycle bases
// ---------------------------------------------------------------------------

struct SpanningForest {
  std::vector<std::size_t> roots;
  /// Per vertex; empty for roots.
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> depth;
  std::vector<std::size_t> component;
  /// Per edge.
  std::vector<bool> in_tree;
  /// Ascending.
  std::vector<std::size_t> non_tree_edges;

  std::size_t component_count() const { return roots.size(); }
};

/// Breadth-first forest: the lowest unvisited vertex roots each component and
/// incident edges are scanned by (neighbour, edge index).
SpanningForest spanning_forest(const Graph& g);

/// Forest containing every edge in `seed_edges` (which must be acyclic),
/// completed by scanning the remaining edges in index order.
SpanningForest extend_forest(const Graph& g, std::span<const std::size_t> seed_edges);

/// Forest with exactly the edges flagged in `in_tree`; throws ErrorKind::structure
/// if they contain a cycle.
SpanningForest forest_from_tree_edges(const Graph& g, const std::vector<bool>& in_tree);

/// Unique path in the forest from `from` to `to`; throws ErrorKind::structure
/// if they lie in different components.
EdgePath tree_path(const Graph& g, const SpanningForest& f, std::size_t from, std::size_t to);

/// One fundamental cycle per non-tree edge, in edge order: the non-tree edge
/// traversed forward, followed by the tree path back to its tail. Throws
/// ErrorKind::structure if `f` is not a spanning forest of `g`.
std::vector<EdgePath> cycle_basis(const Graph& g, const SpanningForest& f);

}  // namespace qlift
