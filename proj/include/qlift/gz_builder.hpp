#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlift/tanner.hpp"
#include "qlift/zlift.hpp"

namespace qlift {

struct MultEdge {
  /// Index into MultCopyGraph::q_copies.
  std::size_t q_copy = 0;
  std::size_t x = 0;
  /// Parallel index of the underlying edge of the lifted Tanner multigraph.
  std::size_t parallel = 0;
  /// sgn hz(z,q) * sgn hx(x,q).
  int sign = 1;
  /// Index into signed_lifted_tanner(hx).edges.
  std::size_t tanner_edge = 0;
};

/// The induced subgraph of a Z-check with each qubit q repeated |hz(z,q)| times.
struct MultCopyGraph {
  std::size_t z = 0;
  /// (q, copy) for q in supp(z) ascending, copy < |hz(z,q)|.
  std::vector<std::pair<std::size_t, std::size_t>> q_copies;
  /// X-checks adjacent to supp(z), ascending.
  std::vector<std::size_t> x_vertices;
  /// Ordered by (q_copy, x, parallel).
  std::vector<MultEdge> edges;
};

/// Throws ErrorKind::consistency if some X-vertex has unequal numbers of
/// positive and negative edges.
MultCopyGraph multigraph_z(const ZLiftedCode& zl, std::size_t z);

struct PairingStrategy {
  std::optional<std::uint64_t> seed;

  static PairingStrategy lexicographic() { return {}; }
  static PairingStrategy seeded(std::uint64_t s) { return {s}; }
};

struct XCopy {
  std::size_t x = 0;
  /// Indices into the MultCopyGraph edge list.
  std::size_t negative_edge = 0;
  std::size_t positive_edge = 0;
};

struct GzGraph {
  std::size_t z = 0;
  std::vector<std::pair<std::size_t, std::size_t>> q_copies;
  std::vector<XCopy> x_copies;
  /// Vertices: q-copies, then x-copies. Edge i is MultCopyGraph edge i,
  /// oriented x-copy -> q-copy.
  Graph graph;
  /// Projection of each edge to the lifted Tanner multigraph.
  std::vector<std::size_t> edge_projection;

  std::size_t x_copy_vertex(std::size_t i) const { return q_copies.size() + i; }
};

/// Lexicographic: at each x, the i-th negative edge is paired with the i-th
/// positive edge, both sorted by (q-copy, parallel index). Seeded: positives
/// are shuffled at each x in index order with one generator.
GzGraph pair_edges(const MultCopyGraph& m, const PairingStrategy& strategy = PairingStrategy::lexicographic());

struct YzDescriptor {
  /// First Betti number per connected component, ordered by lowest vertex.
  std::vector<std::size_t> betti;

  /// "#₃ S³×S¹", components joined by " ⊔ ".
  std::string to_string() const;
};

YzDescriptor betti_components(const GzGraph& g);

}  // namespace qlift
