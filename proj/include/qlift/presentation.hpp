#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qlift/css_code.hpp"
#include "qlift/gz_builder.hpp"
#include "qlift/tanner.hpp"
#include "qlift/zlift.hpp"

namespace qlift {

enum class VertexClass { qubit, x_check, z_apex };
enum class EdgeKind { tanner, apex, z_type };

/// A qubit reached by a Z-check together with the skeleton path from the
/// check's base point. `copy` is set when the term stands for a single
/// q-copy of G_z (coefficient sgn hz(z,q)); otherwise the coefficient is
/// hz(z,q) itself.
struct ZTerm {
  std::size_t q = 0;
  std::optional<std::size_t> copy;
  EdgePath path;
};

struct ZRegion {
  std::size_t z = 0;
  /// Lowest-index qubit of the region (the region's lowest vertex); empty
  /// when the Z-check has no support.
  std::optional<std::size_t> base;
  /// Skeleton edges of the region, ascending.
  std::vector<std::size_t> edges;
  /// Closed skeleton paths whose voltage products must be the identity.
  std::vector<EdgePath> relators;
  std::vector<ZTerm> terms;
};

/// A 2-complex presentation: 1-skeleton, spanning forest and relators per Z-check.
/// Vertices: qubits [0, n), X-checks [n, n + |X|), then Z apexes for cone presentations.
struct LiftPresentation {
  std::size_t qubit_count = 0;
  std::size_t x_count = 0;
  std::size_t z_count = 0;
  Graph skeleton;
  std::vector<VertexClass> vertex_class;
  /// Index of each vertex within its class.
  std::vector<std::size_t> vertex_label;
  std::vector<EdgeKind> edge_kind;
  /// Index among edges with the same endpoints (Tanner and Z-type edges), 0 for apex edges.
  std::vector<std::size_t> edge_parallel;
  SpanningForest tree;
  /// Non-tree edges, ascending.
  std::vector<std::size_t> generators;
  std::vector<ZRegion> regions;

  std::size_t qubit_vertex(std::size_t q) const { return q; }
  std::size_t x_vertex(std::size_t x) const { return qubit_count + x; }
  std::size_t relator_count() const;
};

/// How each cone(z) picks the tree that defines its fundamental cycles.
enum class RegionTree {
  /// Global forest restricted to the region, completed in edge order.
  forest_restricted,
  /// All apex edges of the region (relators become triangles).
  apex_star,
};

struct ConeOptions {
  RegionTree region_tree = RegionTree::forest_restricted;
  /// Base point is the (base_rotation mod |supp z|)-th qubit of supp(z).
  std::size_t base_rotation = 0;
};

/// Tanner graph of hx plus one apex per Z-check joined to every vertex of T_z.
/// Tanner edges run x -> q in row-major order; apex edges follow, apex -> v,
/// ordered by (z, v).
LiftPresentation cone_presentation(const CssCode& code, const ConeOptions& options = {});

/// Lifted Tanner multigraph (|hx(x,q)| parallel edges) plus Z-type edges
/// joining the components of each G_z. Relators are the images of a cycle
/// basis of each G_z and the cycles closing each Z-type edge. Missing
/// pairing entries default to lexicographic.
LiftPresentation cellular_presentation(const ZLiftedCode& zl, const std::vector<PairingStrategy>& pairings = {});

/// Rank of the abelianized fundamental group: generators minus the rank of
/// the relator exponent-sum matrix.
std::size_t quotient_abelianization_rank(const LiftPresentation& p);

}  // namespace qlift
