#include "qlift/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "qlift/errors.hpp"

namespace qlift {

std::size_t LiftPresentation::relator_count() const {
  std::size_t total = 0;
  for (const auto& r : regions) total += r.relators.size();
  return total;
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// A subgraph re-indexed compactly, with the maps back to the parent graph.
struct Subgraph {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::vector<std::size_t> local_of;
  Graph local;

  Subgraph(const Graph& g, std::vector<std::size_t> vs, std::vector<std::size_t> es)
      : vertices(std::move(vs)), edges(std::move(es)), local_of(g.vertex_count, npos) {
    for (std::size_t i = 0; i < vertices.size(); ++i) local_of[vertices[i]] = i;
    local.vertex_count = vertices.size();
    for (std::size_t e : edges) local.edges.push_back({local_of[g.edges[e].from], local_of[g.edges[e].to]});
  }

  EdgePath to_global(const EdgePath& path) const {
    EdgePath out;
    out.reserve(path.size());
    for (const auto& oe : path) out.push_back({edges[oe.edge], oe.forward});
    return out;
  }

  std::vector<std::size_t> local_edges_where(const std::vector<bool>& flag) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (flag[edges[i]]) out.push_back(i);
    }
    return out;
  }
};

void finish_skeleton(LiftPresentation& p) {
  p.tree = spanning_forest(p.skeleton);
  p.generators = p.tree.non_tree_edges;
}

void add_vertex_classes(LiftPresentation& p, std::size_t apexes) {
  for (std::size_t q = 0; q < p.qubit_count; ++q) {
    p.vertex_class.push_back(VertexClass::qubit);
    p.vertex_label.push_back(q);
  }
  for (std::size_t x = 0; x < p.x_count; ++x) {
    p.vertex_class.push_back(VertexClass::x_check);
    p.vertex_label.push_back(x);
  }
  for (std::size_t z = 0; z < apexes; ++z) {
    p.vertex_class.push_back(VertexClass::z_apex);
    p.vertex_label.push_back(z);
  }
  p.skeleton.vertex_count = p.vertex_class.size();
}

void add_edge(LiftPresentation& p, std::size_t from, std::size_t to, EdgeKind kind, std::size_t parallel) {
  p.skeleton.edges.push_back({from, to});
  p.edge_kind.push_back(kind);
  p.edge_parallel.push_back(parallel);
}

}  // namespace

LiftPresentation cone_presentation(const CssCode& code, const ConeOptions& options) {
  const BitMatrix& hx = code.hx();
  const BitMatrix& hz = code.hz();
  LiftPresentation p;
  p.qubit_count = code.n();
  p.x_count = hx.rows();
  p.z_count = hz.rows();
  add_vertex_classes(p, p.z_count);

  std::vector<std::vector<std::size_t>> tanner_at_qubit(p.qubit_count);
  for (std::size_t x = 0; x < p.x_count; ++x) {
    for (std::size_t q = 0; q < p.qubit_count; ++q) {
      if (!hx.get(x, q)) continue;
      tanner_at_qubit[q].push_back(p.skeleton.edges.size());
      add_edge(p, p.x_vertex(x), p.qubit_vertex(q), EdgeKind::tanner, 0);
    }
  }

  struct Cone {
    std::vector<std::size_t> support, vertices, tanner_edges, apex_edges;
  };
  std::vector<Cone> cones(p.z_count);
  for (std::size_t z = 0; z < p.z_count; ++z) {
    Cone& c = cones[z];
    std::vector<bool> check_seen(p.x_count, false);
    for (std::size_t q = 0; q < p.qubit_count; ++q) {
      if (!hz.get(z, q)) continue;
      c.support.push_back(q);
      for (std::size_t e : tanner_at_qubit[q]) {
        c.tanner_edges.push_back(e);
        check_seen[p.skeleton.edges[e].from - p.qubit_count] = true;
      }
    }
    c.vertices = c.support;
    for (std::size_t x = 0; x < p.x_count; ++x) {
      if (check_seen[x]) c.vertices.push_back(p.x_vertex(x));
    }
    std::sort(c.tanner_edges.begin(), c.tanner_edges.end());
  }
  const std::size_t apex0 = p.qubit_count + p.x_count;
  for (std::size_t z = 0; z < p.z_count; ++z) {
    for (std::size_t v : cones[z].vertices) {
      cones[z].apex_edges.push_back(p.skeleton.edges.size());
      add_edge(p, apex0 + z, v, EdgeKind::apex, 0);
    }
  }
  finish_skeleton(p);

  for (std::size_t z = 0; z < p.z_count; ++z) {
    const Cone& c = cones[z];
    ZRegion region;
    region.z = z;
    std::vector<std::size_t> vertices = c.vertices;
    vertices.push_back(apex0 + z);
    region.edges = c.tanner_edges;
    region.edges.insert(region.edges.end(), c.apex_edges.begin(), c.apex_edges.end());
    const Subgraph sub(p.skeleton, vertices, region.edges);

    std::vector<std::size_t> seed;
    if (options.region_tree == RegionTree::apex_star) {
      for (std::size_t i = c.tanner_edges.size(); i < region.edges.size(); ++i) seed.push_back(i);
    } else {
      seed = sub.local_edges_where(p.tree.in_tree);
    }
    const SpanningForest forest = extend_forest(sub.local, seed);
    for (const auto& cycle : cycle_basis(sub.local, forest)) region.relators.push_back(sub.to_global(cycle));

    if (!c.support.empty()) {
      const std::size_t base = c.support[options.base_rotation % c.support.size()];
      region.base = base;
      for (std::size_t q : c.support) {
        const auto path = tree_path(sub.local, forest, sub.local_of[base], sub.local_of[q]);
        region.terms.push_back({q, std::nullopt, sub.to_global(path)});
      }
    }
    p.regions.push_back(std::move(region));
  }
  return p;
}

LiftPresentation cellular_presentation(const ZLiftedCode& zl, const std::vector<PairingStrategy>& pairings) {
  const SignedMultigraph lifted = signed_lifted_tanner(zl.hx);
  LiftPresentation p;
  p.qubit_count = lifted.bit_count;
  p.x_count = lifted.check_count;
  p.z_count = static_cast<std::size_t>(zl.hz.rows());
  add_vertex_classes(p, 0);

  std::vector<std::vector<std::size_t>> tanner_at_qubit(p.qubit_count);
  for (const auto& e : lifted.edges) {
    tanner_at_qubit[e.bit].push_back(p.skeleton.edges.size());
    add_edge(p, p.x_vertex(e.check), p.qubit_vertex(e.bit), EdgeKind::tanner, e.parallel);
  }

  std::vector<GzGraph> gz;
  std::vector<std::vector<std::size_t>> z_edges(p.z_count);
  for (std::size_t z = 0; z < p.z_count; ++z) {
    const PairingStrategy strategy = z < pairings.size() ? pairings[z] : PairingStrategy::lexicographic();
    gz.push_back(pair_edges(multigraph_z(zl, z), strategy));
    const auto components = connected_components(gz.back().graph);
    const auto rho_q = [&](std::size_t v) { return gz.back().q_copies.at(v).first; };
    for (std::size_t j = 1; j < components.size(); ++j) {
      z_edges[z].push_back(p.skeleton.edges.size());
      const std::size_t from = p.qubit_vertex(rho_q(components[0][0]));
      const std::size_t to = p.qubit_vertex(rho_q(components[j][0]));
      std::size_t parallel = 0;
      for (std::size_t e = 0; e < p.skeleton.edges.size(); ++e) {
        if (p.skeleton.edges[e] == Edge{from, to}) ++parallel;
      }
      add_edge(p, from, to, EdgeKind::z_type, parallel);
    }
  }
  finish_skeleton(p);

  for (std::size_t z = 0; z < p.z_count; ++z) {
    const GzGraph& g = gz[z];
    ZRegion region;
    region.z = z;
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < p.qubit_count; ++q) {
      if (zl.hz(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(q)) != 0) support.push_back(q);
    }
    std::vector<bool> check_seen(p.x_count, false);
    for (std::size_t q : support) {
      for (std::size_t e : tanner_at_qubit[q]) {
        region.edges.push_back(e);
        check_seen[p.skeleton.edges[e].from - p.qubit_count] = true;
      }
    }
    std::sort(region.edges.begin(), region.edges.end());
    region.edges.insert(region.edges.end(), z_edges[z].begin(), z_edges[z].end());
    std::vector<std::size_t> vertices = support;
    for (std::size_t x = 0; x < p.x_count; ++x) {
      if (check_seen[x]) vertices.push_back(p.x_vertex(x));
    }
    const Subgraph sub(p.skeleton, vertices, region.edges);
    const SpanningForest forest = extend_forest(sub.local, sub.local_edges_where(p.tree.in_tree));

    const auto rho = [&](const EdgePath& path) {
      EdgePath out;
      for (const auto& oe : path) out.push_back({g.edge_projection[oe.edge], oe.forward});
      return out;
    };
    const SpanningForest gz_forest = spanning_forest(g.graph);
    for (const auto& cycle : cycle_basis(g.graph, gz_forest)) region.relators.push_back(rho(cycle));
    const auto region_cycles = cycle_basis(sub.local, forest);
    for (std::size_t i = 0; i < forest.non_tree_edges.size(); ++i) {
      if (p.edge_kind[sub.edges[forest.non_tree_edges[i]]] == EdgeKind::z_type) {
        region.relators.push_back(sub.to_global(region_cycles[i]));
      }
    }

    if (!support.empty()) region.base = support.front();
    for (std::size_t v = 0; v < g.q_copies.size(); ++v) {
      const std::size_t component = gz_forest.component[v];
      EdgePath path;
      if (component > 0) path.push_back({z_edges[z][component - 1], true});
      const auto inner = rho(tree_path(g.graph, gz_forest, gz_forest.roots[component], v));
      path.insert(path.end(), inner.begin(), inner.end());
      region.terms.push_back({g.q_copies[v].first, g.q_copies[v].second, std::move(path)});
    }
    p.regions.push_back(std::move(region));
  }
  return p;
}

namespace {

/// Rank over Z (equivalently Q) by Euclidean row reduction with checked arithmetic.
std::size_t integer_rank(std::vector<std::vector<std::int64_t>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    while (true) {
      std::size_t pivot = npos;
      for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (pivot == npos || std::llabs(rows[r][c]) < std::llabs(rows[pivot][c]))) pivot = r;
      }
      if (pivot == npos) break;
      std::swap(rows[rank], rows[pivot]);
      bool cleared = true;
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const std::int64_t factor = rows[r][c] / rows[rank][c];
        for (std::size_t j = c; j < cols; ++j) {
          rows[r][j] = detail::checked_add(rows[r][j], detail::checked_mul(-factor, rows[rank][j]));
        }
        if (rows[r][c] != 0) cleared = false;
      }
      if (cleared) {
        ++rank;
        break;
      }
    }
  }
  return rank;
}

}  // namespace

std::size_t quotient_abelianization_rank(const LiftPresentation& p) {
  std::vector<std::size_t> column(p.skeleton.edges.size(), npos);
  for (std::size_t i = 0; i < p.generators.size(); ++i) column[p.generators[i]] = i;
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& region : p.regions) {
    for (const auto& relator : region.relators) {
      std::vector<std::int64_t> row(p.generators.size(), 0);
      for (const auto& oe : relator) {
        if (column[oe.edge] != npos) row[column[oe.edge]] += oe.forward ? 1 : -1;
      }
      rows.push_back(std::move(row));
    }
  }
  return p.generators.size() - integer_rank(std::move(rows), p.generators.size());
}

}  // namespace qlift
