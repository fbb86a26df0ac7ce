#include "qlift/tanner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "qlift/errors.hpp"

namespace qlift {

std::size_t tail(const Graph& g, OrientedEdge e) {
  const Edge& edge = g.edges.at(e.edge);
  return e.forward ? edge.from : edge.to;
}

std::size_t head(const Graph& g, OrientedEdge e) {
  const Edge& edge = g.edges.at(e.edge);
  return e.forward ? edge.to : edge.from;
}

bool is_closed_path(const Graph& g, const EdgePath& path) {
  if (path.empty()) return true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (head(g, path[i]) != tail(g, path[i + 1])) return false;
  }
  return head(g, path.back()) == tail(g, path.front());
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Incidence {
  std::size_t neighbour;
  std::size_t edge;
  auto operator<=>(const Incidence&) const = default;
};

std::vector<std::vector<Incidence>> adjacency(const Graph& g) {
  std::vector<std::vector<Incidence>> adj(g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    if (a >= g.vertex_count || b >= g.vertex_count) {
      throw Error(ErrorKind::structure, "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    adj[a].push_back({b, e});
    if (a != b) adj[b].push_back({a, e});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  DisjointSets sets(g.vertex_count);
  for (const auto& e : g.edges) sets.unite(e.from, e.to);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(g.vertex_count, g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    const std::size_t r = sets.find(v);
    if (slot[r] == g.vertex_count) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

std::size_t first_betti_number(const Graph& g) {
  return g.edges.size() + connected_components(g).size() - g.vertex_count;
}

Graph TannerGraph::graph() const {
  Graph g{check_count + bit_count, {}};
  g.edges.reserve(edges.size());
  for (const auto& [c, b] : edges) g.edges.push_back({c, check_count + b});
  return g;
}

TannerGraph tanner_graph(const BitMatrix& h) {
  TannerGraph t{h.rows(), h.cols(), {}};
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      if (h.get(r, c)) t.edges.emplace_back(r, c);
    }
  }
  return t;
}

Graph SignedMultigraph::graph() const {
  std::vector<std::size_t> check_slot(check_count, check_count + bit_count);
  std::vector<std::size_t> bit_slot(bit_count, check_count + bit_count);
  for (std::size_t i = 0; i < checks.size(); ++i) check_slot[checks[i]] = i;
  for (std::size_t i = 0; i < bits.size(); ++i) bit_slot[bits[i]] = checks.size() + i;
  Graph g{checks.size() + bits.size(), {}};
  for (const auto& e : edges) g.edges.push_back({check_slot[e.check], bit_slot[e.bit]});
  return g;
}

std::size_t SignedMultigraph::edge_count(std::size_t check, std::size_t bit) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const SignedEdge& e) {
    return e.check == check && e.bit == bit;
  }));
}

SignedMultigraph signed_lifted_tanner(const IntMatrix& h) {
  SignedMultigraph t;
  t.check_count = static_cast<std::size_t>(h.rows());
  t.bit_count = static_cast<std::size_t>(h.cols());
  t.checks.resize(t.check_count);
  t.bits.resize(t.bit_count);
  std::iota(t.checks.begin(), t.checks.end(), 0);
  std::iota(t.bits.begin(), t.bits.end(), 0);
  for (Eigen::Index x = 0; x < h.rows(); ++x) {
    for (Eigen::Index q = 0; q < h.cols(); ++q) {
      const std::int64_t v = h(x, q);
      const int sign = v < 0 ? -1 : 1;
      const auto count = static_cast<std::size_t>(v < 0 ? -v : v);
      for (std::size_t p = 0; p < count; ++p) {
        t.edges.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(q), p, sign});
      }
    }
  }
  return t;
}

SignedMultigraph induced_subgraph_z(const SignedMultigraph& t, std::span<const std::int64_t> z_row) {
  if (z_row.size() != t.bit_count) {
    throw Error(ErrorKind::dimension, "z row has length " + std::to_string(z_row.size()) + ", expected " +
                                          std::to_string(t.bit_count));
  }
  SignedMultigraph out;
  out.check_count = t.check_count;
  out.bit_count = t.bit_count;
  std::vector<bool> keep_check(t.check_count, false);
  for (const auto& e : t.edges) {
    if (z_row[e.bit] != 0) {
      keep_check[e.check] = true;
      out.edges.push_back(e);
    }
  }
  for (std::size_t q : t.bits) {
    if (z_row[q] != 0) out.bits.push_back(q);
  }
  for (std::size_t x : t.checks) {
    if (keep_check[x]) out.checks.push_back(x);
  }
  return out;
}

SpanningForest forest_from_tree_edges(const Graph& g, const std::vector<bool>& in_tree) {
  if (in_tree.size() != g.edges.size()) {
    throw Error(ErrorKind::structure, "tree flags do not match the edge count");
  }
  const auto adj = adjacency(g);
  SpanningForest f;
  f.parent_edge.assign(g.vertex_count, std::nullopt);
  f.parent.resize(g.vertex_count);
  f.depth.assign(g.vertex_count, 0);
  f.component.assign(g.vertex_count, g.vertex_count);
  f.in_tree = in_tree;

  std::size_t reached_edges = 0;
  for (std::size_t root = 0; root < g.vertex_count; ++root) {
    if (f.component[root] != g.vertex_count) continue;
    const std::size_t comp = f.roots.size();
    f.roots.push_back(root);
    f.parent[root] = root;
    f.component[root] = comp;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : adj[v]) {
        if (!in_tree[e] || f.parent_edge[v] == e) continue;
        if (f.component[w] != g.vertex_count) {
          throw Error(ErrorKind::structure, "tree edges contain a cycle through edge " + std::to_string(e));
        }
        f.component[w] = comp;
        f.parent[w] = v;
        f.parent_edge[w] = e;
        f.depth[w] = f.depth[v] + 1;
        ++reached_edges;
        queue.push_back(w);
      }
    }
  }
  const auto flagged = static_cast<std::size_t>(std::count(in_tree.begin(), in_tree.end(), true));
  if (flagged != reached_edges) throw Error(ErrorKind::structure, "tree edges contain a cycle");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!in_tree[e]) f.non_tree_edges.push_back(e);
  }
  return f;
}

SpanningForest spanning_forest(const Graph& g) {
  const auto adj = adjacency(g);
  std::vector<bool> in_tree(g.edges.size(), false);
  std::vector<bool> seen(g.vertex_count, false);
  for (std::size_t root = 0; root < g.vertex_count; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const auto& [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        in_tree[e] = true;
        queue.push_back(w);
      }
    }
  }
  return forest_from_tree_edges(g, in_tree);
}

SpanningForest extend_forest(const Graph& g, std::span<const std::size_t> seed_edges) {
  DisjointSets sets(g.vertex_count);
  std::vector<bool> in_tree(g.edges.size(), false);
  for (std::size_t e : seed_edges) {
    if (!sets.unite(g.edges.at(e).from, g.edges.at(e).to)) {
      throw Error(ErrorKind::structure, "seed edges contain a cycle through edge " + std::to_string(e));
    }
    in_tree[e] = true;
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!in_tree[e] && sets.unite(g.edges[e].from, g.edges[e].to)) in_tree[e] = true;
  }
  return forest_from_tree_edges(g, in_tree);
}

EdgePath tree_path(const Graph& g, const SpanningForest& f, std::size_t from, std::size_t to) {
  if (f.component.at(from) != f.component.at(to)) {
    throw Error(ErrorKind::structure, "vertices " + std::to_string(from) + " and " + std::to_string(to) +
                                          " lie in different tree components");
  }
  EdgePath up;    // from -> lca
  EdgePath down;  // to -> lca, reversed later
  std::size_t a = from;
  std::size_t b = to;
  auto climb = [&](std::size_t& v, EdgePath& out) {
    const std::size_t e = *f.parent_edge[v];
    out.push_back({e, g.edges[e].from == v && g.edges[e].to == f.parent[v]});
    v = f.parent[v];
  };
  while (f.depth[a] > f.depth[b]) climb(a, up);
  while (f.depth[b] > f.depth[a]) climb(b, down);
  while (a != b) {
    climb(a, up);
    climb(b, down);
  }
  for (auto it = down.rbegin(); it != down.rend(); ++it) up.push_back({it->edge, !it->forward});
  return up;
}

std::vector<EdgePath> cycle_basis(const Graph& g, const SpanningForest& f) {
  const bool shaped = f.in_tree.size() == g.edges.size() && f.component.size() == g.vertex_count &&
                      f.parent_edge.size() == g.vertex_count;
  if (!shaped) throw Error(ErrorKind::structure, "forest does not match the graph");
  std::size_t tree_edges = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    if (f.component[a] != f.component[b]) {
      throw Error(ErrorKind::structure, "forest does not span edge " + std::to_string(e));
    }
    if (f.in_tree[e]) ++tree_edges;
  }
  if (tree_edges + f.component_count() != g.vertex_count) {
    throw Error(ErrorKind::structure, "forest is not spanning");
  }
  std::vector<EdgePath> cycles;
  for (std::size_t e : f.non_tree_edges) {
    EdgePath cycle{{e, true}};
    const auto back = tree_path(g, f, g.edges[e].to, g.edges[e].from);
    cycle.insert(cycle.end(), back.begin(), back.end());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace qlift
