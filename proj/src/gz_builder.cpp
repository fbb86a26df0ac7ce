#include "qlift/gz_builder.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "qlift/errors.hpp"

namespace qlift {

MultCopyGraph multigraph_z(const ZLiftedCode& zl, std::size_t z) {
  if (z >= static_cast<std::size_t>(zl.hz.rows())) {
    throw Error(ErrorKind::dimension, "Z-check " + std::to_string(z) + " out of range");
  }
  const SignedMultigraph tanner = signed_lifted_tanner(zl.hx);
  std::vector<std::vector<std::size_t>> edges_at_bit(tanner.bit_count);
  for (std::size_t e = 0; e < tanner.edges.size(); ++e) edges_at_bit[tanner.edges[e].bit].push_back(e);

  MultCopyGraph m;
  m.z = z;
  std::vector<bool> touched(tanner.check_count, false);
  for (std::size_t q = 0; q < tanner.bit_count; ++q) {
    const std::int64_t c = zl.hz(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(q));
    const int zsign = c < 0 ? -1 : 1;
    const auto copies = static_cast<std::size_t>(c < 0 ? -c : c);
    for (std::size_t copy = 0; copy < copies; ++copy) {
      const std::size_t index = m.q_copies.size();
      m.q_copies.emplace_back(q, copy);
      for (std::size_t e : edges_at_bit[q]) {
        const SignedEdge& te = tanner.edges[e];
        touched[te.check] = true;
        m.edges.push_back({index, te.check, te.parallel, zsign * te.sign, e});
      }
    }
  }
  std::vector<std::int64_t> balance(tanner.check_count, 0);
  for (const auto& e : m.edges) balance[e.x] += e.sign;
  for (std::size_t x = 0; x < tanner.check_count; ++x) {
    if (balance[x] != 0) {
      throw Error(ErrorKind::consistency, "signed edges at X-check " + std::to_string(x) + " are unbalanced for Z-check " +
                                              std::to_string(z));
    }
    if (touched[x]) m.x_vertices.push_back(x);
  }
  return m;
}

GzGraph pair_edges(const MultCopyGraph& m, const PairingStrategy& strategy) {
  GzGraph g;
  g.z = m.z;
  g.q_copies = m.q_copies;
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> by_x;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    auto& [neg, pos] = by_x[m.edges[e].x];
    (m.edges[e].sign < 0 ? neg : pos).push_back(e);
  }
  std::optional<std::mt19937_64> rng;
  if (strategy.seed) rng.emplace(*strategy.seed);
  for (auto& [x, sides] : by_x) {
    auto& [neg, pos] = sides;
    if (neg.size() != pos.size()) {
      throw Error(ErrorKind::consistency, "signed edges at X-check " + std::to_string(x) + " are unbalanced");
    }
    if (rng) {
      for (std::size_t i = pos.size(); i > 1; --i) std::swap(pos[i - 1], pos[(*rng)() % i]);
    }
    for (std::size_t i = 0; i < neg.size(); ++i) g.x_copies.push_back({x, neg[i], pos[i]});
  }

  g.graph.vertex_count = g.q_copies.size() + g.x_copies.size();
  std::vector<std::size_t> owner(m.edges.size());
  for (std::size_t i = 0; i < g.x_copies.size(); ++i) {
    owner[g.x_copies[i].negative_edge] = i;
    owner[g.x_copies[i].positive_edge] = i;
  }
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    g.graph.edges.push_back({g.x_copy_vertex(owner[e]), m.edges[e].q_copy});
    g.edge_projection.push_back(m.edges[e].tanner_edge);
  }
  return g;
}

namespace {

std::string subscript(std::size_t n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  const std::string plain = std::to_string(n);
  std::string out;
  for (char c : plain) out += digits[c - '0'];
  return out;
}

}  // namespace

std::string YzDescriptor::to_string() const {
  if (betti.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) out += " ⊔ ";
    out += "#" + subscript(betti[i]) + " S³×S¹";
  }
  return out;
}

YzDescriptor betti_components(const GzGraph& g) {
  const auto components = connected_components(g.graph);
  std::vector<std::size_t> component_of(g.graph.vertex_count);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t v : components[c]) component_of[v] = c;
  }
  std::vector<std::size_t> edges(components.size(), 0);
  for (const auto& e : g.graph.edges) ++edges[component_of[e.from]];
  YzDescriptor d;
  for (std::size_t c = 0; c < components.size(); ++c) d.betti.push_back(edges[c] + 1 - components[c].size());
  return d;
}

}  // namespace qlift
