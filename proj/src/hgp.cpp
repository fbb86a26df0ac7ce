#include "qlift/hgp.hpp"

#include <deque>

#include "qlift/errors.hpp"
#include "qlift/intmatrix.hpp"

namespace qlift {

namespace {

std::size_t checked_size_mul(std::size_t a, std::size_t b) {
  std::size_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::overflow, "hypergraph product block dimensions overflow");
  return out;
}

}  // namespace

CssCode hypergraph_product(const BitMatrix& h1, const BitMatrix& h2) {
  const std::size_t m1 = h1.rows(), n1 = h1.cols(), m2 = h2.rows(), n2 = h2.cols();
  const std::size_t left = checked_size_mul(n1, n2);
  const std::size_t right = checked_size_mul(m1, m2);
  if (left + right < left) throw Error(ErrorKind::overflow, "hypergraph product block dimensions overflow");
  checked_size_mul(m1, n2);
  checked_size_mul(n1, m2);
  const BitMatrix hx = hstack(kron(h1, BitMatrix::identity(n2)), kron(BitMatrix::identity(m1), h2.transpose()));
  const BitMatrix hz = hstack(kron(BitMatrix::identity(n1), h2), kron(h1.transpose(), BitMatrix::identity(m2)));
  return CssCode(hx, hz);
}

ZLiftedCode hpc_naive_zlift(const BitMatrix& h1, const BitMatrix& h2) {
  const CssCode base = hypergraph_product(h1, h2);
  const auto n1 = static_cast<Eigen::Index>(h1.cols());
  const auto n2 = static_cast<Eigen::Index>(h2.cols());
  const auto m1 = static_cast<Eigen::Index>(h1.rows());
  const auto m2 = static_cast<Eigen::Index>(h2.rows());
  const IntMatrix a1 = from_bits(h1);
  const IntMatrix a2 = from_bits(h2);
  const IntMatrix a1t = a1.transpose();
  const IntMatrix a2t = a2.transpose();
  IntMatrix hx(m1 * n2, n1 * n2 + m1 * m2);
  hx.leftCols(n1 * n2) = kron(a1, IntMatrix::Identity(n2, n2));
  hx.rightCols(m1 * m2) = kron(IntMatrix::Identity(m1, m1), a2t);
  IntMatrix hz(n1 * m2, n1 * n2 + m1 * m2);
  hz.leftCols(n1 * n2) = kron(IntMatrix::Identity(n1, n1), a2);
  hz.rightCols(m1 * m2) = -kron(a1t, IntMatrix::Identity(m2, m2));
  return validate_zlift(base, hx, hz);
}

BitMatrix repetition_check_matrix(std::size_t length) {
  if (length < 2) throw Error(ErrorKind::validation, "repetition code length must be at least 2");
  BitMatrix h(length, length);
  for (std::size_t i = 0; i < length; ++i) {
    h.flip(i, i);
    h.flip(i, (i + 1) % length);
  }
  return h;
}

VoltageAssignment cyclic_voltages(const BitMatrix& h, std::size_t degree) {
  const Graph g = tanner_graph(h).graph();
  const SpanningForest f = spanning_forest(g);
  VoltageAssignment v{degree, std::vector<Permutation>(g.edges.size(), identity_permutation(degree))};
  for (std::size_t e : f.non_tree_edges) v.perms[e] = cyclic_shift(degree, 1);
  return v;
}

VoltageAssignment product_voltage_candidate(const LiftPresentation& p, const BitMatrix& h1, const BitMatrix& h2,
                                            const VoltageAssignment& v1, const VoltageAssignment& v2,
                                            ProductMode mode) {
  const std::size_t m1 = h1.rows(), n1 = h1.cols(), m2 = h2.rows(), n2 = h2.cols();
  if (p.qubit_count != n1 * n2 + m1 * m2 || p.x_count != m1 * n2 || p.z_count != n1 * m2) {
    throw Error(ErrorKind::dimension, "presentation does not match the hypergraph product of the factors");
  }
  const TannerGraph t1 = tanner_graph(h1);
  const TannerGraph t2 = tanner_graph(h2);
  if (v1.perms.size() != t1.edges.size() || v2.perms.size() != t2.edges.size()) {
    throw Error(ErrorKind::dimension, "factor voltages do not match the factor Tanner graphs");
  }
  if (v1.degree != v2.degree) throw Error(ErrorKind::validation, "factor voltages act on different fibers");
  const std::size_t t = v1.degree;
  const Permutation id = identity_permutation(t);
  std::vector<std::size_t> index1(m1 * n1, 0), index2(m2 * n2, 0);
  for (std::size_t e = 0; e < t1.edges.size(); ++e) index1[t1.edges[e].first * n1 + t1.edges[e].second] = e;
  for (std::size_t e = 0; e < t2.edges.size(); ++e) index2[t2.edges[e].first * n2 + t2.edges[e].second] = e;
  const bool use1 = mode != ProductMode::factor2;
  const bool use2 = mode != ProductMode::factor1;

  VoltageAssignment v = identity_voltages(p, t);
  for (std::size_t e = 0; e < p.skeleton.edges.size(); ++e) {
    if (p.edge_kind[e] != EdgeKind::tanner) continue;
    const std::size_t x = p.skeleton.edges[e].from - p.qubit_count;
    const std::size_t q = p.skeleton.edges[e].to;
    const std::size_t c1 = x / n2, b2 = x % n2;
    if (q < n1 * n2) {
      const std::size_t b1 = q / n2;
      if (use1) v.perms[e] = v1.perms[index1[c1 * n1 + b1]];
    } else {
      const std::size_t c2 = (q - n1 * n2) % m2;
      if (use2) v.perms[e] = inverse(v2.perms[index2[c2 * n2 + b2]]);
    }
  }

  for (const auto& region : p.regions) {
    if (!region.base) continue;
    std::vector<std::optional<Permutation>> transport(p.skeleton.vertex_count);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(p.skeleton.vertex_count);
    std::vector<std::size_t> apex_edges;
    for (std::size_t e : region.edges) {
      const auto [a, b] = p.skeleton.edges[e];
      if (p.edge_kind[e] == EdgeKind::apex) {
        apex_edges.push_back(e);
        continue;
      }
      adj[a].emplace_back(b, e);
      adj[b].emplace_back(a, e);
    }
    transport[*region.base] = id;
    std::deque<std::size_t> queue{*region.base};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (const auto& [b, e] : adj[a]) {
        if (transport[b]) continue;
        const bool forward = p.skeleton.edges[e].from == a;
        transport[b] = compose(*transport[a], forward ? v.perms[e] : inverse(v.perms[e]));
        queue.push_back(b);
      }
    }
    for (std::size_t e : apex_edges) {
      const auto& target = transport[p.skeleton.edges[e].to];
      v.perms[e] = target ? *target : id;
    }
  }
  return gauge_normalize(p, v);
}

VoltageAssignment product_voltages(const LiftPresentation& p, const BitMatrix& h1, const BitMatrix& h2,
                                   const VoltageAssignment& v1, const VoltageAssignment& v2, ProductMode mode) {
  VoltageAssignment v = product_voltage_candidate(p, h1, h2, v1, v2, mode);
  if (const auto violation = validate_voltages(p, v)) {
    throw Error(ErrorKind::validation, "product voltages violate " + violation->to_string());
  }
  return v;
}

}  // namespace qlift
