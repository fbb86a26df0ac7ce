#include "qlift/cover.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "qlift/errors.hpp"

namespace qlift {

Permutation identity_permutation(std::size_t t) {
  Permutation p(t);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

bool is_permutation(const Permutation& p, std::size_t t) {
  if (p.size() != t) return false;
  std::vector<bool> hit(t, false);
  for (std::size_t v : p) {
    if (v >= t || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Permutation cyclic_shift(std::size_t t, std::size_t shift) {
  Permutation p(t);
  for (std::size_t i = 0; i < t; ++i) p[i] = (i + shift) % t;
  return p;
}

VoltageAssignment identity_voltages(const LiftPresentation& p, std::size_t t) {
  return {t, std::vector<Permutation>(p.skeleton.edges.size(), identity_permutation(t))};
}

Permutation path_product(const Graph& g, const VoltageAssignment& v, const EdgePath& path) {
  Permutation out = identity_permutation(v.degree);
  for (const auto& oe : path) {
    if (oe.edge >= g.edges.size()) throw Error(ErrorKind::structure, "path uses an unknown edge");
    const Permutation& s = v.perms[oe.edge];
    out = compose(out, oe.forward ? s : inverse(s));
  }
  return out;
}

std::string RelatorViolation::to_string() const {
  return "relator " + std::to_string(relator) + " of Z-check " + std::to_string(z) + " is not the identity";
}

namespace {

void check_shape(const LiftPresentation& p, const VoltageAssignment& v) {
  if (v.degree == 0) throw Error(ErrorKind::validation, "cover degree must be positive");
  if (v.perms.size() != p.skeleton.edges.size()) {
    throw Error(ErrorKind::validation, "voltage assignment has " + std::to_string(v.perms.size()) +
                                           " permutations for " + std::to_string(p.skeleton.edges.size()) +
                                           " edges");
  }
  for (std::size_t e = 0; e < v.perms.size(); ++e) {
    if (!is_permutation(v.perms[e], v.degree)) {
      throw Error(ErrorKind::validation, "voltage on edge " + std::to_string(e) + " is not a permutation of " +
                                             std::to_string(v.degree) + " sheets");
    }
  }
}

}  // namespace

std::optional<RelatorViolation> validate_voltages(const LiftPresentation& p, const VoltageAssignment& v) {
  check_shape(p, v);
  const Permutation id = identity_permutation(v.degree);
  for (std::size_t e = 0; e < v.perms.size(); ++e) {
    if (p.tree.in_tree[e] && v.perms[e] != id) {
      throw Error(ErrorKind::validation, "tree edge " + std::to_string(e) + " carries a non-identity voltage");
    }
  }
  for (const auto& region : p.regions) {
    for (std::size_t r = 0; r < region.relators.size(); ++r) {
      if (path_product(p.skeleton, v, region.relators[r]) != id) return RelatorViolation{region.z, r};
    }
  }
  return std::nullopt;
}

VoltageAssignment gauge_normalize(const LiftPresentation& p, const VoltageAssignment& v) {
  check_shape(p, v);
  const std::size_t n = p.skeleton.vertex_count;
  std::vector<Permutation> potential(n, identity_permutation(v.degree));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.tree.depth[a] < p.tree.depth[b]; });
  for (std::size_t w : order) {
    if (!p.tree.parent_edge[w]) continue;
    const std::size_t e = *p.tree.parent_edge[w];
    const bool forward = p.skeleton.edges[e].to == w && p.skeleton.edges[e].from == p.tree.parent[w];
    potential[w] = compose(potential[p.tree.parent[w]], forward ? v.perms[e] : inverse(v.perms[e]));
  }
  VoltageAssignment out{v.degree, {}};
  for (std::size_t e = 0; e < v.perms.size(); ++e) {
    const auto [a, b] = p.skeleton.edges[e];
    out.perms.push_back(compose(compose(potential[a], v.perms[e]), inverse(potential[b])));
  }
  return out;
}

LiftedCode lift_code(const CssCode& base, const ZLiftedCode& zl, const LiftPresentation& p,
                     const VoltageAssignment& v) {
  if (!(zl.base == base)) throw Error(ErrorKind::validation, "Z-lift does not belong to the base code");
  if (p.qubit_count != base.n() || p.x_count != base.hx().rows() || p.z_count != base.hz().rows()) {
    throw Error(ErrorKind::dimension, "presentation does not match the base code");
  }
  if (const auto violation = validate_voltages(p, v)) {
    throw Error(ErrorKind::validation, "invalid voltages: " + violation->to_string());
  }
  const auto t = static_cast<Eigen::Index>(v.degree);
  const auto n = static_cast<Eigen::Index>(p.qubit_count);

  // X-block.
  std::vector<std::size_t> parallel_count(p.x_count * p.qubit_count, 0);
  for (std::size_t e = 0; e < p.skeleton.edges.size(); ++e) {
    if (p.edge_kind[e] != EdgeKind::tanner) continue;
    const std::size_t x = p.skeleton.edges[e].from - p.qubit_count;
    ++parallel_count[x * p.qubit_count + p.skeleton.edges[e].to];
  }
  for (Eigen::Index x = 0; x < zl.hx.rows(); ++x) {
    for (Eigen::Index q = 0; q < n; ++q) {
      const std::int64_t c = zl.hx(x, q);
      const std::size_t count = parallel_count[static_cast<std::size_t>(x) * p.qubit_count + static_cast<std::size_t>(q)];
      const auto magnitude = static_cast<std::size_t>(c < 0 ? -c : c);
      if (count != (c == 0 ? 0 : count == 1 ? 1 : magnitude)) {
        throw Error(ErrorKind::structure, "skeleton edges between X-check " + std::to_string(x) + " and qubit " +
                                              std::to_string(q) + " do not match the Z-lift");
      }
    }
  }
  IntMatrix hx = IntMatrix::Zero(zl.hx.rows() * t, n * t);
  for (std::size_t e = 0; e < p.skeleton.edges.size(); ++e) {
    if (p.edge_kind[e] != EdgeKind::tanner) continue;
    const auto x = static_cast<Eigen::Index>(p.skeleton.edges[e].from - p.qubit_count);
    const auto q = static_cast<Eigen::Index>(p.skeleton.edges[e].to);
    const std::int64_t c = zl.hx(x, q);
    const std::size_t count = parallel_count[static_cast<std::size_t>(x) * p.qubit_count + static_cast<std::size_t>(q)];
    const std::int64_t weight = count == 1 ? c : (c < 0 ? -1 : 1);
    for (Eigen::Index i = 0; i < t; ++i) {
      auto& cell = hx(x * t + i, q * t + static_cast<Eigen::Index>(v.perms[e][static_cast<std::size_t>(i)]));
      cell = detail::checked_add(cell, weight);
    }
  }

  // Z-block.
  IntMatrix hz = IntMatrix::Zero(zl.hz.rows() * t, n * t);
  for (const auto& region : p.regions) {
    const auto z = static_cast<Eigen::Index>(region.z);
    std::vector<std::size_t> copies(p.qubit_count, 0);
    std::vector<bool> whole(p.qubit_count, false);
    for (const auto& term : region.terms) {
      const auto q = static_cast<Eigen::Index>(term.q);
      const std::int64_t c = zl.hz(z, q);
      std::int64_t coefficient = c;
      if (term.copy) {
        ++copies[term.q];
        coefficient = c < 0 ? -1 : 1;
      } else {
        whole[term.q] = true;
      }
      const Permutation pi = path_product(p.skeleton, v, term.path);
      for (Eigen::Index i = 0; i < t; ++i) {
        auto& cell = hz(z * t + i, q * t + static_cast<Eigen::Index>(pi[static_cast<std::size_t>(i)]));
        cell = detail::checked_add(cell, coefficient);
      }
    }
    for (Eigen::Index q = 0; q < n; ++q) {
      const std::int64_t c = zl.hz(z, q);
      const auto magnitude = static_cast<std::size_t>(c < 0 ? -c : c);
      const auto uq = static_cast<std::size_t>(q);
      const bool covered = whole[uq] ? (c != 0 && copies[uq] == 0) : copies[uq] == magnitude;
      if (!covered) {
        throw Error(ErrorKind::structure, "region of Z-check " + std::to_string(z) + " does not match the Z-lift at qubit " +
                                              std::to_string(q));
      }
    }
  }

  const IntMatrix product = multiply(hx, hz.transpose());
  for (Eigen::Index a = 0; a < product.rows(); ++a) {
    for (Eigen::Index b = 0; b < product.cols(); ++b) {
      if (product(a, b) != 0) {
        throw Error(ErrorKind::consistency, "lifted product is nonzero at X-check (" + std::to_string(a / t) + "," +
                                                std::to_string(a % t) + ") and Z-check (" + std::to_string(b / t) +
                                                "," + std::to_string(b % t) + ")");
      }
    }
  }
  CssCode lifted(to_bits(hx), to_bits(hz));
  const bool preserving = is_odd_on_support(hx, lifted.hx()) && is_odd_on_support(hz, lifted.hz());
  return LiftedCode{ZLiftedCode{std::move(hx), std::move(hz), std::move(lifted), preserving}, base, v};
}

std::vector<std::vector<std::size_t>> cover_components(const VoltageAssignment& v, const LiftPresentation& p) {
  check_shape(p, v);
  Graph sheets{v.degree, {}};
  for (const auto& perm : v.perms) {
    for (std::size_t i = 0; i < v.degree; ++i) {
      if (perm[i] != i) sheets.edges.push_back({i, perm[i]});
    }
  }
  return connected_components(sheets);
}

namespace {

struct Occurrence {
  std::size_t generator;
  bool forward;
};

class CoverSearch {
 public:
  CoverSearch(const LiftPresentation& p, std::size_t t, const CoverSearchLimits& limits)
      : p_(p), t_(t), limits_(limits), id_(identity_permutation(t)) {
    if (t == 0 || t > limits.max_degree) {
      throw Error(ErrorKind::validation, "cover degree must lie in [1, " + std::to_string(limits.max_degree) + "]");
    }
    std::vector<std::size_t> index(p.skeleton.edges.size(), p.generators.size());
    for (std::size_t i = 0; i < p.generators.size(); ++i) index[p.generators[i]] = i;
    for (const auto& region : p.regions) {
      for (const auto& relator : region.relators) {
        std::vector<Occurrence> word;
        for (const auto& oe : relator) {
          if (index[oe.edge] < p.generators.size()) word.push_back({index[oe.edge], oe.forward});
        }
        if (!word.empty()) relators_.push_back(std::move(word));
      }
    }
    Permutation perm = id_;
    do {
      all_perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    value_.assign(p.generators.size(), id_);
    assigned_.assign(p.generators.size(), false);
  }

  std::vector<std::vector<Permutation>> run() {
    descend(0);
    return std::move(solutions_);
  }

 private:
  void assign(std::size_t g, Permutation value) {
    value_[g] = std::move(value);
    assigned_[g] = true;
    trail_.push_back(g);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      assigned_[trail_.back()] = false;
      trail_.pop_back();
    }
  }

  Permutation product(const std::vector<Occurrence>& word, std::size_t begin, std::size_t end) const {
    Permutation out = id_;
    for (std::size_t i = begin; i < end; ++i) {
      const Permutation& s = value_[word[i].generator];
      out = compose(out, word[i].forward ? s : inverse(s));
    }
    return out;
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& word : relators_) {
        std::size_t open = 0;
        std::size_t position = 0;
        std::optional<std::size_t> open_generator;
        bool single = true;
        for (std::size_t i = 0; i < word.size(); ++i) {
          if (assigned_[word[i].generator]) continue;
          if (open_generator && *open_generator != word[i].generator) single = false;
          open_generator = word[i].generator;
          position = i;
          ++open;
        }
        if (open == 0) {
          if (product(word, 0, word.size()) != id_) return false;
        } else if (open == 1 && single) {
          // prefix * s * suffix = id  =>  s = prefix^-1 * suffix^-1
          const Permutation s = compose(inverse(product(word, 0, position)), inverse(product(word, position + 1, word.size())));
          assign(word[position].generator, word[position].forward ? s : inverse(s));
          changed = true;
        }
      }
    }
    return true;
  }

  std::optional<std::size_t> choose() const {
    std::optional<std::size_t> best;
    std::size_t best_open = 0;
    for (const auto& word : relators_) {
      std::set<std::size_t> open;
      for (const auto& occ : word) {
        if (!assigned_[occ.generator]) open.insert(occ.generator);
      }
      if (!open.empty() && (!best || open.size() < best_open)) {
        best_open = open.size();
        best = *open.begin();
      }
    }
    if (best) return best;
    for (std::size_t g = 0; g < assigned_.size(); ++g) {
      if (!assigned_[g]) return g;
    }
    return std::nullopt;
  }

  void descend(std::size_t depth) {
    if (++nodes_ > limits_.node_budget) {
      throw Error(ErrorKind::budget, "cover enumeration exceeded " + std::to_string(limits_.node_budget) + " nodes");
    }
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return;
    }
    const auto g = choose();
    if (!g) {
      solutions_.push_back(value_);
    } else {
      if (depth >= limits_.max_free_generators) {
        throw Error(ErrorKind::budget, "cover enumeration needs more than " +
                                           std::to_string(limits_.max_free_generators) + " free generators");
      }
      for (const auto& perm : all_perms_) {
        const std::size_t inner = trail_.size();
        assign(*g, perm);
        descend(depth + 1);
        undo(inner);
      }
    }
    undo(mark);
  }

  const LiftPresentation& p_;
  std::size_t t_;
  CoverSearchLimits limits_;
  Permutation id_;
  std::vector<std::vector<Occurrence>> relators_;
  std::vector<Permutation> all_perms_;
  std::vector<Permutation> value_;
  std::vector<bool> assigned_;
  std::vector<std::size_t> trail_;
  std::vector<std::vector<Permutation>> solutions_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::size_t> flatten(const std::vector<Permutation>& images) {
  std::vector<std::size_t> out;
  for (const auto& p : images) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<std::size_t> canonical_form(const std::vector<Permutation>& images, std::size_t t) {
  std::vector<std::size_t> best;
  Permutation tau = identity_permutation(t);
  do {
    const Permutation tau_inv = inverse(tau);
    std::vector<std::size_t> candidate;
    for (const auto& g : images) {
      for (std::size_t j = 0; j < t; ++j) candidate.push_back(tau[g[tau_inv[j]]]);
    }
    if (best.empty() || candidate < best) best = std::move(candidate);
  } while (std::next_permutation(tau.begin(), tau.end()));
  return best;
}

VoltageAssignment assemble(const LiftPresentation& p, std::size_t t, const std::vector<std::size_t>& flat) {
  VoltageAssignment v = identity_voltages(p, t);
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    v.perms[p.generators[i]].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * t),
                                    flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * t));
  }
  return v;
}

bool transitive(const std::vector<Permutation>& images, std::size_t t) {
  Graph sheets{t, {}};
  for (const auto& perm : images) {
    for (std::size_t i = 0; i < t; ++i) sheets.edges.push_back({i, perm[i]});
  }
  return connected_components(sheets).size() == 1;
}

}  // namespace

std::vector<VoltageAssignment> enumerate_covers(const LiftPresentation& p, std::size_t t, bool connected_only,
                                                const CoverSearchLimits& limits) {
  std::set<std::vector<std::size_t>> classes;
  for (const auto& images : CoverSearch(p, t, limits).run()) {
    if (connected_only && !transitive(images, t)) continue;
    classes.insert(canonical_form(images, t));
  }
  std::vector<VoltageAssignment> out;
  for (const auto& flat : classes) out.push_back(assemble(p, t, flat));
  return out;
}

std::vector<VoltageAssignment> enumerate_valid_voltages(const LiftPresentation& p, std::size_t t,
                                                        const CoverSearchLimits& limits) {
  std::set<std::vector<std::size_t>> all;
  for (const auto& images : CoverSearch(p, t, limits).run()) all.insert(flatten(images));
  std::vector<VoltageAssignment> out;
  for (const auto& flat : all) out.push_back(assemble(p, t, flat));
  return out;
}

}  // namespace qlift
