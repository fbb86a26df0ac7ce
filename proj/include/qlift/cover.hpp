#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlift/css_code.hpp"
#include "qlift/presentation.hpp"
#include "qlift/zlift.hpp"

namespace qlift {

/// perm[i] is the image of sheet i.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t t);
/// Apply `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p, std::size_t t);
/// i -> i + shift mod t.
Permutation cyclic_shift(std::size_t t, std::size_t shift = 1);

/// One permutation of {0..t-1} per skeleton edge, transporting sheets from
/// the edge's tail to its head.
struct VoltageAssignment {
  std::size_t degree = 1;
  std::vector<Permutation> perms;

  bool operator==(const VoltageAssignment&) const = default;
};

VoltageAssignment identity_voltages(const LiftPresentation& p, std::size_t t);

/// Product along the path in traversal order; reversed edges contribute inverses.
Permutation path_product(const Graph& g, const VoltageAssignment& v, const EdgePath& path);

struct RelatorViolation {
  std::size_t z = 0;
  std::size_t relator = 0;
  std::string to_string() const;
};

/// First relator (by z, then index) whose product is not the identity.
/// Throws ErrorKind::validation if `v` is malformed or a tree edge carries a
/// non-identity permutation.
std::optional<RelatorViolation> validate_voltages(const LiftPresentation& p, const VoltageAssignment& v);

/// Equivalent assignment with the identity on every tree edge, obtained by
/// relabelling each vertex fiber by its tree-path product from the root.
VoltageAssignment gauge_normalize(const LiftPresentation& p, const VoltageAssignment& v);

struct LiftedCode {
  /// Rows and columns indexed base-major, fiber-minor; its base is the lifted CssCode.
  ZLiftedCode zlifted;
  CssCode base;
  VoltageAssignment voltage;

  const CssCode& code() const { return zlifted.base; }
};

/// Lifted incidence matrices. X-block: edge e between x and q adds its weight
/// at ((x,i), (q, v_e(i))); the weight is hx(x,q) for a single edge and its
/// sign for |hx(x,q)| parallel edges. Z-block: each term of region z adds its
/// coefficient at ((z,i), (q, path(i))). Throws ErrorKind::validation for
/// invalid voltages and ErrorKind::consistency if the product is nonzero.
LiftedCode lift_code(const CssCode& base, const ZLiftedCode& zl, const LiftPresentation& p,
                     const VoltageAssignment& v);

/// Orbits of the group generated by all edge permutations, each ascending.
std::vector<std::vector<std::size_t>> cover_components(const VoltageAssignment& v, const LiftPresentation& p);

struct CoverSearchLimits {
  std::size_t max_degree = 4;
  /// Generators that must be branched on (not forced by relators) along one path.
  std::size_t max_free_generators = 12;
  std::uint64_t node_budget = std::uint64_t{1} << 22;
};

/// One assignment per class under simultaneous conjugation by Sym(t), each in
/// its lexicographically minimal form, sorted. Throws ErrorKind::budget when
/// a limit is exceeded.
std::vector<VoltageAssignment> enumerate_covers(const LiftPresentation& p, std::size_t t, bool connected_only = false,
                                                const CoverSearchLimits& limits = {});

/// Every valid assignment with identity tree edges, sorted by generator images.
std::vector<VoltageAssignment> enumerate_valid_voltages(const LiftPresentation& p, std::size_t t,
                                                        const CoverSearchLimits& limits = {});

}  // namespace qlift
