#include "qlift/zlift.hpp"

#include <numeric>
#include <vector>

#include "qlift/errors.hpp"

namespace qlift {

namespace {

std::string entry_name(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

void check_reduction(const IntMatrix& lifted, const BitMatrix& base, const char* name) {
  if (static_cast<std::size_t>(lifted.rows()) != base.rows() ||
      static_cast<std::size_t>(lifted.cols()) != base.cols()) {
    throw Error(ErrorKind::dimension, std::string(name) + " has shape " + std::to_string(lifted.rows()) + "x" +
                                          std::to_string(lifted.cols()) + ", base has " +
                                          std::to_string(base.rows()) + "x" + std::to_string(base.cols()));
  }
  for (Eigen::Index i = 0; i < lifted.rows(); ++i) {
    for (Eigen::Index j = 0; j < lifted.cols(); ++j) {
      const bool odd = (lifted(i, j) & 1) != 0;
      if (odd != base.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        throw Error(ErrorKind::validation,
                    std::string(name) + " does not reduce to the base matrix mod 2 at " + entry_name(i, j));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Constraint search shared by the modular and bounded-integer variants.
// Variables are the support entries: hz row-major first, then hx row-major.
// Each (x, z) pair with overlapping supports contributes sum_q hx(x,q) hz(z,q) = 0.
// ---------------------------------------------------------------------------

struct Term {
  std::size_t hx_var;
  std::size_t hz_var;
};

struct Problem {
  std::vector<Eigen::Index> row, col;
  std::vector<bool> in_hz;
  std::vector<std::vector<Term>> constraints;
  std::vector<bool> gauge_fixed;
  std::size_t hx_rows = 0, hz_rows = 0, n = 0;
};

Problem build_problem(const CssCode& base) {
  Problem p;
  p.hx_rows = base.hx().rows();
  p.hz_rows = base.hz().rows();
  p.n = base.n();
  std::vector<std::size_t> hx_id(p.hx_rows * p.n), hz_id(p.hz_rows * p.n);
  auto add = [&](const BitMatrix& m, bool hz, std::vector<std::size_t>& ids) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m.get(i, j)) continue;
        ids[i * p.n + j] = p.row.size();
        p.row.push_back(static_cast<Eigen::Index>(i));
        p.col.push_back(static_cast<Eigen::Index>(j));
        p.in_hz.push_back(hz);
      }
    }
  };
  add(base.hz(), true, hz_id);
  add(base.hx(), false, hx_id);

  for (std::size_t x = 0; x < p.hx_rows; ++x) {
    for (std::size_t z = 0; z < p.hz_rows; ++z) {
      std::vector<Term> terms;
      for (std::size_t q = 0; q < p.n; ++q) {
        if (base.hx().get(x, q) && base.hz().get(z, q)) terms.push_back({hx_id[x * p.n + q], hz_id[z * p.n + q]});
      }
      if (!terms.empty()) p.constraints.push_back(std::move(terms));
    }
  }

  // Row and column rescalings (units mod 2^k, signs over Z) act freely on the
  // solution set, so a spanning forest of the support graph can be fixed to 1.
  const std::size_t nodes = p.hx_rows + p.hz_rows + p.n;
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  p.gauge_fixed.assign(p.row.size(), false);
  for (std::size_t v = 0; v < p.row.size(); ++v) {
    const std::size_t r = static_cast<std::size_t>(p.row[v]) + (p.in_hz[v] ? p.hx_rows : 0);
    const std::size_t c = p.hx_rows + p.hz_rows + static_cast<std::size_t>(p.col[v]);
    const std::size_t a = find(r), b = find(c);
    if (a != b) {
      parent[a] = b;
      p.gauge_fixed[v] = true;
    }
  }
  return p;
}

struct ModularDomain {
  std::uint64_t mask;

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b)) & mask);
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>((static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b)) & mask);
  }
  bool is_zero(std::int64_t s) const { return s == 0; }
  std::optional<std::int64_t> solve(std::int64_t coeff, std::int64_t sum) const {
    // Newton iteration for the inverse of an odd number mod 2^64.
    std::uint64_t c = static_cast<std::uint64_t>(coeff);
    std::uint64_t inv = c;
    for (int i = 0; i < 6; ++i) inv *= 2 - c * inv;
    const std::uint64_t v = ((0 - static_cast<std::uint64_t>(sum)) * inv) & mask;
    if ((v & 1) == 0) return std::nullopt;
    return static_cast<std::int64_t>(v);
  }
  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (std::uint64_t v = 1; v <= mask; v += 2) out.push_back(static_cast<std::int64_t>(v));
    return out;
  }
};

struct BoundedDomain {
  std::int64_t bound;

  std::int64_t add(std::int64_t a, std::int64_t b) const { return detail::checked_add(a, b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return detail::checked_mul(a, b); }
  bool is_zero(std::int64_t s) const { return s == 0; }
  std::optional<std::int64_t> solve(std::int64_t coeff, std::int64_t sum) const {
    if (sum % coeff != 0) return std::nullopt;
    const std::int64_t v = -sum / coeff;
    if ((v & 1) == 0 || v > bound || v < -bound) return std::nullopt;
    return v;
  }
  std::vector<std::int64_t> values() const {
    std::vector<std::int64_t> out;
    for (std::int64_t v = 1; v <= bound; v += 2) {
      out.push_back(v);
      out.push_back(-v);
    }
    return out;
  }
};

template <typename Domain>
class Search {
 public:
  Search(const Problem& p, Domain domain, std::uint64_t budget)
      : p_(p), domain_(domain), values_(domain.values()), budget_(budget),
        value_(p.row.size(), 0), assigned_(p.row.size(), false) {}

  std::optional<std::vector<std::int64_t>> run() {
    for (std::size_t v = 0; v < value_.size(); ++v) {
      if (p_.gauge_fixed[v]) assign(v, 1);
    }
    if (!descend()) return std::nullopt;
    return value_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void assign(std::size_t v, std::int64_t value) {
    value_[v] = value;
    assigned_[v] = true;
    trail_.push_back(v);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      assigned_[trail_.back()] = false;
      trail_.pop_back();
    }
  }

  /// Returns false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& terms : p_.constraints) {
        std::int64_t sum = 0;
        std::size_t open = 0;
        std::size_t open_var = 0;
        std::int64_t coeff = 0;
        for (const auto& [a, b] : terms) {
          const bool ha = assigned_[a], hb = assigned_[b];
          if (ha && hb) {
            sum = domain_.add(sum, domain_.mul(value_[a], value_[b]));
          } else if (ha || hb) {
            ++open;
            open_var = ha ? b : a;
            coeff = ha ? value_[a] : value_[b];
          } else {
            open += 2;
          }
        }
        if (open == 0 && !domain_.is_zero(sum)) return false;
        if (open == 1) {
          const auto forced = domain_.solve(coeff, sum);
          if (!forced) return false;
          assign(open_var, *forced);
          changed = true;
        }
      }
    }
    return true;
  }

  std::optional<std::size_t> choose() const {
    std::size_t best_open = 0;
    std::optional<std::size_t> best;
    for (const auto& terms : p_.constraints) {
      std::size_t open = 0;
      std::optional<std::size_t> first;
      for (const auto& [a, b] : terms) {
        for (std::size_t v : {b, a}) {
          if (assigned_[v]) continue;
          ++open;
          if (!first || v < *first) first = v;
        }
      }
      if (open > 1 && (!best || open < best_open)) {
        best_open = open;
        best = first;
      }
    }
    if (best) return best;
    for (std::size_t v = 0; v < assigned_.size(); ++v) {
      if (!assigned_[v]) return v;
    }
    return std::nullopt;
  }

  bool descend() {
    if (++nodes_ > budget_) {
      throw Error(ErrorKind::budget, "lift search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (!propagate()) return false;
    const auto var = choose();
    if (!var) return true;
    const std::size_t mark = trail_.size();
    for (std::int64_t value : values_) {
      assign(*var, value);
      if (descend()) return true;
      undo(mark);
    }
    return false;
  }

  const Problem& p_;
  Domain domain_;
  std::vector<std::int64_t> values_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int64_t> value_;
  std::vector<bool> assigned_;
  std::vector<std::size_t> trail_;
};

std::pair<IntMatrix, IntMatrix> to_matrices(const Problem& p, const std::vector<std::int64_t>& values) {
  const auto n = static_cast<Eigen::Index>(p.n);
  IntMatrix hx = IntMatrix::Zero(static_cast<Eigen::Index>(p.hx_rows), n);
  IntMatrix hz = IntMatrix::Zero(static_cast<Eigen::Index>(p.hz_rows), n);
  for (std::size_t v = 0; v < values.size(); ++v) {
    (p.in_hz[v] ? hz : hx)(p.row[v], p.col[v]) = values[v];
  }
  return {hx, hz};
}

}  // namespace

ZLiftedCode validate_zlift(const CssCode& base, const IntMatrix& hx, const IntMatrix& hz) {
  check_reduction(hx, base.hx(), "lifted H_X");
  check_reduction(hz, base.hz(), "lifted H_Z");
  const IntMatrix product = multiply(hx, hz.transpose());
  for (Eigen::Index x = 0; x < product.rows(); ++x) {
    for (Eigen::Index z = 0; z < product.cols(); ++z) {
      if (product(x, z) != 0) {
        throw Error(ErrorKind::validation, "integer product is " + std::to_string(product(x, z)) +
                                               " for X-check " + std::to_string(x) + " and Z-check " +
                                               std::to_string(z));
      }
    }
  }
  const bool preserving = is_odd_on_support(hx, base.hx()) && is_odd_on_support(hz, base.hz());
  return ZLiftedCode{hx, hz, base, preserving};
}

ZLiftedCode trivial_zlift(const CssCode& base) {
  return validate_zlift(base, from_bits(base.hx()), from_bits(base.hz()));
}

std::optional<ZLiftedCode> support_preserving_witness(const CssCode& base, std::int64_t entry_bound,
                                                      std::uint64_t budget) {
  if (entry_bound < 1 || entry_bound % 2 == 0 || entry_bound > (std::int64_t{1} << 20)) {
    throw Error(ErrorKind::validation, "entry bound must be odd and in [1, 2^20]");
  }
  const Problem p = build_problem(base);
  Search<BoundedDomain> search(p, BoundedDomain{entry_bound}, budget);
  const auto values = search.run();
  if (!values) return std::nullopt;
  const auto [hx, hz] = to_matrices(p, *values);
  return validate_zlift(base, hx, hz);
}

std::optional<ModularLift> modular_solution(const CssCode& base, int exponent, std::uint64_t budget) {
  if (exponent < 1 || exponent > 62) throw Error(ErrorKind::validation, "modulus exponent must lie in [1, 62]");
  const Problem p = build_problem(base);
  const std::uint64_t mask = (std::uint64_t{1} << exponent) - 1;
  Search<ModularDomain> search(p, ModularDomain{mask}, budget);
  const auto values = search.run();
  if (!values) return std::nullopt;
  auto [hx, hz] = to_matrices(p, *values);
  return ModularLift{exponent, std::move(hx), std::move(hz)};
}

std::string RefutationVerdict::to_string() const {
  return (refuted ? "refuted at 2^" : "witness mod 2^") + std::to_string(exponent) + (refuted ? "" : " survives");
}

RefutationVerdict refute_support_preserving(const CssCode& base, int k_max, std::uint64_t budget) {
  if (k_max < 2 || k_max > 62) throw Error(ErrorKind::validation, "k_max must lie in [2, 62]");
  std::optional<ModularLift> last;
  for (int k = 2; k <= k_max; ++k) {
    try {
      last = modular_solution(base, k, budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::budget) throw;
      const std::string partial =
          k == 2 ? "no level completed" : "solutions survive up to 2^" + std::to_string(k - 1);
      throw Error(ErrorKind::budget, std::string(e.what()) + " at 2^" + std::to_string(k) + "; " + partial);
    }
    if (!last) return RefutationVerdict{true, k, std::nullopt};
  }
  return RefutationVerdict{false, k_max, std::move(last)};
}

}  // namespace qlift
