#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qlift/css_code.hpp"
#include "qlift/intmatrix.hpp"

namespace qlift {

/// Integer chain complex reducing mod 2 to `base`, with hx * hz^T = 0 over Z.
struct ZLiftedCode {
  IntMatrix hx;
  IntMatrix hz;
  CssCode base;
  /// Same supports as the base matrices, every nonzero entry odd.
  bool support_preserving = false;
};

/// Checks shapes, the mod-2 reduction and the integer product. Errors name the
/// first offending entry or (x, z) pair.
ZLiftedCode validate_zlift(const CssCode& base, const IntMatrix& hx, const IntMatrix& hz);

/// The base matrices read over Z (valid only when every overlap is even).
ZLiftedCode trivial_zlift(const CssCode& base);

constexpr int default_k_max = 8;
constexpr std::int64_t default_entry_bound = 3;
constexpr std::uint64_t default_search_budget = std::uint64_t{1} << 24;

/// First support-preserving lift with odd entries in [-bound, bound], or
/// nullopt when the bounded space is exhausted. Throws ErrorKind::budget
/// after `budget` search nodes.
std::optional<ZLiftedCode> support_preserving_witness(const CssCode& base,
                                                      std::int64_t entry_bound = default_entry_bound,
                                                      std::uint64_t budget = default_search_budget);

/// Odd residues on the supports solving hx * hz^T = 0 mod 2^exponent.
struct ModularLift {
  int exponent = 0;
  IntMatrix hx;
  IntMatrix hz;
};

/// One modulus level of the refutation search.
std::optional<ModularLift> modular_solution(const CssCode& base, int exponent,
                                            std::uint64_t budget = default_search_budget);

struct RefutationVerdict {
  bool refuted = false;
  /// Level at which the search failed, or k_max when a solution survived.
  int exponent = 0;
  std::optional<ModularLift> survivor;

  /// "refuted at 2^k" or "witness mod 2^k survives".
  std::string to_string() const;
};

/// Runs modular_solution for k = 2..k_max and stops at the first failure,
/// which proves that no support-preserving lift exists over Z. A surviving
/// solution is not a proof of existence.
RefutationVerdict refute_support_preserving(const CssCode& base, int k_max = default_k_max,
                                            std::uint64_t budget = default_search_budget);

}  // namespace qlift
