#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qlift/bitmatrix.hpp"

namespace qlift {

/// A CSS code given by parity checks H_X (|X| x n) and H_Z (|Z| x n) with
/// H_X H_Z^T = 0 over F2. Construction validates; instances are always valid.
class CssCode {
 public:
  /// Throws ErrorKind::dimension on column mismatch and ErrorKind::orthogonality
  /// naming the first offending (x, z) pair in row-major order.
  CssCode(BitMatrix hx, BitMatrix hz);

  const BitMatrix& hx() const { return hx_; }
  const BitMatrix& hz() const { return hz_; }
  std::size_t n() const { return hx_.cols(); }

  bool operator==(const CssCode& other) const = default;

 private:
  BitMatrix hx_;
  BitMatrix hz_;
};

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;

  /// "[[n,k,d]]", or "[[n,k]]" when the distance is absent.
  std::string to_string() const;
  bool operator==(const CodeParams& other) const = default;
};

/// n and k from the rank formula. Cross-checks k against the homology
/// dimension and throws ErrorKind::consistency if they disagree.
CodeParams parameters(const CssCode& code);

/// dim ker(H_X) - rank(H_Z^T).
std::size_t homology_dimension(const CssCode& code);

constexpr std::uint64_t default_distance_budget = std::uint64_t{1} << 27;

/// Minimum weight of a nontrivial logical operator by exhaustive enumeration
/// of ker(H_X) (resp. ker(H_Z)). Returns nullopt when k = 0, where the
/// minimum ranges over the empty set. Throws ErrorKind::budget if a kernel has
/// more than `budget` vectors.
std::optional<std::size_t> distance(const CssCode& code, std::uint64_t budget = default_distance_budget);

/// Parameters including the distance.
CodeParams parameters_with_distance(const CssCode& code, std::uint64_t budget = default_distance_budget);

/// `copies` disjoint copies of the code.
CssCode direct_sum(const CssCode& code, std::size_t copies);

}  // namespace qlift
