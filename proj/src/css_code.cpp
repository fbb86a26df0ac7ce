#include "qlift/css_code.hpp"

#include <bit>
#include <limits>

#include "qlift/errors.hpp"

namespace qlift {

CssCode::CssCode(BitMatrix hx, BitMatrix hz) : hx_(std::move(hx)), hz_(std::move(hz)) {
  if (hx_.cols() != hz_.cols()) {
    throw Error(ErrorKind::dimension, "H_X has " + std::to_string(hx_.cols()) + " columns but H_Z has " +
                                          std::to_string(hz_.cols()));
  }
  for (std::size_t x = 0; x < hx_.rows(); ++x) {
    for (std::size_t z = 0; z < hz_.rows(); ++z) {
      if (dot(hx_.row(x), hz_.row(z))) {
        throw Error(ErrorKind::orthogonality, "X-check " + std::to_string(x) + " anticommutes with Z-check " +
                                                  std::to_string(z));
      }
    }
  }
}

std::string CodeParams::to_string() const {
  std::string s = "[[" + std::to_string(n) + "," + std::to_string(k);
  if (d) s += "," + std::to_string(*d);
  return s + "]]";
}

std::size_t homology_dimension(const CssCode& code) {
  const std::size_t cycles = kernel_basis(code.hx()).size();
  const std::size_t boundaries = rank(code.hz().transpose());
  return cycles - boundaries;
}

CodeParams parameters(const CssCode& code) {
  const std::size_t n = code.n();
  const std::size_t rx = rank(code.hx());
  const std::size_t rz = rank(code.hz());
  if (rx + rz > n) throw Error(ErrorKind::consistency, "rank H_X + rank H_Z exceeds n");
  CodeParams p{n, n - rx - rz, std::nullopt};
  if (p.k != homology_dimension(code)) {
    throw Error(ErrorKind::consistency, "rank formula and homology dimension disagree");
  }
  return p;
}

namespace {

/// Minimum weight over span(kernel of `checks`) minus rowspace(`stabilizers`).
std::optional<std::size_t> side_distance(const BitMatrix& checks, const BitMatrix& stabilizers,
                                         std::uint64_t budget) {
  const auto basis = kernel_basis(checks);
  const std::size_t dim = basis.size();
  if (dim >= 63 || (std::uint64_t{1} << dim) > budget) {
    throw Error(ErrorKind::budget, "distance enumeration needs 2^" + std::to_string(dim) +
                                       " vectors, budget is " + std::to_string(budget));
  }
  const RowReducer trivial(stabilizers);
  std::optional<std::size_t> best;
  BitVector v(checks.cols());
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t i = 1; i < total; ++i) {
    v ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    const std::size_t w = v.weight();
    if (best && w >= *best) continue;
    if (!trivial.contains(v)) best = w;
  }
  return best;
}

}  // namespace

std::optional<std::size_t> distance(const CssCode& code, std::uint64_t budget) {
  if (parameters(code).k == 0) return std::nullopt;
  const auto dz = side_distance(code.hx(), code.hz(), budget);
  const auto dx = side_distance(code.hz(), code.hx(), budget);
  if (!dz || !dx) throw Error(ErrorKind::consistency, "k > 0 but no nontrivial logical found");
  return std::min(*dz, *dx);
}

CodeParams parameters_with_distance(const CssCode& code, std::uint64_t budget) {
  CodeParams p = parameters(code);
  p.d = distance(code, budget);
  return p;
}

CssCode direct_sum(const CssCode& code, std::size_t copies) {
  return CssCode(direct_sum(code.hx(), copies), direct_sum(code.hz(), copies));
}

}  // namespace qlift
