#include "qlift/intmatrix.hpp"

#include <sstream>

namespace qlift {

IntMatrix mod_reduce(const IntMatrix& m, int exponent) {
  if (exponent < 1 || exponent > 62) {
    throw Error(ErrorKind::dimension, "modulus exponent must lie in [1, 62]");
  }
  const std::int64_t modulus = std::int64_t{1} << exponent;
  return m.unaryExpr([modulus](std::int64_t v) {
    const std::int64_t r = v % modulus;
    return r < 0 ? r + modulus : r;
  });
}

BitMatrix to_bits(const IntMatrix& m) {
  BitMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) & 1) out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
    }
  }
  return out;
}

IntMatrix from_bits(const BitMatrix& m) {
  IntMatrix out = IntMatrix::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.get(i, j)) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1;
    }
  }
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = IntMatrix::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = detail::checked_mul(a(i, j), b(k, l));
        }
      }
    }
  }
  return out;
}

bool is_zero(const IntMatrix& m) { return m.size() == 0 || (m.array() == 0).all(); }

bool is_odd_on_support(const IntMatrix& m, const BitMatrix& support) {
  if (static_cast<std::size_t>(m.rows()) != support.rows() ||
      static_cast<std::size_t>(m.cols()) != support.cols()) {
    return false;
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const bool on = support.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      const std::int64_t v = m(i, j);
      if (on ? (v & 1) == 0 : v != 0) return false;
    }
  }
  return true;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace qlift
