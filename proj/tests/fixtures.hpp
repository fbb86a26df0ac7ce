#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "qlift/bitmatrix.hpp"
#include "qlift/css_code.hpp"
#include "qlift/hgp.hpp"
#include "qlift/intmatrix.hpp"
#include "qlift/zlift.hpp"

namespace qlift::fixtures {

inline IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> entries) {
  IntMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  auto it = entries.begin();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = *it++;
  return m;
}

// Point-line incidence of the Fano plane and its complement.
inline BitMatrix fano_hx() {
  return BitMatrix{{1, 1, 1, 0, 1, 0, 0}, {1, 1, 0, 0, 0, 1, 1}, {1, 0, 1, 1, 0, 1, 0}};
}

inline BitMatrix fano_hz() {
  return BitMatrix{{1, 0, 1, 0, 0, 0, 1}, {0, 1, 0, 0, 1, 0, 1}, {1, 0, 0, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 1, 0},
                   {1, 1, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 0, 0}, {0, 0, 0, 1, 0, 1, 1}};
}

inline CssCode fano_code() { return CssCode(fano_hx(), fano_hz()); }

// Two qubits, two X-checks, one Z-check.
inline CssCode square_code() { return CssCode(BitMatrix{{1, 1}, {1, 1}}, BitMatrix{{1, 1}}); }

inline ZLiftedCode square_odd_zlift() {
  return validate_zlift(square_code(), int_matrix(2, 2, {-3, 1, -3, 1}), int_matrix(1, 2, {1, 3}));
}

inline ZLiftedCode square_unit_zlift() {
  return validate_zlift(square_code(), int_matrix(2, 2, {1, -1, 1, -1}), int_matrix(1, 2, {1, 1}));
}

inline CssCode rep_hpc(std::size_t a, std::size_t b) {
  return hypergraph_product(repetition_check_matrix(a), repetition_check_matrix(b));
}

inline BitMatrix random_bits(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace qlift::fixtures
