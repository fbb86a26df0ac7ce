#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qlift {

/// Dense vector over F2, packed 64 entries per word. Padding bits past size()
/// are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size);
  BitVector(std::initializer_list<int> bits);

  static BitVector ones(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / word_bits] ^= Word{1} << (i % word_bits); }

  std::size_t weight() const;
  bool is_zero() const;
  /// Index of the lowest set bit, or size() if the vector is zero.
  std::size_t first_set() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;
  auto operator<=>(const BitVector& other) const = default;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Inner product over F2.
bool dot(const BitVector& a, const BitVector& b);

/// Dense row-major matrix over F2 with bit-packed rows.
class BitMatrix {
 public:
  using Word = BitVector::Word;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  BitVector col(std::size_t c) const;

  void add_row(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

  std::size_t row_weight(std::size_t r) const { return rows_[r].weight(); }
  std::size_t nnz() const;
  bool is_zero() const;

  BitMatrix transpose() const;

  bool operator==(const BitMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
BitVector operator*(const BitMatrix& m, const BitVector& v);
/// a * b^T, computed row-against-row without materialising the transpose.
BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b);

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);
BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
/// Block-diagonal sum of `copies` copies of m.
BitMatrix direct_sum(const BitMatrix& m, std::size_t copies);

// Elimination: leftmost nonzero column first, topmost unprocessed row as pivot.

std::size_t rank(const BitMatrix& m);
/// Basis of the right kernel {v : m v = 0}, one vector per free column in
/// ascending column order (reduced row-echelon back-substitution).
std::vector<BitVector> kernel_basis(const BitMatrix& m);
bool in_row_space(const BitMatrix& m, const BitVector& v);

/// Reduced row-echelon form of a fixed matrix, kept for repeated row-space
/// membership queries.
class RowReducer {
 public:
  explicit RowReducer(const BitMatrix& m);

  std::size_t rank() const { return pivots_.size(); }
  std::span<const std::size_t> pivot_columns() const { return pivots_; }
  const BitMatrix& echelon() const { return echelon_; }

  /// Clears every pivot position of v using the echelon rows.
  void reduce(BitVector& v) const;
  bool contains(BitVector v) const;

 private:
  BitMatrix echelon_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qlift
