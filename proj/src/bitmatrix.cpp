#include "qlift/bitmatrix.hpp"

#include <bit>

#include "qlift/errors.hpp"

namespace qlift {

namespace {

std::size_t word_count(std::size_t bits) {
  return (bits + BitVector::word_bits - 1) / BitVector::word_bits;
}

void require_same_size(const BitVector& a, const BitVector& b, const char* what) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::dimension, std::string(what) + ": length " + std::to_string(a.size()) +
                                          " vs " + std::to_string(b.size()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, b & 1);
}

BitVector BitVector::ones(std::size_t size) {
  BitVector v(size);
  for (std::size_t i = 0; i < size; ++i) v.set(i, true);
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const Word mask = Word{1} << (i % word_bits);
  if (value) {
    words_[i / word_bits] |= mask;
  } else {
    words_[i / word_bits] &= ~mask;
  }
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  for (Word word : words_) {
    if (word != 0) return false;
  }
  return true;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(*this, other, "xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

bool dot(const BitVector& a, const BitVector& b) {
  require_same_size(a, b, "dot");
  BitVector::Word acc = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) acc ^= wa[w] & wb[w];
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::dimension, "ragged matrix literal");
    rows_.emplace_back(r);
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
  BitMatrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::dimension, "row length does not match column count");
    m.rows_.push_back(r);
  }
  return m;
}

BitVector BitMatrix::col(std::size_t c) const {
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
  return v;
}

std::size_t BitMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.weight();
  return total;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto words = rows_[r].words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      Word word = words[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        t.set(w * BitVector::word_bits + bit, r, true);
        word &= word - 1;
      }
    }
  }
  return t;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::dimension, "product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                                          std::to_string(b.rows()));
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(r, k)) out.row(r) ^= b.row(k);
    }
  }
  return out;
}

BitVector operator*(const BitMatrix& m, const BitVector& v) {
  if (m.cols() != v.size()) {
    throw Error(ErrorKind::dimension, "matrix-vector shape mismatch");
  }
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, dot(m.row(r), v));
  return out;
}

BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) {
    throw Error(ErrorKind::dimension, "a*b^T needs equal column counts");
  }
  BitMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      if (dot(a.row(i), b.row(j))) out.set(i, j, true);
    }
  }
  return out;
}

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
  if (left.rows() != right.rows()) throw Error(ErrorKind::dimension, "hstack row mismatch");
  BitMatrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) {
      if (left.get(r, c)) out.set(r, c, true);
    }
    for (std::size_t c = 0; c < right.cols(); ++c) {
      if (right.get(r, c)) out.set(r, left.cols() + c, true);
    }
  }
  return out;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::dimension, "vstack column mismatch");
  BitMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) out.row(r) = top.row(r);
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.row(top.rows() + r) = bottom.row(r);
  return out;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b.get(k, l)) out.set(i * b.rows() + k, j * b.cols() + l, true);
        }
      }
    }
  }
  return out;
}

BitMatrix direct_sum(const BitMatrix& m, std::size_t copies) {
  BitMatrix out(m.rows() * copies, m.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        if (m.get(r, k)) out.set(c * m.rows() + r, c * m.cols() + k, true);
      }
    }
  }
  return out;
}

RowReducer::RowReducer(const BitMatrix& m) : echelon_(m) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < echelon_.cols() && pivot_row < echelon_.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < echelon_.rows() && !echelon_.get(r, c)) ++r;
    if (r == echelon_.rows()) continue;
    echelon_.swap_rows(r, pivot_row);
    for (std::size_t other = 0; other < echelon_.rows(); ++other) {
      if (other != pivot_row && echelon_.get(other, c)) echelon_.add_row(pivot_row, other);
    }
    pivots_.push_back(c);
    ++pivot_row;
  }
}

void RowReducer::reduce(BitVector& v) const {
  if (v.size() != echelon_.cols()) {
    throw Error(ErrorKind::dimension, "vector length " + std::to_string(v.size()) + " does not match " +
                                          std::to_string(echelon_.cols()) + " columns");
  }
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= echelon_.row(i);
  }
}

bool RowReducer::contains(BitVector v) const {
  reduce(v);
  return v.is_zero();
}

std::size_t rank(const BitMatrix& m) { return RowReducer(m).rank(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  const RowReducer rr(m);
  const auto pivots = rr.pivot_columns();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rr.echelon().get(i, free)) v.set(pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const BitMatrix& m, const BitVector& v) { return RowReducer(m).contains(v); }

}  // namespace qlift
