#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace qtoric {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Builds a matrix from a list of rows; all rows must share the length
  // `cols` (needed to express 0-row matrices with a definite width).
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns,
                                std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  IntMatrix select_rows(const std::vector<std::size_t>& rows) const;
  // Appends the rows of `other` below this matrix.
  IntMatrix stack(const IntMatrix& other) const;

  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src,
                        const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src,
                        const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  const std::vector<Integer>& data() const { return data_; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

}  // namespace qtoric
