#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sixtermk {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, row-major.
// 0xn and nx0 matrices are legal; they carry no entries but keep their shape.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols,
            std::initializer_list<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols);
  static IntMatrix diagonal(const std::vector<Int>& d);
  static IntMatrix column(const std::vector<Int>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator*(const Int& scalar) const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::vector<Int> apply(const std::vector<Int>& x) const;

  IntMatrix transposed() const;
  // Columns [first, first+count) as a new matrix.
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  // Rows selected by index list, in order.
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
  // [this | rhs], row counts must match.
  IntMatrix hconcat(const IntMatrix& rhs) const;
  IntMatrix vconcat(const IntMatrix& rhs) const;

  std::vector<Int> col_vector(std::size_t c) const;
  std::vector<Int> row_vector(std::size_t r) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row(std::size_t a, std::size_t b, const Int& k);
  void add_col(std::size_t a, std::size_t b, const Int& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool is_zero() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace sixtermk
