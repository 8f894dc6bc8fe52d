#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bcx {

/// Dense matrix over GF(2); each row is a packed bitset over the columns.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  std::span<const std::uint64_t> row(std::size_t r) const;
  /// row[dst] ^= row[src]
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;
  bool is_zero() const;
  /// Number of ones in column c.
  std::size_t column_weight(std::size_t c) const;

  Gf2Matrix transposed() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Product a * b. Throws InvalidInput on a shape mismatch.
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);

/// Reduced row-echelon form; `pivots` receives the pivot column of each
/// nonzero row, in order. Zero rows are dropped.
Gf2Matrix rref(Gf2Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(Gf2Matrix m);

/// Basis of { v : m v = 0 }, one vector per row, in reduced row-echelon form.
Gf2Matrix null_space(const Gf2Matrix& m);

}  // namespace bcx
