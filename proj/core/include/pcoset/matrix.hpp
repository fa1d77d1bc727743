#pragma once

#include "pcoset/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace pcoset {

using RatVector = std::vector<PadicRational>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols_if_empty = 0);
  /// Convenience for literals in tests: integer entries only.
  static RatMatrix of(std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix diagonal(const RatVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  PadicRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const PadicRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<PadicRational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const PadicRational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  RatVector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  void append_row(std::span<const PadicRational> r);
  void swap_rows(std::size_t a, std::size_t b);
  /// Drops all-zero rows, preserving order.
  RatMatrix without_zero_rows() const;

  RatMatrix transpose() const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& m);
  RatMatrix select_rows(std::span<const std::size_t> idx) const;
  RatMatrix select_cols(std::span<const std::size_t> idx) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const PadicRational& s, const RatMatrix& a);
  friend RatMatrix operator-(const RatMatrix& a);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<PadicRational> data_;
};

RatVector operator*(const RatMatrix& a, const RatVector& x);
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

struct RrefResult {
  RatMatrix reduced;                 // same shape as the input; zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form over Q.
RrefResult rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

/// Rows form a basis of {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m);

/// Some x with a x = b, or nullopt when inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

/// Throws Singular for non-invertible input, DimensionMismatch for non-square.
RatMatrix invert(const RatMatrix& a);
PadicRational determinant(const RatMatrix& a);

}  // namespace pcoset
