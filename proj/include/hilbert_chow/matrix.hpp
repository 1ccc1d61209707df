#ifndef HILBERT_CHOW_MATRIX_HPP
#define HILBERT_CHOW_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hilbert_chow/rational.hpp"

namespace hilbert_chow {

using VectorQ = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static MatrixQ identity(std::size_t n);
  /// Stacks equally sized vectors as rows. An empty list gives a 0 x cols matrix.
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  VectorQ row_vector(std::size_t r) const;
  VectorQ col_vector(std::size_t c) const;

  bool is_zero() const;
  MatrixQ transpose() const;
  /// Submatrix with the given row and column index lists (in the given order).
  MatrixQ select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator*(const Rational& s, const MatrixQ& a);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

VectorQ operator*(const MatrixQ& a, std::span<const Rational> v);

/// Rank over Q by fraction-free (Bareiss) elimination of the row-integerized matrix.
std::size_t mat_rank(const MatrixQ& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Requires a square matrix.
Rational mat_det(const MatrixQ& m);

/// Reduced row echelon form over Q.
struct RowEchelon {
  MatrixQ rows;                      ///< nonzero rows only, each with a leading 1
  std::vector<std::size_t> pivots;   ///< pivot column of each row, strictly increasing
};

/// Gauss-Jordan elimination; pivots are taken leftmost-first.
RowEchelon row_echelon(const MatrixQ& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<VectorQ> kernel_basis(const MatrixQ& m);

/// Solves a x = b for square nonsingular a. Throws a domain Error if singular.
VectorQ solve(const MatrixQ& a, std::span<const Rational> b);

/// Inverse of a square nonsingular matrix.
MatrixQ inverse(const MatrixQ& a);

/*
 * Incremental linear independence test over Q.
 *
 * Keeps the accepted vectors in reduced echelon form. A rejected vector leaves
 * the state untouched, so the number of accepted vectors is always the rank of
 * the state and replaying the accepted stream reproduces it exactly.
 */
class IndependenceOracle {
 public:
  explicit IndependenceOracle(std::size_t dim) : dim_(dim) {}

  /// Accepts v iff it is not in the span of the previously accepted vectors.
  /// Throws an input Error when v.size() != dim().
  bool extend(std::span<const Rational> v);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  bool full() const { return basis_.size() == dim_; }

 private:
  std::size_t dim_;
  std::vector<VectorQ> basis_;         // each normalized to 1 at its pivot
  std::vector<std::size_t> pivots_;
};

inline bool indep_extend(IndependenceOracle& o, std::span<const Rational> v) { return o.extend(v); }

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_MATRIX_HPP
