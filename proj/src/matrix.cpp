#include "hilbert_chow/matrix.hpp"

#include <algorithm>
#include <utility>

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<VectorQ>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw input_error("dimension_mismatch", "row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

VectorQ MatrixQ::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

VectorQ MatrixQ::col_vector(std::size_t c) const {
  VectorQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MatrixQ MatrixQ::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  MatrixQ s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows()) throw input_error("dimension_mismatch", "matrix product shape mismatch");
  MatrixQ p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
      }
    }
  return p;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("dimension_mismatch", "matrix sum shape mismatch");
  MatrixQ s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("dimension_mismatch", "matrix difference shape mismatch");
  MatrixQ s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

MatrixQ operator*(const Rational& s, const MatrixQ& a) {
  MatrixQ r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

VectorQ operator*(const MatrixQ& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw input_error("dimension_mismatch", "matrix-vector shape mismatch");
  VectorQ out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Scales every row to integers; returns the product of the scale factors.
BigInt integerize(const MatrixQ& m, IntMatrix& out) {
  out.assign(m.rows(), std::vector<BigInt>(m.cols()));
  BigInt scale_product = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInt d = m(r, c).den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x.is_zero()) continue;
      out[r][c] = x.num() * (l / x.den());
    }
    scale_product *= l;
  }
  return scale_product;
}

// Fraction-free forward elimination. Returns the rank; `sign` tracks row swaps
// and `last_pivot` the final Bareiss pivot, which is the determinant (up to
// sign) when the matrix is square and nonsingular.
std::size_t bareiss(IntMatrix& a, std::size_t cols, int& sign, BigInt& last_pivot) {
  const std::size_t rows = a.size();
  sign = 1;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

std::size_t mat_rank(const MatrixQ& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix a;
  integerize(m, a);
  int sign = 1;
  BigInt last;
  return bareiss(a, m.cols(), sign, last);
}

Rational mat_det(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw input_error("not_square", "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a;
  const BigInt scale = integerize(m, a);
  int sign = 1;
  BigInt last;
  const std::size_t rank = bareiss(a, m.cols(), sign, last);
  if (rank < m.rows()) return 0;
  return Rational(sign * last, scale);
}

RowEchelon row_echelon(const MatrixQ& m) {
  std::vector<VectorQ> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = rows[r][c].inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {MatrixQ::from_rows(rows, m.cols()), std::move(pivots)};
}

std::vector<VectorQ> kernel_basis(const MatrixQ& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<VectorQ> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VectorQ v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

VectorQ solve(const MatrixQ& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw input_error("dimension_mismatch", "solve shape mismatch");
  MatrixQ aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const RowEchelon e = row_echelon(aug);
  if (e.pivots.size() != n || e.pivots.back() != n - 1) {
    throw domain_error("singular", "singular linear system");
  }
  VectorQ x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.rows(i, n);
  return x;
}

MatrixQ inverse(const MatrixQ& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw input_error("not_square", "inverse of a non-square matrix");
  MatrixQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw domain_error("singular", "singular matrix");
  MatrixQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows(i, n + j);
  return inv;
}

bool IndependenceOracle::extend(std::span<const Rational> v) {
  if (v.size() != dim_) {
    throw input_error("dimension_mismatch", "vector of length " + std::to_string(v.size()) +
                                                " offered to an oracle of dimension " + std::to_string(dim_));
  }
  VectorQ w(v.begin(), v.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f.is_zero()) continue;
    const VectorQ& b = basis_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!b[j].is_zero()) w[j] -= f * b[j];
  }
  std::size_t p = 0;
  while (p < dim_ && w[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Rational inv = w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  basis_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace hilbert_chow
