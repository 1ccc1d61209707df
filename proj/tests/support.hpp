// Shared helpers for the test suites.
#ifndef HILBERT_CHOW_TESTS_SUPPORT_HPP
#define HILBERT_CHOW_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "hilbert_chow/fixtures.hpp"
#include "hilbert_chow/matrix.hpp"
#include "hilbert_chow/poly.hpp"
#include "oracles.hpp"

namespace hilbert_chow {
inline void PrintTo(const PolyM& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RatFuncM& f, std::ostream* os) { *os << f.to_string(); }
}  // namespace hilbert_chow

namespace support {

using hilbert_chow::MatrixQ;
using hilbert_chow::Rational;

inline oracle::Q q(const Rational& r) { return r.raw(); }
inline Rational r(const oracle::Q& x) { return Rational(x); }

inline oracle::Mat to_oracle(const MatrixQ& m) {
  oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).raw();
  }
  return out;
}

/// Generators of the built-in fixtures, written out term by term for the oracles.
inline std::vector<oracle::Poly> oracle_generators(const std::string& name) {
  using P = oracle::Poly;
  if (name == "conic") return {P{{{1, 0, 1}, 1}, {{0, 2, 0}, -1}}};
  if (name == "twisted_cubic") {
    return {P{{{1, 0, 1, 0}, 1}, {{0, 2, 0, 0}, -1}}, P{{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}},
            P{{{0, 1, 0, 1}, 1}, {{0, 0, 2, 0}, -1}}};
  }
  if (name == "quadric_surface") return {P{{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}};
  if (name == "point") return {P{{{0, 1, 0}, 1}}, P{{{0, 0, 1}, 1}}};
  if (name == "two_points") return {P{{{1, 1}, 1}}};
  if (name == "fat_point") return {P{{{2, 0, 0}, 1}}, P{{{1, 1, 0}, 1}}, P{{{0, 2, 0}, 1}}};
  if (name == "plane") return {};
  throw std::runtime_error("no oracle generators for " + name);
}

/// Random integer matrix with entries in [-5, 5].
template <class Rng>
MatrixQ random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  MatrixQ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(static_cast<long>(rng() % 11) - 5);
  }
  return m;
}

}  // namespace support

#endif  // HILBERT_CHOW_TESTS_SUPPORT_HPP
