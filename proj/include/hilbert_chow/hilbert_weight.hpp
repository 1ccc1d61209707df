#ifndef HILBERT_CHOW_HILBERT_WEIGHT_HPP
#define HILBERT_CHOW_HILBERT_WEIGHT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbert_chow/graded_ideal.hpp"
#include "hilbert_chow/poly.hpp"

namespace hilbert_chow {

/// Diagonal one-parameter subgroup lambda(t) e_j = t^(r_j) e_j.
struct OnePS {
  std::vector<std::int64_t> r;

  std::size_t size() const { return r.size(); }
  bool is_trivial() const;
  bool is_special_linear() const;
  OnePS operator-() const;
  std::string to_string() const;

  friend bool operator==(const OnePS&, const OnePS&) = default;
};

/// Validates arity and, unless allow_gl, the sum-zero condition. Throws input Errors.
OnePS make_one_ps(std::vector<std::int64_t> r, std::size_t num_vars, bool allow_gl = false);

/// r_0 i_0 + ... + r_N i_N
std::int64_t monomial_weight(const OnePS& lambda, const MultiIndex& mono);

/// P(m) monomial indices (into GradedPiece::monomials()), strictly increasing.
struct PluckerSubset {
  int m = 0;
  std::vector<std::size_t> indices;
};

/// Determinant of the images of the selected monomials in the quotient basis.
/// Nonzero iff the selection restricts to a basis of the quotient.
Rational plucker_coordinate(const GradedPiece& piece, const PluckerSubset& subset);

/*
 * Gieseker weight of the degree-m Hilbert point: the minimum total lambda-weight
 * of a monomial set with nonzero Plucker coordinate.
 *
 * Computed by the matroid greedy algorithm: monomials are scanned by ascending
 * weight (ties in monomial order) and kept when their image is independent of
 * those already kept. Greedy is exact for minimum-weight bases of a linear
 * matroid.
 */
std::int64_t gieseker_weight(const GradedPiece& piece, const OnePS& lambda);

/// Minimum over every P(m)-subset with nonzero Plucker coordinate, or nullopt
/// when there are more than max_subsets subsets.
std::optional<std::int64_t> exhaustive_gieseker_weight(const GradedPiece& piece, const OnePS& lambda,
                                                       std::uint64_t max_subsets = 100000);

/// As above, after checking that the quotient dimension equals expected_dim
/// (throws a domain Error "stabilization_violated" otherwise).
std::int64_t gieseker_weight(QuotientRing& ring, const OnePS& lambda, int m, std::size_t expected_dim);

/// w_lambda(m) = a_(n+1) m^(n+1) + ... + a_0 fitted from exact samples.
struct WeightPolynomial {
  OnePS lambda;
  PolyM poly;
  int m_lo = 0;
  int m_hi = 0;
  std::vector<std::int64_t> samples;
  std::vector<Rational> binomial;  ///< e_0..e_(n+1): w(m) = sum e_j binom(m, j)

  /// a_j, zero beyond the degree.
  Rational a(int j) const { return poly.coeff(j); }
};

/*
 * Samples gieseker_weight on m_lo..m_hi (each degree must have quotient
 * dimension P(m)), verifies Delta^(n+2) == 0 across the window and returns the
 * exact interpolant of degree <= n + 1.
 */
WeightPolynomial weight_polynomial(QuotientRing& ring, const OnePS& lambda, int m_lo, int m_hi,
                                   const HilbertData& hilbert);

/// Fits a WeightPolynomial from precomputed samples (same checks as above).
WeightPolynomial weight_polynomial_from_samples(const OnePS& lambda, int m_lo, std::vector<std::int64_t> samples,
                                                int n);

/*
 * Degree-m piece of the flat limit lambda(0) . X.
 *
 * lambda acts on the coordinate functions contragrediently, so a monomial with
 * weight r.I scales by t^(-r.I) and the lowest-order terms in t of an element
 * are its terms of maximal r.I weight. The limit piece is the span of those
 * initial forms; it has the same dimension as I_m.
 */
GradedPiece initial_ideal_piece(const GradedPiece& piece, const OnePS& lambda);

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_HILBERT_WEIGHT_HPP
