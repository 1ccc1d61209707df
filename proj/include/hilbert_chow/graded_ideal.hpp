#ifndef HILBERT_CHOW_GRADED_IDEAL_HPP
#define HILBERT_CHOW_GRADED_IDEAL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert_chow/matrix.hpp"
#include "hilbert_chow/poly.hpp"
#include "hilbert_chow/rational.hpp"

namespace hilbert_chow {

/// Exponent vector (i_0, ..., i_N) of a monomial z_0^i_0 ... z_N^i_N.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exps);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return degree_; }
  const std::vector<int>& exps() const { return e_; }

  /// z_k * this
  MultiIndex times_var(std::size_t k) const;
  MultiIndex operator+(const MultiIndex& o) const;
  bool divides(const MultiIndex& o) const;

  /// "z0^2*z1"
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Plain lexicographic comparison of exponent vectors.
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<int> e_;
  int degree_ = 0;
};

/*
 * All monomials of the given degree in num_vars variables, in the fixed
 * monomial order used everywhere in this library: decreasing lexicographic
 * order within the degree (graded lex), so z_0^m comes first and z_N^m last.
 * For N + 1 = num_vars there are binom(m + N, N) of them.
 */
std::vector<MultiIndex> enumerate_monomials(std::size_t num_vars, int degree);

struct Term {
  Rational coeff;
  MultiIndex exps;
};

/// Homogeneous polynomial with distinct, nonzero terms sorted in monomial order.
class HomogeneousPoly {
 public:
  /// Merges like terms and drops zeros. Throws an input Error ("inhomogeneous")
  /// naming the offending degrees, or ("zero_generator") if nothing remains.
  HomogeneousPoly(std::size_t num_vars, std::vector<Term> terms);

  /// Parses text such as "z0*z2 - z1^2" or "3/2*x0^2 + x1*x2". Variables are
  /// z<k> or x<k> with 0 <= k < num_vars.
  static HomogeneousPoly parse(std::string_view text, std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::string to_string() const;

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.to_string() == b.to_string();
  }

 private:
  std::size_t num_vars_;
  int degree_ = 0;
  std::vector<Term> terms_;
};

/// Homogeneous ideal of Q[z_0..z_N]; an empty generator list is the zero ideal.
class HomogeneousIdeal {
 public:
  HomogeneousIdeal(std::size_t num_vars, std::vector<HomogeneousPoly> generators);

  std::size_t num_vars() const { return num_vars_; }
  /// N, the dimension of the ambient projective space.
  std::size_t projective_dim() const { return num_vars_ - 1; }
  const std::vector<HomogeneousPoly>& generators() const { return gens_; }

  /// Canonical text independent of generator order; used for cache keys and hashing.
  std::string canonical() const;

 private:
  std::size_t num_vars_;
  std::vector<HomogeneousPoly> gens_;
};

/*
 * Degree-m piece of S = Q[z_0..z_N] split as I_m plus a complement spanned by
 * standard monomials.
 *
 * I_m is held in reduced row echelon form over the monomial list; pivots are
 * leftmost in the monomial order, so the standard monomials are exactly the
 * non-pivot columns. Their images form the quotient basis used as a model of
 * H^0(X, O(m)).
 */
class GradedPiece {
 public:
  /// Piece with I_m = row span of `rows` (vectors over enumerate_monomials(num_vars, m)).
  static GradedPiece from_span(std::size_t num_vars, int degree, const MatrixQ& rows);

  int degree() const { return degree_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<MultiIndex>& monomials() const { return monomials_; }
  const RowEchelon& ideal() const { return ideal_; }
  /// Column indices of the standard monomials, increasing.
  const std::vector<std::size_t>& standard() const { return standard_; }

  std::size_t ambient_dim() const { return monomials_.size(); }
  std::size_t ideal_dim() const { return ideal_.pivots.size(); }
  std::size_t quotient_dim() const { return standard_.size(); }

  /// Column index of a monomial; throws if it has the wrong degree or arity.
  std::size_t index_of(const MultiIndex& mono) const;
  /// Coordinates, in the quotient basis, of the image of the monomial in column `col`.
  const VectorQ& monomial_image(std::size_t col) const;
  /// Coordinates in the quotient basis of the class of f (a vector over the monomials).
  VectorQ normal_form(std::span<const Rational> f) const;

 private:
  GradedPiece() = default;

  int degree_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t> index_;
  RowEchelon ideal_;
  std::vector<std::size_t> standard_;
  std::vector<VectorQ> images_;
};

/// Optional persistent storage for echelon bases of graded pieces.
class PieceStore {
 public:
  virtual ~PieceStore() = default;
  virtual std::optional<std::vector<VectorQ>> load(const std::string& key) = 0;
  virtual void save(const std::string& key, const std::vector<VectorQ>& rows) = 0;
};

/// Version tag of the monomial order; part of every cache key.
inline constexpr std::string_view kMonomialOrderVersion = "grlex-desc-v1";

/*
 * Graded pieces of S/I, computed on demand and memoized.
 *
 * Single-owner mutable cache; the ideal itself is immutable.
 */
class QuotientRing {
 public:
  explicit QuotientRing(HomogeneousIdeal ideal, PieceStore* store = nullptr);

  const HomogeneousIdeal& ideal() const { return ideal_; }
  std::size_t num_vars() const { return ideal_.num_vars(); }

  const GradedPiece& piece(int m);
  /// dim S_m - dim I_m
  std::size_t hilbert_function(int m) { return piece(m).quotient_dim(); }

  /// Matrix of multiplication by the linear form `form` from the quotient basis
  /// at degree m to the quotient basis at degree m + 1 (columns are images).
  MatrixQ mult_map(int m, std::span<const Rational> form);

  std::string cache_key(int m) const;
  std::size_t store_hits() const { return store_hits_; }

 private:
  HomogeneousIdeal ideal_;
  PieceStore* store_;
  std::map<int, std::unique_ptr<GradedPiece>> pieces_;
  std::size_t store_hits_ = 0;
};

/// The span of {x^a g : g a generator, |a| + deg g = m}, echelonized.
GradedPiece ideal_degree_piece(const HomogeneousIdeal& ideal, int m);

/*
 * Hilbert polynomial data fitted from the Hilbert function.
 *
 * P(m) = b_n m^n + ... + b_0. The degree is d = n! b_n. Two conventions for mu
 * are carried: the literal coefficient b_(n-1) and the normalized 2 b_(n-1)/b_n.
 */
struct HilbertData {
  int n = 0;
  BigInt d;
  PolyM polynomial;
  std::vector<Rational> binomial_coeffs;  ///< P(m) = sum e_i binom(m, i); integers
  Rational mu_literal;
  Rational mu_normalized;
  int m_stab = 0;   ///< least sampled m from which h(m) = P(m) on the window
  int window_lo = 0;
  int window_hi = 0;
  std::vector<std::size_t> samples;  ///< h(window_lo..window_hi)

  Rational b(int i) const { return polynomial.coeff(i); }
  Rational value(long m) const { return polynomial.eval(Rational(m)); }
};

enum class MuConvention { literal, normalized };
const char* to_string(MuConvention c);
MuConvention parse_mu_convention(std::string_view s);

inline const Rational& mu_of(const HilbertData& h, MuConvention c) {
  return c == MuConvention::literal ? h.mu_literal : h.mu_normalized;
}

/// Builds HilbertData for a known polynomial (no sampling); used for fixtures.
HilbertData hilbert_data_from_polynomial(const PolyM& p);

/*
 * Fits the Hilbert polynomial on m_lo..m_hi. The degree is the least k for
 * which the tail of the window has vanishing (k+1)-st differences; m_stab is
 * the least window point from which every sample agrees with the fitted
 * polynomial. At least n + 3 agreeing samples are required.
 */
HilbertData fit_hilbert_polynomial(QuotientRing& ring, int m_lo, int m_hi);

/*
 * Number of summands s in the greedy Macaulay decomposition
 *   P(t) = sum_{i=1..s} binom(t + a_i - i + 1, a_i),  a_1 >= ... >= a_s >= 0.
 * This is a regularity bound depending only on P. Throws a domain Error when
 * the greedy decomposition does not terminate cleanly (P is not the Hilbert
 * polynomial of a subscheme).
 */
long gotzmann_number(const PolyM& p);
inline long gotzmann_number(const HilbertData& h) { return gotzmann_number(h.polynomial); }

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_GRADED_IDEAL_HPP
