#ifndef HILBERT_CHOW_KOSZUL_CHOW_HPP
#define HILBERT_CHOW_KOSZUL_CHOW_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hilbert_chow/graded_ideal.hpp"
#include "hilbert_chow/matrix.hpp"
#include "hilbert_chow/poly.hpp"

namespace hilbert_chow {

/// n + 1 linear forms on P^N, row i holding the coefficients w_i0..w_iN.
struct LinearFormSet {
  std::vector<VectorQ> rows;

  std::size_t count() const { return rows.size(); }
  std::size_t num_vars() const { return rows.empty() ? 0 : rows[0].size(); }
  /// Rank of the coefficient matrix is below count().
  bool degenerate() const;
  MatrixQ matrix() const;
  /// (1 - t) a + t b, row by row.
  static LinearFormSet interpolate(const LinearFormSet& a, const LinearFormSet& b, const Rational& t);
  std::string to_string() const;
};

/// Seeded source of bounded random rationals; the stream depends only on the seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, long bound = 100) : eng_(seed), bound_(bound) {}

  long integer(long lo, long hi);
  /// p / q with |p| <= bound, 1 <= q <= bound.
  Rational rational();
  LinearFormSet forms(std::size_t count, std::size_t num_vars);
  MatrixQ invertible_matrix(std::size_t size);

 private:
  std::mt19937_64 eng_;
  long bound_;
};

/// Cochain complex E^0 -> E^1 -> ... -> E^k with explicit bases.
struct BasedComplex {
  std::vector<std::size_t> dims;
  std::vector<MatrixQ> d;  ///< d[i] : E^i -> E^(i+1), dims[i+1] x dims[i]
  std::vector<std::vector<std::string>> labels;

  std::size_t length() const { return dims.size(); }
  bool d_squared_zero() const;
  /// rank of each d[i]
  std::vector<std::size_t> ranks() const;
};

bool is_exact(const BasedComplex& c);
/// First level i where rank d[i-1] + rank d[i] != dims[i], if any.
std::optional<std::size_t> first_inexact_level(const BasedComplex& c);

/*
 * Koszul complex of global sections
 *   K^i = H^0(O(m + i)) (x) Lambda^i C^(n+1),  i = 0..n+1,
 * with d(f (x) e_A) = sum_{j not in A} (l_j f) (x) e_j ^ e_A. Bases are
 * subset-major: subsets of {0..n} of size i in lexicographic order, each
 * carrying a block of standard monomials of degree m + i.
 *
 * Multiplication matrices of the coordinate variables are computed once per
 * degree so that many form sets can be assembled cheaply.
 */
class KoszulBuilder {
 public:
  /// When h is given, every touched degree must have quotient dimension P(m + i).
  KoszulBuilder(QuotientRing& ring, int m, std::size_t num_forms, const HilbertData* h = nullptr);

  BasedComplex build(const LinearFormSet& forms) const;
  int degree() const { return m_; }
  std::size_t num_forms() const { return num_forms_; }
  std::size_t num_vars() const { return num_vars_; }

 private:
  int m_;
  std::size_t num_forms_;
  std::size_t num_vars_;
  std::vector<std::size_t> piece_dims_;
  std::vector<std::vector<MatrixQ>> var_maps_;  ///< [i][k]: z_k from degree m+i to m+i+1
};

BasedComplex build_koszul(QuotientRing& ring, int m, const LinearFormSet& forms, const HilbertData* h = nullptr);

enum class PivotStrategy { min_index, max_numerator };
const char* to_string(PivotStrategy s);

/*
 * Torsion of a based exact complex. C_0 is all of E^0; at level i the rows
 * R_i of d[i](:, C_i) are chosen by the strategy so that the square minor is
 * invertible, C_(i+1) is the complement of R_i, and
 *   D_i = det[ d[i](:, C_i) | e_(C_(i+1)) ] = sign(R_i, C_(i+1)) det(minor).
 * The torsion is prod_i D_i^((-1)^i).
 */
struct TorsionCertificate {
  PivotStrategy strategy = PivotStrategy::min_index;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;  ///< exactness witness
  std::vector<std::vector<std::size_t>> columns;  ///< C_i
  std::vector<std::vector<std::size_t>> rows;     ///< R_i
  std::vector<Rational> minors;                   ///< D_i
  Rational value;

  /// Recomputes the alternating product from the recorded minors.
  Rational product_of_minors() const;
};

/// Throws a domain Error "incident" naming the failing level when c is not exact.
TorsionCertificate torsion(const BasedComplex& c, PivotStrategy strategy = PivotStrategy::min_index);

/// Reference configuration pinning the basis-dependent constant of one ideal at one degree.
struct ChowReference {
  LinearFormSet forms;
  int m = 0;
  Rational torsion;
};

struct ChowEval {
  bool incident = false;
  Rational torsion;                    ///< zero when incident
  std::optional<Rational> normalized;  ///< torsion / reference torsion
  std::optional<std::size_t> failing_level;
};

/*
 * Torsion of the Koszul complex at degree m, equal to R_X(forms)^e up to a
 * nonzero constant independent of the forms (e = +-1, see chow_exponent).
 * Degenerate form sets are an input Error; incidence is reported in the
 * result rather than thrown.
 */
ChowEval chow_eval(const KoszulBuilder& builder, const LinearFormSet& forms,
                   const ChowReference* reference = nullptr);
ChowEval chow_eval(QuotientRing& ring, const LinearFormSet& forms, int m, const HilbertData* h = nullptr,
                   const ChowReference* reference = nullptr);

/// Builds a reference from the first non-incident random configuration drawn from sampler.
ChowReference make_chow_reference(const KoszulBuilder& builder, Sampler& sampler);

/*
 * Exponent E with torsion(2 l_row, others) / torsion(forms) = 2^E. By
 * multihomogeneity of the Chow form E = e * d with e = +-1. Throws a domain
 * Error when the ratio is not a power of two.
 */
long scaling_exponent(const KoszulBuilder& builder, const LinearFormSet& forms, std::size_t row = 0);

/// e = scaling_exponent / d for a random non-incident configuration.
int chow_exponent(const KoszulBuilder& builder, const HilbertData& h, Sampler& sampler);

/// Polynomial in n+1 groups of N+1 variables, homogeneous of one degree in each group.
class MultihomogPoly {
 public:
  using Exps = std::vector<std::vector<int>>;  ///< [group][var]

  MultihomogPoly(std::size_t groups, std::size_t vars_per_group, int degree);

  std::size_t groups() const { return groups_; }
  std::size_t vars_per_group() const { return vars_; }
  int degree() const { return degree_; }
  /// Terms in decreasing lexicographic order of the flattened exponents.
  const std::map<Exps, Rational, std::greater<>>& terms() const { return terms_; }

  /// Throws an input Error if the exponents are not of the declared multidegree.
  void add_term(const Exps& e, const Rational& c);
  Rational eval(const LinearFormSet& point) const;
  bool is_zero() const { return terms_.empty(); }
  /// Divides by the content so coefficients become coprime integers with a
  /// positive leading coefficient; returns the factor applied.
  Rational make_primitive();
  std::string to_string() const;

  friend bool operator==(const MultihomogPoly& a, const MultihomogPoly& b) {
    return a.groups_ == b.groups_ && a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t groups_;
  std::size_t vars_;
  int degree_;
  std::map<Exps, Rational, std::greater<>> terms_;
};

struct ChowInterpolation {
  MultihomogPoly poly;      ///< primitive integer form
  MultihomogPoly raw;       ///< interpolant of the normalized values before scaling
  int exponent = 0;         ///< e with torsion proportional to R^e
  std::size_t evaluations = 0;
  std::size_t incident_grid_points = 0;
  std::size_t held_out = 0;
  ChowReference reference;
};

/*
 * Interpolates R_X of degree d in each of the n+1 rows. Each row ranges over
 * a randomly transformed simplex lattice of degree d (unisolvent for degree-d
 * forms), the tensor-product grid is evaluated through chow_eval, and the
 * coefficient tensor is recovered by inverting the per-row evaluation matrix
 * along every mode. Incident or degenerate grid points contribute the value 0.
 * The result is verified on held_out random configurations (identity Error on
 * mismatch).
 */
ChowInterpolation chow_interpolate(QuotientRing& ring, const HilbertData& h, int m, std::uint64_t seed,
                                   std::size_t held_out = 20);

struct VanishingProbe {
  Rational t0;
  int order = 0;         ///< order of zero (> 0) or pole (< 0) of the torsion at t0
  bool torsion_is_polynomial = false;  ///< otherwise its reciprocal is
  PolyM profile;         ///< the polynomial (torsion or its reciprocal) in t
  std::vector<std::string> warnings;
};

/*
 * Order of the torsion along forms(t) = (1 - t) a + t b at t0. The torsion
 * (or its reciprocal) is recovered exactly as a polynomial in t of degree at
 * most (n+1)d from non-incident samples and checked on extra points. Without
 * an explicit t0 the incident endpoint is used. |order| >= 2 adds a
 * "tangent_pencil" warning.
 */
VanishingProbe vanishing_order_probe(const KoszulBuilder& builder, const HilbertData& h, const LinearFormSet& a,
                                     const LinearFormSet& b, std::optional<Rational> t0 = std::nullopt);

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_KOSZUL_CHOW_HPP
