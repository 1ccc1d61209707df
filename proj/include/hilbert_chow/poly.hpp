#ifndef HILBERT_CHOW_POLY_HPP
#define HILBERT_CHOW_POLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilbert_chow/rational.hpp"

namespace hilbert_chow {

/*
 * Dense univariate polynomial in the formal variable m over Q.
 *
 * coeffs()[i] is the coefficient of m^i. Trailing zeros are always trimmed, so
 * the zero polynomial has no coefficients and degree -1.
 */
class PolyM {
 public:
  PolyM() = default;
  explicit PolyM(std::vector<Rational> coeffs);
  PolyM(const Rational& c);  // NOLINT(google-explicit-constructor): constants

  static PolyM monomial(long degree, const Rational& c = 1);
  /// m + shift
  static PolyM linear(const Rational& shift);
  /// binom(m, k) as a polynomial of degree k.
  static PolyM binomial(long k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of m^i; zero beyond the degree.
  Rational coeff(long i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& m) const;
  /// p(m + s)
  PolyM shift(const Rational& s) const;
  PolyM pow(unsigned e) const;
  PolyM monic() const;

  PolyM& operator+=(const PolyM& o);
  PolyM& operator-=(const PolyM& o);
  PolyM& operator*=(const Rational& s);

  friend PolyM operator+(PolyM a, const PolyM& b) { return a += b; }
  friend PolyM operator-(PolyM a, const PolyM& b) { return a -= b; }
  friend PolyM operator-(const PolyM& a) { return a * Rational(-1); }
  friend PolyM operator*(const PolyM& a, const PolyM& b);
  friend PolyM operator*(PolyM a, const Rational& s) { return a *= s; }
  friend PolyM operator*(const Rational& s, PolyM a) { return a *= s; }
  friend bool operator==(const PolyM& a, const PolyM& b) = default;

  /// Human readable, highest degree first, e.g. "-m^2 + m".
  std::string to_string(const std::string& var = "m") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws on a zero divisor.
std::pair<PolyM, PolyM> divmod(const PolyM& a, const PolyM& b);
/// Monic gcd (zero only when both inputs are zero).
PolyM gcd(PolyM a, PolyM b);
/// Multiplicity of the root r in p (p must be nonzero).
int root_multiplicity(const PolyM& p, const Rational& r);

/// Rational function in m, kept reduced with a monic denominator.
class RatFuncM {
 public:
  RatFuncM() : den_(Rational(1)) {}
  RatFuncM(const PolyM& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RatFuncM(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFuncM(PolyM num, PolyM den);

  const PolyM& num() const { return num_; }
  const PolyM& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Constant value if the function is constant.
  std::optional<Rational> constant() const;
  Rational eval(const Rational& m) const;

  friend RatFuncM operator+(const RatFuncM& a, const RatFuncM& b);
  friend RatFuncM operator-(const RatFuncM& a, const RatFuncM& b);
  friend RatFuncM operator*(const RatFuncM& a, const RatFuncM& b);
  friend RatFuncM operator/(const RatFuncM& a, const RatFuncM& b);
  friend RatFuncM operator-(const RatFuncM& a) { return RatFuncM(-a.num_, a.den_); }
  friend bool operator==(const RatFuncM& a, const RatFuncM& b) = default;

  std::string to_string() const;

 private:
  PolyM num_;
  PolyM den_;
};

/*
 * Truncated Laurent series in 1/m:
 *   c_0 m^s + c_1 m^(s-1) + ... + c_order m^(s-order) + O(m^(s-order-1)).
 * Reading a coefficient outside the retained range is an error.
 */
struct InvMSeries {
  long start = 0;                 ///< s, exponent of the leading retained term
  std::vector<Rational> coeffs;   ///< order + 1 coefficients
  std::size_t order = 0;

  /// Coefficient of m^e. Exponents above `start` are zero; below the
  /// truncation an Error is thrown.
  Rational coefficient(long e) const;
  long lowest_exponent() const { return start - static_cast<long>(order); }
};

/// Laurent expansion of numer/denom in descending powers of m, `order` terms
/// past the leading term. A zero numerator gives the zero series starting at 0.
InvMSeries series_ratio(const PolyM& numer, const PolyM& denom, std::size_t order);

/// Coefficients of m^top, m^(top-1), ..., m^(top-count+1) in numer/denom.
std::vector<Rational> laurent_coefficients(const PolyM& numer, const PolyM& denom, long top,
                                           std::size_t count);

/// Delta^k p, where (Delta p)(m) = p(m+1) - p(m).
PolyM finite_difference(const PolyM& p, unsigned k);

/// Delta^k on a window of consecutive samples; the result has size() - k entries.
/// Throws an input Error when the window is shorter than k + 1.
std::vector<Rational> finite_difference(std::span<const Rational> window, unsigned k);

/// Coefficients e_i with p(m) = sum_i e_i binom(m, i).
std::vector<Rational> to_binomial_basis(const PolyM& p);

/*
 * Binomial-basis coefficients from samples chi(m0), chi(m0+1), ... claimed to
 * come from a polynomial of degree <= degree. The whole window must satisfy
 * Delta^(degree+1) == 0; otherwise a domain Error ("inconsistent_window") is
 * thrown.
 */
std::vector<Rational> to_binomial_basis(std::span<const Rational> window, long m0, unsigned degree);

/// Evaluates sum_i e_i binom(m, i).
PolyM from_binomial_basis(std::span<const Rational> e);

/// Newton interpolation through consecutive samples at m0, m0+1, ...
PolyM interpolate_consecutive(std::span<const Rational> window, long m0);

/// Lagrange interpolation through arbitrary distinct nodes.
PolyM interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_POLY_HPP
