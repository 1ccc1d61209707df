#ifndef HILBERT_CHOW_CGKM_HPP
#define HILBERT_CHOW_CGKM_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbert_chow/futaki.hpp"
#include "hilbert_chow/graded_ideal.hpp"
#include "hilbert_chow/hilbert_weight.hpp"
#include "hilbert_chow/poly.hpp"

namespace hilbert_chow {

/*
 * Two sign conventions for the k-th alternating combination of shifts
 *   D_k g(m) = sum_{i=0..k} s(k, i) binom(k, i) g(m + i):
 *   difference_operator  s(k, i) = (-1)^(k-i), so D_k = Delta^k;
 *   displayed            s(k, i) = (-1)^(i+1), so D_k = (-1)^(k+1) Delta^k.
 * P_{k,l} := D_k m^l. Every identity below holds exactly when a single
 * convention is used throughout; mixing them leaves a nonzero residual.
 */
enum class SignConvention { difference_operator, displayed };
const char* to_string(SignConvention c);

/// s(k, i)
int combination_sign(SignConvention conv, int k, int i);
/// D_k g
PolyM combination(SignConvention conv, int k, const PolyM& g);
/// D_k m^l; zero for l < k, the constant s * k! for l == k.
PolyM pkl_polynomial(int k, int l, SignConvention conv = SignConvention::difference_operator);

/// sigma_j(1, 2, ..., k-1)
Rational elementary_symmetric(int j, int k_minus_1);

/*
 * binom(x, k) = (1/k!) sum_{j=0..k-1} (-1)^j sigma_j(1..k-1) x^(k-j), checked as
 * a polynomial identity and pointwise at x = lo..hi.
 */
bool sigma_expansion_check(int k, long lo, long hi);

/// Solution (q_(n+1), ..., q_(n+1-l)) of the triangular system P_{k,j} q_k = c_{l,j}.
struct QSystem {
  int n = 0;
  int l = 0;
  SignConvention conv = SignConvention::difference_operator;
  std::vector<RatFuncM> q;         ///< q[t] = q_(n+1-t), t = 0..l
  std::vector<RatFuncM> residual;  ///< per row j = n+1..n+1-l, must be zero

  const RatFuncM& q_of(int k) const { return q.at(static_cast<std::size_t>(n + 1 - k)); }
  bool residual_zero() const;
};

/// Back substitution over Q(m). Requires n >= 1 and 0 <= l <= n + 1.
QSystem solve_q_system(const HilbertData& h, int l, SignConvention conv);

/*
 * sum_p sum_i s(n+1-p, i) binom(n+1-p, i) (m+i) P(m+i) q_(n+1-p)(m), minus the
 * target (1 for l = 0, else 0). sum_conv selects the signs of the combination;
 * it equals qs.conv unless a mixed-convention check is wanted.
 */
RatFuncM exponent_identity_residual(const HilbertData& h, const QSystem& qs, SignConvention sum_conv);
inline RatFuncM exponent_identity_residual(const HilbertData& h, const QSystem& qs) {
  return exponent_identity_residual(h, qs, qs.conv);
}

/// Everything derived from the Hilbert polynomial alone.
struct CgkmLedger {
  int n = 0;
  HilbertData h;
  SignConvention conv = SignConvention::difference_operator;
  CTable c;
  std::vector<std::vector<PolyM>> pkl;  ///< pkl[k][l], 0 <= k, l <= n + 1
  std::vector<QSystem> q;               ///< one system per l = 0..n+1
  std::vector<RatFuncM> exponent_residual;
};

CgkmLedger make_cgkm_ledger(const HilbertData& h, SignConvention conv = SignConvention::displayed);

/*
 * Exponent E_k(m) of M_k in the combination of Hilbert lines defining L_l:
 *   E_k = -sum_p sum_i s(n+1-p, i) binom(n+1-p, i) q_(n+1-p)(m) binom(m+i, k).
 * With the displayed convention E_k is constant for k >= 1.
 */
std::vector<RatFuncM> mk_exponents(const CgkmLedger& g, int l);

/// (1/k!) sum_{j<k} (-1)^(j+1) sigma_j(1..k-1) c_{l,k-j}
Rational mk_exponent_formula(const CgkmLedger& g, int l, int k);
/// (1/k!) sum_{j<k} (-1)^j sigma_(j+1)(1..k-1) c_{l,k-j}, the alternative sign placement
Rational mk_exponent_formula_shifted(const CgkmLedger& g, int l, int k);

/// Weight of L_l^dual computed several ways.
struct LlWeight {
  int l = 0;
  Rational futaki;                         ///< sum_j c_{l,j} a_j
  RatFuncM hilbert_route;                  ///< sum s binom q w(m+i) over Q(m)
  Rational mk_route;                       ///< -sum_k e_k E_k
  std::optional<Rational> sample_route;    ///< same combination at an integer m from exact samples
  std::optional<int> sample_m;
  bool agree = false;
};

LlWeight ll_weight(const CgkmLedger& g, int l, const WeightPolynomial& w);

struct RefinedCmWeight {
  MuConvention mu_convention = MuConvention::literal;
  Rational mu;
  Rational weight;  ///< weight of L_1^dual: -[(n(n+1)+mu) e_(n+1) - 2(n+1) e_n]
  Rational F1;
  std::optional<Rational> ratio;  ///< weight / F1 when F1 != 0
};

/// Requires a special-linear lambda (domain Error "not_special_linear").
RefinedCmWeight refined_cm_weight(const WeightPolynomial& w, const HilbertData& h, MuConvention mu);

/// One named identity with its exact residual; "0" means it holds.
struct IdentityResult {
  std::string name;
  int l = -1;
  std::string residual;
  bool holds = false;
};

/*
 * Runs the identity suite for one Hilbert polynomial, and for each supplied
 * weight polynomial the L_l weight comparisons. Mixed-convention residuals
 * are reported under names ending in "_mixed" and are expected to be nonzero.
 */
std::vector<IdentityResult> cgkm_identities(const HilbertData& h, const std::vector<WeightPolynomial>& weights);

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_CGKM_HPP
