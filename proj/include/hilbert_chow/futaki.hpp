#ifndef HILBERT_CHOW_FUTAKI_HPP
#define HILBERT_CHOW_FUTAKI_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hilbert_chow/graded_ideal.hpp"
#include "hilbert_chow/hilbert_weight.hpp"

namespace hilbert_chow {

/*
 * c[l][j] = coefficient of m^(-l) in m^j / (m P(m)), for 0 <= l <= L and
 * 0 <= j <= n + 1. Only entries with j >= n + 1 - l can be nonzero.
 * With these, the m^(-l) coefficient of w(m) / (m P(m)) is sum_j c[l][j] a_j.
 */
struct CTable {
  int n = 0;
  std::size_t order = 0;
  std::vector<std::vector<Rational>> c;

  const Rational& at(std::size_t l, int j) const { return c.at(l).at(static_cast<std::size_t>(j)); }
};

CTable c_table(const HilbertData& h, std::size_t order);

struct FutakiExpansion {
  std::size_t order = 0;
  std::vector<Rational> F;         ///< F_0..F_order from the c-table sums
  std::vector<Rational> F_series;  ///< same, from direct series division
  CTable c;

  const Rational& F0() const { return F.at(0); }
  const Rational& F1() const { return F.at(1); }
};

/// Both routes are computed; a disagreement throws an identity Error.
/// Throws input "inconsistent_pair" when deg w > n + 1.
FutakiExpansion futaki_expansion(const HilbertData& h, const PolyM& w, std::size_t order);
inline FutakiExpansion futaki_expansion(const HilbertData& h, const WeightPolynomial& w, std::size_t order) {
  return futaki_expansion(h, w.poly, order);
}

/// (a_n b_n - a_(n+1) b_(n-1)) / b_n^2
Rational futaki_f1_closed_form(const HilbertData& h, const PolyM& w);

enum class Verdict { destabilized, undetermined };
const char* to_string(Verdict v);

struct LambdaVerdict {
  OnePS lambda;
  bool trivial = false;
  WeightPolynomial weight;
  Rational F0;
  Rational F1;
  bool hilbert_stable = false;      ///< w(m) < 0 on the whole window
  bool hilbert_semistable = false;  ///< w(m) <= 0 on the whole window
  bool futaki_negative = false;     ///< F_1 < 0
  bool futaki_nonpositive = false;  ///< F_1 <= 0
  std::vector<std::string> failed;  ///< names of failed sign tests
};

struct StabilityVerdict {
  std::vector<LambdaVerdict> per_lambda;
  Verdict verdict = Verdict::undetermined;
  std::vector<std::string> destabilizing;  ///< lambda strings that failed a test
};

/*
 * Sign tests per lambda over m_lo..m_hi. A nontrivial lambda fails
 * "hilbert_stable" if some w(m) >= 0, "hilbert_semistable" if some w(m) > 0
 * and "futaki_negative" if F_1 >= 0. The trivial subgroup is recorded but not
 * tested. The aggregate verdict is destabilized iff some lambda failed a test.
 */
StabilityVerdict stability_report(QuotientRing& ring, const HilbertData& h, const std::vector<OnePS>& lambdas,
                                  int m_lo, int m_hi);

/// Aggregation step alone, as a function of the per-lambda records.
StabilityVerdict aggregate_verdict(std::vector<LambdaVerdict> per_lambda);

}  // namespace hilbert_chow

#endif  // HILBERT_CHOW_FUTAKI_HPP
