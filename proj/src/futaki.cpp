#include "hilbert_chow/futaki.hpp"

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

namespace {

PolyM m_times(const PolyM& p) { return PolyM::monomial(1) * p; }

}  // namespace

CTable c_table(const HilbertData& h, std::size_t order) {
  if (h.polynomial.leading().is_zero() || h.n < 0) {
    throw domain_error("zero_leading_coefficient", "Hilbert polynomial has zero leading coefficient");
  }
  CTable t;
  t.n = h.n;
  t.order = order;
  t.c.assign(order + 1, std::vector<Rational>(static_cast<std::size_t>(h.n) + 2));
  const PolyM denom = m_times(h.polynomial);
  for (int j = 0; j <= h.n + 1; ++j) {
    const auto coeffs = laurent_coefficients(PolyM::monomial(j), denom, 0, order + 1);
    for (std::size_t l = 0; l <= order; ++l) t.c[l][static_cast<std::size_t>(j)] = coeffs[l];
  }
  return t;
}

FutakiExpansion futaki_expansion(const HilbertData& h, const PolyM& w, std::size_t order) {
  if (w.degree() > h.n + 1) {
    throw input_error("inconsistent_pair", "weight polynomial of degree " + std::to_string(w.degree()) +
                                               " exceeds n+1=" + std::to_string(h.n + 1));
  }
  FutakiExpansion f;
  f.order = order;
  f.c = c_table(h, order);
  f.F.assign(order + 1, Rational(0));
  for (std::size_t l = 0; l <= order; ++l) {
    for (int j = 0; j <= h.n + 1; ++j) f.F[l] += f.c.at(l, j) * w.coeff(j);
  }
  f.F_series = laurent_coefficients(w, m_times(h.polynomial), 0, order + 1);
  for (std::size_t l = 0; l <= order; ++l) {
    if (f.F[l] != f.F_series[l]) {
      throw identity_error("futaki_two_route_mismatch", "F_" + std::to_string(l) + ": c-table gives " +
                                                            f.F[l].to_string() + ", series division gives " +
                                                            f.F_series[l].to_string());
    }
  }
  return f;
}

Rational futaki_f1_closed_form(const HilbertData& h, const PolyM& w) {
  const Rational bn = h.b(h.n);
  const Rational bn1 = h.n >= 1 ? h.b(h.n - 1) : Rational(0);
  return (w.coeff(h.n) * bn - w.coeff(h.n + 1) * bn1) / (bn * bn);
}

const char* to_string(Verdict v) { return v == Verdict::destabilized ? "destabilized" : "undetermined"; }

StabilityVerdict aggregate_verdict(std::vector<LambdaVerdict> per_lambda) {
  StabilityVerdict s;
  s.per_lambda = std::move(per_lambda);
  for (const auto& v : s.per_lambda) {
    if (!v.failed.empty()) s.destabilizing.push_back(v.lambda.to_string());
  }
  s.verdict = s.destabilizing.empty() ? Verdict::undetermined : Verdict::destabilized;
  return s;
}

StabilityVerdict stability_report(QuotientRing& ring, const HilbertData& h, const std::vector<OnePS>& lambdas,
                                  int m_lo, int m_hi) {
  std::vector<LambdaVerdict> out;
  for (const auto& lambda : lambdas) {
    LambdaVerdict v;
    v.lambda = lambda;
    v.trivial = lambda.is_trivial();
    v.weight = weight_polynomial(ring, lambda, m_lo, m_hi, h);
    const FutakiExpansion f = futaki_expansion(h, v.weight, 1);
    v.F0 = f.F0();
    v.F1 = f.F1();
    v.hilbert_stable = true;
    v.hilbert_semistable = true;
    for (auto s : v.weight.samples) {
      if (s >= 0) v.hilbert_stable = false;
      if (s > 0) v.hilbert_semistable = false;
    }
    v.futaki_negative = v.F1.sign() < 0;
    v.futaki_nonpositive = v.F1.sign() <= 0;
    if (!v.trivial) {
      if (!v.hilbert_stable) v.failed.push_back("hilbert_stable");
      if (!v.hilbert_semistable) v.failed.push_back("hilbert_semistable");
      if (!v.futaki_negative) v.failed.push_back("futaki_negative");
    }
    out.push_back(std::move(v));
  }
  return aggregate_verdict(std::move(out));
}

}  // namespace hilbert_chow
