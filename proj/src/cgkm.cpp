#include "hilbert_chow/cgkm.hpp"

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

const char* to_string(SignConvention c) {
  return c == SignConvention::difference_operator ? "difference_operator" : "displayed";
}

int combination_sign(SignConvention conv, int k, int i) {
  const int e = conv == SignConvention::difference_operator ? k - i : i + 1;
  return (e % 2 == 0) ? 1 : -1;
}

PolyM combination(SignConvention conv, int k, const PolyM& g) {
  PolyM out;
  for (int i = 0; i <= k; ++i) {
    out += g.shift(Rational(i)) * Rational(BigInt(combination_sign(conv, k, i) * binomial(k, i)));
  }
  return out;
}

PolyM pkl_polynomial(int k, int l, SignConvention conv) {
  if (k < 0 || l < 0) throw input_error("negative_index", "P_{k,l} needs k, l >= 0");
  return combination(conv, k, PolyM::monomial(l));
}

Rational elementary_symmetric(int j, int k_minus_1) {
  if (j < 0 || j > k_minus_1) return Rational(j == 0 ? 1 : 0);
  // e[t] = sigma_t of the values processed so far
  std::vector<Rational> e(static_cast<std::size_t>(j) + 1, Rational(0));
  e[0] = 1;
  for (int v = 1; v <= k_minus_1; ++v) {
    for (int t = std::min(j, v); t >= 1; --t) e[static_cast<std::size_t>(t)] += Rational(v) * e[static_cast<std::size_t>(t) - 1];
  }
  return e[static_cast<std::size_t>(j)];
}

namespace {

PolyM sigma_expansion(int k) {
  PolyM rhs;
  for (int j = 0; j <= k - 1; ++j) {
    const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    rhs += PolyM::monomial(k - j, sign * elementary_symmetric(j, k - 1));
  }
  return rhs * Rational(1, factorial(k));
}

RatFuncM poly_rf(const PolyM& p) { return RatFuncM(p); }

}  // namespace

bool sigma_expansion_check(int k, long lo, long hi) {
  if (k < 1) throw input_error("bad_order", "sigma expansion needs k >= 1");
  const PolyM rhs = sigma_expansion(k);
  if (!(rhs == PolyM::binomial(k))) return false;
  for (long x = lo; x <= hi; ++x) {
    if (binomial_of(Rational(x), k) != rhs.eval(Rational(x))) return false;
  }
  return true;
}

bool QSystem::residual_zero() const {
  for (const auto& r : residual) {
    if (!r.is_zero()) return false;
  }
  return true;
}

QSystem solve_q_system(const HilbertData& h, int l, SignConvention conv) {
  if (h.n < 1) throw input_error("degenerate_dimension", "the q-system needs n >= 1");
  if (l < 0 || l > h.n + 1) throw input_error("bad_order", "l must lie in 0..n+1");
  const int n = h.n;
  const CTable c = c_table(h, static_cast<std::size_t>(l));
  const int k_lo = n + 1 - l;
  QSystem s;
  s.n = n;
  s.l = l;
  s.conv = conv;
  s.q.assign(static_cast<std::size_t>(l) + 1, RatFuncM());
  auto q_slot = [&](int k) -> RatFuncM& { return s.q[static_cast<std::size_t>(n + 1 - k)]; };
  // Row j only involves q_k with k <= j; solve upward from the last row.
  for (int k = k_lo; k <= n + 1; ++k) {
    RatFuncM acc(c.at(static_cast<std::size_t>(l), k));
    for (int k2 = k_lo; k2 < k; ++k2) acc = acc - poly_rf(pkl_polynomial(k2, k, conv)) * q_slot(k2);
    const PolyM diag = pkl_polynomial(k, k, conv);
    if (diag.is_zero()) throw internal_error("singular diagonal: P_{k,k} vanished");
    q_slot(k) = acc / poly_rf(diag);
  }
  for (int j = n + 1; j >= k_lo; --j) {
    RatFuncM row;
    for (int k = k_lo; k <= n + 1; ++k) row = row + poly_rf(pkl_polynomial(k, j, conv)) * q_slot(k);
    s.residual.push_back(row - RatFuncM(c.at(static_cast<std::size_t>(l), j)));
  }
  return s;
}

RatFuncM exponent_identity_residual(const HilbertData& h, const QSystem& qs, SignConvention sum_conv) {
  const PolyM mP = PolyM::monomial(1) * h.polynomial;
  RatFuncM total;
  for (int k = qs.n + 1 - qs.l; k <= qs.n + 1; ++k) total = total + poly_rf(combination(sum_conv, k, mP)) * qs.q_of(k);
  return total - RatFuncM(Rational(qs.l == 0 ? 1 : 0));
}

CgkmLedger make_cgkm_ledger(const HilbertData& h, SignConvention conv) {
  if (h.n < 1) throw input_error("degenerate_dimension", "the CGKM ledger needs n >= 1");
  CgkmLedger g;
  g.n = h.n;
  g.h = h;
  g.conv = conv;
  g.c = c_table(h, static_cast<std::size_t>(h.n) + 1);
  g.pkl.resize(static_cast<std::size_t>(h.n) + 2);
  for (int k = 0; k <= h.n + 1; ++k) {
    for (int l = 0; l <= h.n + 1; ++l) g.pkl[static_cast<std::size_t>(k)].push_back(pkl_polynomial(k, l, conv));
  }
  for (int l = 0; l <= h.n + 1; ++l) {
    g.q.push_back(solve_q_system(h, l, conv));
    if (!g.q.back().residual_zero()) {
      throw identity_error("q_system_residual", "q-system residual nonzero at l=" + std::to_string(l));
    }
    g.exponent_residual.push_back(exponent_identity_residual(h, g.q.back()));
  }
  return g;
}

std::vector<RatFuncM> mk_exponents(const CgkmLedger& g, int l) {
  const QSystem& qs = g.q.at(static_cast<std::size_t>(l));
  std::vector<RatFuncM> out;
  for (int k = 0; k <= g.n + 1; ++k) {
    RatFuncM e;
    for (int kk = g.n + 1 - l; kk <= g.n + 1; ++kk) {
      e = e - poly_rf(combination(g.conv, kk, PolyM::binomial(k))) * qs.q_of(kk);
    }
    out.push_back(e);
  }
  return out;
}

Rational mk_exponent_formula(const CgkmLedger& g, int l, int k) {
  Rational s;
  for (int j = 0; j <= k - 1; ++j) {
    const Rational sign = (j % 2 == 0) ? Rational(-1) : Rational(1);
    s += sign * elementary_symmetric(j, k - 1) * g.c.at(static_cast<std::size_t>(l), k - j);
  }
  return s / Rational(factorial(k));
}

Rational mk_exponent_formula_shifted(const CgkmLedger& g, int l, int k) {
  Rational s;
  for (int j = 0; j <= k - 1; ++j) {
    const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
    s += sign * elementary_symmetric(j + 1, k - 1) * g.c.at(static_cast<std::size_t>(l), k - j);
  }
  return s / Rational(factorial(k));
}

LlWeight ll_weight(const CgkmLedger& g, int l, const WeightPolynomial& w) {
  if (l < 0 || l > g.n + 1) throw input_error("bad_order", "l must lie in 0..n+1");
  if (w.poly.degree() > g.n + 1) throw input_error("inconsistent_pair", "weight polynomial degree exceeds n+1");
  const QSystem& qs = g.q.at(static_cast<std::size_t>(l));
  LlWeight r;
  r.l = l;
  for (int j = 0; j <= g.n + 1; ++j) r.futaki += g.c.at(static_cast<std::size_t>(l), j) * w.a(j);

  for (int k = g.n + 1 - l; k <= g.n + 1; ++k) {
    r.hilbert_route = r.hilbert_route + poly_rf(combination(g.conv, k, w.poly)) * qs.q_of(k);
  }

  const auto E = mk_exponents(g, l);
  RatFuncM mk;
  for (int k = 0; k <= g.n + 1; ++k) {
    const Rational ek = static_cast<std::size_t>(k) < w.binomial.size() ? w.binomial[static_cast<std::size_t>(k)]
                                                                          : Rational(0);
    mk = mk - RatFuncM(ek) * E[static_cast<std::size_t>(k)];
  }
  const auto mk_const = mk.constant();
  bool mk_ok = mk_const.has_value();
  if (mk_ok) r.mk_route = *mk_const;

  // Integer route: exact samples w(m0 + i) combined with q evaluated at m0.
  for (int m0 = w.m_lo; m0 + g.n + 1 <= w.m_hi; ++m0) {
    bool finite = true;
    for (const auto& q : qs.q) {
      if (q.den().eval(Rational(m0)).is_zero()) finite = false;
    }
    if (!finite) continue;
    Rational total;
    for (int k = g.n + 1 - l; k <= g.n + 1; ++k) {
      Rational comb;
      for (int i = 0; i <= k; ++i) {
        const auto s = w.samples[static_cast<std::size_t>(m0 + i - w.m_lo)];
        comb += Rational(BigInt(combination_sign(g.conv, k, i) * binomial(k, i))) * Rational(static_cast<long>(s));
      }
      total += qs.q_of(k).eval(Rational(m0)) * comb;
    }
    r.sample_route = total;
    r.sample_m = m0;
    break;
  }

  const auto hc = r.hilbert_route.constant();
  r.agree = hc.has_value() && *hc == r.futaki && mk_ok && r.mk_route == r.futaki &&
            (!r.sample_route || *r.sample_route == r.futaki);
  return r;
}

RefinedCmWeight refined_cm_weight(const WeightPolynomial& w, const HilbertData& h, MuConvention mu) {
  if (!w.lambda.is_special_linear()) {
    throw domain_error("not_special_linear",
                       "refined CM weight needs sum r_j = 0 for " + w.lambda.to_string());
  }
  const int n = h.n;
  RefinedCmWeight r;
  r.mu_convention = mu;
  r.mu = mu_of(h, mu);
  auto e = [&](int j) {
    return static_cast<std::size_t>(j) < w.binomial.size() ? w.binomial[static_cast<std::size_t>(j)] : Rational(0);
  };
  r.weight = -((Rational(n * (n + 1)) + r.mu) * e(n + 1) - Rational(2 * (n + 1)) * e(n));
  r.F1 = futaki_expansion(h, w, 1).F1();
  if (!r.F1.is_zero()) r.ratio = r.weight / r.F1;
  return r;
}

std::vector<IdentityResult> cgkm_identities(const HilbertData& h, const std::vector<WeightPolynomial>& weights) {
  std::vector<IdentityResult> out;
  auto push = [&](std::string name, int l, const std::string& residual, bool holds) {
    out.push_back({std::move(name), l, residual, holds});
  };
  const CgkmLedger disp = make_cgkm_ledger(h, SignConvention::displayed);
  const CgkmLedger diff = make_cgkm_ledger(h, SignConvention::difference_operator);
  for (int l = 0; l <= h.n + 1; ++l) {
    for (const CgkmLedger* g : {&disp, &diff}) {
      const std::string tag = std::string("[") + to_string(g->conv) + "]";
      const auto& qs = g->q[static_cast<std::size_t>(l)];
      RatFuncM worst;
      for (const auto& r : qs.residual) {
        if (!r.is_zero()) worst = r;
      }
      push("q_system" + tag, l, worst.to_string(), worst.is_zero());
      const auto& er = g->exponent_residual[static_cast<std::size_t>(l)];
      push("exponent_identity" + tag, l, er.to_string(), er.is_zero());
    }
    // q solved with Delta^k, sums taken with the displayed signs: informational.
    const RatFuncM mixed = exponent_identity_residual(h, diff.q[static_cast<std::size_t>(l)], SignConvention::displayed);
    push("exponent_identity_mixed", l, mixed.to_string(), true);

    const auto E = mk_exponents(disp, l);
    for (int k = 1; k <= h.n + 1; ++k) {
      const RatFuncM res = E[static_cast<std::size_t>(k)] - RatFuncM(mk_exponent_formula(disp, l, k));
      push("mk_exponent_k" + std::to_string(k), l, res.to_string(), res.is_zero());
      const RatFuncM alt = E[static_cast<std::size_t>(k)] - RatFuncM(mk_exponent_formula_shifted(disp, l, k));
      push("mk_exponent_shifted_k" + std::to_string(k) + "_mixed", l, alt.to_string(), true);
    }
    for (const auto& w : weights) {
      const LlWeight r = ll_weight(disp, l, w);
      const RatFuncM res = r.hilbert_route - RatFuncM(r.futaki);
      push("ll_weight" + w.lambda.to_string(), l, res.to_string(), r.agree);
    }
  }
  return out;
}

}  // namespace hilbert_chow
