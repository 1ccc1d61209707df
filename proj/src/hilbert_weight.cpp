#include "hilbert_chow/hilbert_weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

bool OnePS::is_trivial() const {
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

bool OnePS::is_special_linear() const { return std::accumulate(r.begin(), r.end(), std::int64_t{0}) == 0; }

OnePS OnePS::operator-() const {
  OnePS o = *this;
  for (auto& x : o.r) x = -x;
  return o;
}

std::string OnePS::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ")";
  return os.str();
}

OnePS make_one_ps(std::vector<std::int64_t> r, std::size_t num_vars, bool allow_gl) {
  OnePS l{std::move(r)};
  if (l.size() != num_vars) {
    throw input_error("lambda_arity", "one-parameter subgroup " + l.to_string() + " has " + std::to_string(l.size()) +
                                          " weights, expected " + std::to_string(num_vars));
  }
  if (!allow_gl && !l.is_special_linear()) {
    throw input_error("lambda_not_special_linear",
                      "one-parameter subgroup " + l.to_string() +
                          " violates sum r_j = 0 (weights must define a special linear subgroup; pass --allow-gl "
                          "to override)");
  }
  return l;
}

std::int64_t monomial_weight(const OnePS& lambda, const MultiIndex& mono) {
  if (lambda.size() != mono.size()) {
    throw input_error("dimension_mismatch", "weight vector and multi-index lengths differ");
  }
  std::int64_t w = 0;
  for (std::size_t j = 0; j < mono.size(); ++j) w += lambda.r[j] * mono[j];
  return w;
}

Rational plucker_coordinate(const GradedPiece& piece, const PluckerSubset& subset) {
  const std::size_t q = piece.quotient_dim();
  if (subset.indices.size() != q) {
    throw input_error("bad_subset", "Plucker subset has " + std::to_string(subset.indices.size()) +
                                        " monomials, expected " + std::to_string(q));
  }
  MatrixQ m(q, q);
  for (std::size_t k = 0; k < q; ++k) {
    const VectorQ& img = piece.monomial_image(subset.indices[k]);
    for (std::size_t i = 0; i < q; ++i) m(i, k) = img[i];
  }
  return mat_det(m);
}

std::int64_t gieseker_weight(const GradedPiece& piece, const OnePS& lambda) {
  if (lambda.size() != piece.num_vars()) throw input_error("dimension_mismatch", "lambda arity mismatch");
  if (lambda.is_trivial() || piece.quotient_dim() == 0) return 0;
  const auto& monos = piece.monomials();
  std::vector<std::pair<std::int64_t, std::size_t>> order;
  order.reserve(monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) order.emplace_back(monomial_weight(lambda, monos[c]), c);
  std::sort(order.begin(), order.end());
  IndependenceOracle oracle(piece.quotient_dim());
  std::int64_t total = 0;
  for (const auto& [w, c] : order) {
    if (oracle.extend(piece.monomial_image(c))) {
      total += w;
      if (oracle.full()) break;
    }
  }
  return total;
}

std::optional<std::int64_t> exhaustive_gieseker_weight(const GradedPiece& piece, const OnePS& lambda,
                                                       std::uint64_t max_subsets) {
  const std::size_t n = piece.ambient_dim();
  const std::size_t k = piece.quotient_dim();
  if (binomial(static_cast<long>(n), static_cast<long>(k)) > BigInt(static_cast<unsigned long>(max_subsets))) {
    return std::nullopt;
  }
  std::vector<std::int64_t> weight(n);
  for (std::size_t c = 0; c < n; ++c) weight[c] = monomial_weight(lambda, piece.monomials()[c]);
  PluckerSubset s;
  s.m = piece.degree();
  s.indices.resize(k);
  std::iota(s.indices.begin(), s.indices.end(), std::size_t{0});
  std::optional<std::int64_t> best;
  for (;;) {
    std::int64_t w = 0;
    for (auto i : s.indices) w += weight[i];
    if ((!best || w < *best) && !plucker_coordinate(piece, s).is_zero()) best = w;
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && s.indices[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s.indices[i - 1];
    for (std::size_t j = i; j < k; ++j) s.indices[j] = s.indices[j - 1] + 1;
  }
  return best.value_or(0);
}

std::int64_t gieseker_weight(QuotientRing& ring, const OnePS& lambda, int m, std::size_t expected_dim) {
  const GradedPiece& piece = ring.piece(m);
  if (piece.quotient_dim() != expected_dim) {
    throw domain_error("stabilization_violated", "quotient dimension " + std::to_string(piece.quotient_dim()) +
                                                     " at m=" + std::to_string(m) + " differs from P(m)=" +
                                                     std::to_string(expected_dim));
  }
  return gieseker_weight(piece, lambda);
}

WeightPolynomial weight_polynomial_from_samples(const OnePS& lambda, int m_lo, std::vector<std::int64_t> samples,
                                                int n) {
  const std::size_t need = static_cast<std::size_t>(n) + 3;
  if (samples.size() < need) {
    throw input_error("window_too_short", "weight window needs at least n+3 = " + std::to_string(need) + " degrees");
  }
  std::vector<Rational> values;
  for (auto s : samples) values.emplace_back(static_cast<long>(s));
  const auto diffs = finite_difference(values, static_cast<unsigned>(n + 2));
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (!diffs[i].is_zero()) {
      std::ostringstream os;
      os << "weights of " << lambda.to_string() << " exceed degree n+1=" << n + 1 << ": differences of order " << n + 2
         << " are [";
      for (std::size_t k = 0; k < diffs.size(); ++k) os << (k ? "," : "") << diffs[k];
      os << "] starting at m=" << m_lo + static_cast<int>(i);
      throw domain_error("degree_exceeded", os.str());
    }
  }
  WeightPolynomial w;
  w.lambda = lambda;
  w.m_lo = m_lo;
  w.m_hi = m_lo + static_cast<int>(samples.size()) - 1;
  w.poly = interpolate_consecutive(std::span<const Rational>(values).first(static_cast<std::size_t>(n) + 2), m_lo);
  w.samples = std::move(samples);
  w.binomial = to_binomial_basis(w.poly);
  w.binomial.resize(static_cast<std::size_t>(n) + 2);
  return w;
}

WeightPolynomial weight_polynomial(QuotientRing& ring, const OnePS& lambda, int m_lo, int m_hi,
                                   const HilbertData& hilbert) {
  if (m_hi < m_lo) throw input_error("bad_window", "invalid weight window");
  std::vector<std::int64_t> samples;
  for (int m = m_lo; m <= m_hi; ++m) {
    const Rational pm = hilbert.value(m);
    samples.push_back(gieseker_weight(ring, lambda, m, static_cast<std::size_t>(pm.to_int64())));
  }
  return weight_polynomial_from_samples(lambda, m_lo, std::move(samples), hilbert.n);
}

GradedPiece initial_ideal_piece(const GradedPiece& piece, const OnePS& lambda) {
  const auto& monos = piece.monomials();
  const std::size_t cols = monos.size();
  const MatrixQ& basis = piece.ideal().rows;
  if (lambda.is_trivial() || basis.rows() == 0) return GradedPiece::from_span(piece.num_vars(), piece.degree(), basis);

  // Columns by descending weight (ties in monomial order), then echelonize:
  // each row's pivot sits in the highest weight class it touches.
  std::vector<std::int64_t> weight(cols);
  for (std::size_t c = 0; c < cols; ++c) weight[c] = monomial_weight(lambda, monos[c]);
  std::vector<std::size_t> perm(cols);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
  const std::vector<std::size_t> all_rows = [&] {
    std::vector<std::size_t> v(basis.rows());
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
  }();
  const RowEchelon e = row_echelon(basis.select(all_rows, perm));

  MatrixQ initial(e.rows.rows(), cols);
  for (std::size_t r = 0; r < e.rows.rows(); ++r) {
    const std::int64_t w = weight[perm[e.pivots[r]]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (weight[perm[j]] == w) initial(r, perm[j]) = e.rows(r, j);
    }
  }
  return GradedPiece::from_span(piece.num_vars(), piece.degree(), initial);
}

}  // namespace hilbert_chow
