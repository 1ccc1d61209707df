// Independent reference computations for the test suites. Everything here
// works on raw mpq_class values and deliberately avoids the library's own
// elimination, series and enumeration code.
#ifndef HILBERT_CHOW_TESTS_ORACLES_HPP
#define HILBERT_CHOW_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
using Exps = std::vector<int>;
/// Sparse polynomial: exponent vector -> coefficient.
using Poly = std::map<Exps, Q>;

// ------------------------------------------------------------ linear algebra

/// Determinant by cofactor expansion along the first row (small matrices only).
inline Q det_cofactor(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Q total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Q term = a[0][c] * det_cofactor(minor);
    total += (c % 2 == 0) ? term : Q(-term);
  }
  return total;
}

/// Determinant by plain Gaussian elimination over Q, pivoting from the last row up.
inline Q det(Mat a) {
  const std::size_t n = a.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t r = n; r-- > c;) {
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    }
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

/// Rank by Gaussian elimination, scanning columns right to left.
inline std::size_t rank(Mat a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = cols; c-- > 0 && r < a.size();) {
    std::size_t p = a.size();
    for (std::size_t i = r; i < a.size(); ++i) {
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

// ------------------------------------------------------- univariate helpers

/// binom(x, k) for rational x.
inline Q binom(const Q& x, long k) {
  if (k < 0) return 0;
  Q v = 1;
  for (long i = 0; i < k; ++i) v = v * (x - i) / (i + 1);
  return v;
}

inline Q factorial(long k) {
  Q v = 1;
  for (long i = 2; i <= k; ++i) v *= i;
  return v;
}

/// Evaluates sum_i c[i] x^i.
inline Q eval(const std::vector<Q>& c, const Q& x) {
  Q v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

/// k-th forward difference of a sample window.
inline std::vector<Q> delta(std::vector<Q> s, unsigned k) {
  for (unsigned t = 0; t < k; ++t) {
    std::vector<Q> next;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) next.push_back(s[i + 1] - s[i]);
    s = std::move(next);
  }
  return s;
}

/// Solves a square nonsingular system by Gauss-Jordan elimination.
inline std::vector<Q> solve(Mat a, std::vector<Q> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Coefficients e_0..e_deg with f(m) = sum e_j binom(m, j), from samples at m0, m0+1, ...
inline std::vector<Q> binomial_basis(const std::vector<Q>& samples, long m0, int deg) {
  Mat a;
  std::vector<Q> b;
  for (int i = 0; i <= deg; ++i) {
    std::vector<Q> row;
    for (int j = 0; j <= deg; ++j) row.push_back(binom(Q(m0 + i), j));
    a.push_back(std::move(row));
    b.push_back(samples.at(static_cast<std::size_t>(i)));
  }
  return solve(a, b);
}

/// Power-basis coefficients of the interpolant through samples at m0, m0+1, ... (Vandermonde solve).
inline std::vector<Q> power_basis(const std::vector<Q>& samples, long m0, int deg) {
  Mat a;
  std::vector<Q> b;
  for (int i = 0; i <= deg; ++i) {
    std::vector<Q> row;
    Q x = 1;
    for (int j = 0; j <= deg; ++j) {
      row.push_back(x);
      x *= (m0 + i);
    }
    a.push_back(std::move(row));
    b.push_back(samples.at(static_cast<std::size_t>(i)));
  }
  return solve(a, b);
}

/*
 * Laurent expansion of num/den in 1/m by long division. num and den are
 * power-basis coefficient lists. Returns the coefficients of m^top,
 * m^(top-1), ..., count of them.
 */
inline std::vector<Q> laurent(const std::vector<Q>& num, const std::vector<Q>& den, long top, std::size_t count) {
  const long dd = static_cast<long>(den.size()) - 1;
  // remainder as a map exponent -> coefficient
  std::map<long, Q> rem;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] != 0) rem[static_cast<long>(i)] = num[i];
  }
  std::vector<Q> out;
  for (long e = top; static_cast<long>(out.size()) < static_cast<long>(count); --e) {
    // the quotient term q m^e cancels the m^(e + dd) term of the remainder
    const auto it = rem.find(e + dd);
    const Q q = (it == rem.end()) ? Q(0) : Q(it->second / den.back());
    out.push_back(q);
    if (q == 0) continue;
    for (long i = 0; i <= dd; ++i) {
      if (den[static_cast<std::size_t>(i)] == 0) continue;
      rem[e + i] -= q * den[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

// ---------------------------------------------------- polynomial ring pieces

/// Monomials of degree m in nv variables, in no particular order.
inline std::vector<Exps> monomials(std::size_t nv, int m) {
  std::vector<Exps> out;
  Exps e(nv, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nv) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, m);
  return out;
}

inline int degree_of(const Poly& p) {
  int d = 0;
  for (int x : p.begin()->first) d += x;
  return d;
}

/// Spanning set of I_m: every generator times every monomial of the right degree.
inline Mat ideal_rows(const std::vector<Poly>& gens, std::size_t nv, int m, const std::vector<Exps>& monos) {
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  Mat rows;
  for (const auto& g : gens) {
    const int dg = degree_of(g);
    if (dg > m) continue;
    for (const auto& x : monomials(nv, m - dg)) {
      std::vector<Q> row(monos.size());
      for (const auto& [e, c] : g) {
        Exps s = e;
        for (std::size_t k = 0; k < nv; ++k) s[k] += x[k];
        row[index.at(s)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// dim S_m - dim I_m
inline std::size_t hilbert_function(const std::vector<Poly>& gens, std::size_t nv, int m) {
  const auto monos = monomials(nv, m);
  return monos.size() - rank(ideal_rows(gens, nv, m, monos));
}

/*
 * Minimum over all quotient bases made of monomials of the total weight
 * sum_j r_j i_j. A set S of codim-many monomials is a basis of S_m / I_m iff
 * the stacked matrix [I_m ; e_S] has full column rank. Returns nullopt when
 * there are more than max_subsets candidates.
 */
inline std::optional<std::int64_t> min_basis_weight(const std::vector<Poly>& gens, std::size_t nv, int m,
                                                    const std::vector<std::int64_t>& r,
                                                    std::uint64_t max_subsets = 100000) {
  const auto monos = monomials(nv, m);
  const Mat ideal = ideal_rows(gens, nv, m, monos);
  const std::size_t total = monos.size();
  const std::size_t idim = rank(ideal);
  const std::size_t k = total - idim;
  // number of subsets
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), total, k);
  if (count > max_subsets) return std::nullopt;
  // a maximal independent subset of the ideal rows
  Mat basis;
  for (const auto& row : ideal) {
    basis.push_back(row);
    if (rank(basis) < basis.size()) basis.pop_back();
  }
  std::vector<std::int64_t> w(total);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < nv; ++j) w[i] += r[j] * monos[i][j];
  }
  std::optional<std::int64_t> best;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Mat stacked = basis;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < total; ++i) {
      if (!pick[i]) continue;
      std::vector<Q> e(total);
      e[i] = 1;
      stacked.push_back(std::move(e));
      sum += w[i];
    }
    if (best && sum >= *best) continue;
    if (det(stacked) != 0) best = sum;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

/// Nonzero integer vectors in [-bound, bound]^nv with zero sum, counted by brute force.
inline std::size_t zero_sum_count(std::size_t nv, int bound) {
  std::size_t count = 0;
  std::vector<int> v(nv, -bound);
  for (;;) {
    int s = 0;
    bool zero = true;
    for (int x : v) {
      s += x;
      zero = zero && x == 0;
    }
    if (s == 0 && !zero) ++count;
    std::size_t i = 0;
    while (i < nv && v[i] == bound) v[i++] = -bound;
    if (i == nv) break;
    ++v[i];
  }
  return count;
}

// --------------------------------------------------------------- Chow forms

/// Conic z0 z2 - z1^2 evaluated at the intersection point w0 x w1 of two lines.
inline Q conic_chow(const std::vector<Q>& w0, const std::vector<Q>& w1) {
  const Q p0 = w0[1] * w1[2] - w0[2] * w1[1];
  const Q p1 = w0[2] * w1[0] - w0[0] * w1[2];
  const Q p2 = w0[0] * w1[1] - w0[1] * w1[0];
  return p0 * p2 - p1 * p1;
}

/// Expansion of conic_chow as a polynomial in w0_0..w0_2, w1_0..w1_2 (flattened exponents).
inline std::map<std::vector<int>, Q> conic_chow_expanded() {
  using Lin = std::map<std::vector<int>, Q>;
  auto var = [](int g, int v) {
    std::vector<int> e(6, 0);
    e[static_cast<std::size_t>(3 * g + v)] = 1;
    return e;
  };
  auto mul = [](const Lin& a, const Lin& b) {
    Lin out;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        std::vector<int> e(6);
        for (std::size_t i = 0; i < 6; ++i) e[i] = ea[i] + eb[i];
        out[e] += ca * cb;
      }
    }
    return out;
  };
  auto sub = [](Lin a, const Lin& b) {
    for (const auto& [e, c] : b) a[e] -= c;
    return a;
  };
  auto prod2 = [&](int a, int b) { return mul(Lin{{var(0, a), 1}}, Lin{{var(1, b), 1}}); };  // w0_a w1_b
  const Lin p0 = sub(prod2(1, 2), prod2(2, 1));
  const Lin p1 = sub(prod2(2, 0), prod2(0, 2));
  const Lin p2 = sub(prod2(0, 1), prod2(1, 0));
  Lin r = sub(mul(p0, p2), mul(p1, p1));
  for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
  return r;
}

/// Divides by the gcd of the (integer) coefficients and makes the lexicographically
/// largest exponent vector carry a positive coefficient.
inline std::map<std::vector<int>, Q> primitive(std::map<std::vector<int>, Q> p) {
  mpz_class l = 1;
  for (const auto& [e, c] : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& [e, c] : p) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  const bool flip = !p.empty() && p.rbegin()->second < 0;
  for (auto& [e, c] : p) c = (flip ? Q(-c) : c) / Q(g);
  return p;
}

}  // namespace oracle

#endif  // HILBERT_CHOW_TESTS_ORACLES_HPP
