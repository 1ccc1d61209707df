#include <gtest/gtest.h>

#include <random>

#include "hilbert_chow/error.hpp"
#include "hilbert_chow/matrix.hpp"
#include "hilbert_chow/poly.hpp"
#include "hilbert_chow/rational.hpp"
#include "support.hpp"

using namespace hilbert_chow;
using support::q;

// ---------------------------------------------------------------- Rational

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-0/7").to_string(), "0");
  EXPECT_EQ(Rational::parse("12").to_string(), "12");
  EXPECT_EQ(Rational::parse("-3/9"), Rational(BigInt(-1), BigInt(3)));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1//2", "4/-2"}) {
    try {
      (void)Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::input) << bad;
    }
  }
}

TEST(Rational, FieldOperations) {
  const Rational a(BigInt(3), BigInt(4));
  const Rational b(BigInt(-5), BigInt(6));
  EXPECT_EQ((a + b).to_string(), "-1/12");
  EXPECT_EQ((a * b).to_string(), "-5/8");
  EXPECT_EQ((a / b).to_string(), "-9/10");
  EXPECT_EQ(b.inverse().to_string(), "-6/5");
  EXPECT_EQ(a.pow(-2).to_string(), "16/9");
  EXPECT_THROW((void)(a / Rational(0)), Error);
  EXPECT_THROW((void)Rational(0).inverse(), Error);
  EXPECT_EQ(Rational(7).to_int64(), 7);
  EXPECT_THROW((void)a.to_int64(), Error);
  EXPECT_LT(b, a);
}

TEST(Rational, BinomialsAndFactorials) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(factorial(8), 40320);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Rational x(BigInt(static_cast<long>(rng() % 41) - 20), BigInt(static_cast<long>(rng() % 7) + 1));
    const long k = static_cast<long>(rng() % 7);
    EXPECT_EQ(q(binomial_of(x, k)), oracle::binom(q(x), k));
  }
}

// ------------------------------------------------------------------ MatrixQ

TEST(Matrix, DeterminantMatchesOracles) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    MatrixQ m = support::random_matrix(rng, n, n);
    if (trial % 5 == 0) m(n - 1, 0) = Rational(BigInt(1), BigInt(3));
    const auto o = support::to_oracle(m);
    EXPECT_EQ(q(mat_det(m)), oracle::det(o));
    EXPECT_EQ(q(mat_det(m)), oracle::det_cofactor(o));
  }
}

TEST(Matrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const MatrixQ a = support::random_matrix(rng, n, n);
    const MatrixQ b = support::random_matrix(rng, n, n);
    EXPECT_EQ(mat_det(a * b), mat_det(a) * mat_det(b));
  }
}

TEST(Matrix, RankMatchesOracleOnLowRankProducts) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    const MatrixQ m = support::random_matrix(rng, 6, k) * support::random_matrix(rng, k, 5);
    EXPECT_EQ(mat_rank(m), oracle::rank(support::to_oracle(m)));
    EXPECT_LE(mat_rank(m), k);
  }
}

TEST(Matrix, EchelonKernelSolveInverse) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ m = support::random_matrix(rng, 3, 4) * support::random_matrix(rng, 4, 6);
    const RowEchelon e = row_echelon(m);
    EXPECT_EQ(e.rows.rows(), mat_rank(m));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      EXPECT_EQ(e.rows(i, e.pivots[i]), Rational(1));
      if (i > 0) EXPECT_GT(e.pivots[i], e.pivots[i - 1]);
    }
    const auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + mat_rank(m), m.cols());
    for (const auto& v : ker) {
      for (const auto& x : m * v) EXPECT_TRUE(x.is_zero());
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixQ a = support::random_matrix(rng, 4, 4);
    if (mat_det(a).is_zero()) continue;
    const VectorQ b = {Rational(1), Rational(-2), Rational(BigInt(1), BigInt(2)), Rational(0)};
    EXPECT_EQ(a * solve(a, b), b);
    EXPECT_EQ(a * inverse(a), MatrixQ::identity(4));
  }
  MatrixQ singular(2, 2);
  singular(0, 0) = Rational(1);
  singular(0, 1) = Rational(2);
  singular(1, 0) = Rational(2);
  singular(1, 1) = Rational(4);
  EXPECT_THROW((void)inverse(singular), Error);
}

TEST(Matrix, IndependenceOracleTracksRank) {
  std::mt19937_64 rng(15);
  const MatrixQ m = support::random_matrix(rng, 8, 3) * support::random_matrix(rng, 3, 5);
  IndependenceOracle o(5);
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) accepted += o.extend(m.row(i)) ? 1 : 0;
  EXPECT_EQ(accepted, mat_rank(m));
  EXPECT_EQ(o.rank(), accepted);
  EXPECT_FALSE(o.full());
  const VectorQ wrong(4);
  EXPECT_THROW((void)o.extend(wrong), Error);
}

// -------------------------------------------------------------------- PolyM

TEST(Poly, ArithmeticDivisionGcd) {
  const PolyM a({Rational(-1), Rational(0), Rational(1)});  // m^2 - 1
  const PolyM b({Rational(1), Rational(1)});                // m + 1
  const auto [quo, rem] = divmod(a, b);
  EXPECT_EQ(quo, PolyM({Rational(-1), Rational(1)}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(a * b, b * b), b * b);
  EXPECT_EQ(gcd(a, b * b), b);
  EXPECT_EQ(root_multiplicity(a * b, Rational(-1)), 2);
  EXPECT_EQ(a.to_string(), "m^2 - 1");
  EXPECT_EQ(PolyM::binomial(3).eval(Rational(7)), Rational(35));
  EXPECT_EQ(a.shift(Rational(1)), PolyM({Rational(0), Rational(2), Rational(1)}));
  EXPECT_THROW((void)divmod(a, PolyM()), Error);
}

TEST(Poly, RationalFunctionsStayReduced) {
  const PolyM a({Rational(-1), Rational(0), Rational(1)});
  const PolyM b({Rational(1), Rational(1)});
  const RatFuncM f(a, PolyM({Rational(2), Rational(2)}));  // (m^2-1)/(2m+2) = (m-1)/2
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.eval(Rational(5)), Rational(2));
  const RatFuncM g = RatFuncM(PolyM(Rational(1))) / RatFuncM(b);
  EXPECT_EQ((g * RatFuncM(b)).constant(), std::optional<Rational>(Rational(1)));
  EXPECT_TRUE((g - g).is_zero());
}

TEST(Poly, LaurentSeriesMatchesLongDivisionOracle) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> nc;
    std::vector<Rational> dc;
    const std::size_t nd = rng() % 4;
    const std::size_t dd = 1 + rng() % 3;
    for (std::size_t i = 0; i <= nd; ++i) nc.emplace_back(static_cast<long>(rng() % 9) - 4);
    for (std::size_t i = 0; i <= dd; ++i) dc.emplace_back(static_cast<long>(rng() % 9) - 4);
    if (dc.back().is_zero()) dc.back() = Rational(3);
    const PolyM num(nc);
    const PolyM den(dc);
    const long top = 2;
    const auto got = laurent_coefficients(num, den, top, 7);
    std::vector<oracle::Q> on;
    std::vector<oracle::Q> od;
    for (const auto& x : num.coeffs()) on.push_back(q(x));
    for (const auto& x : den.coeffs()) od.push_back(q(x));
    const auto want = oracle::laurent(on, od, top, 7);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(q(got[i]), want[i]) << "term " << i;
  }
}

TEST(Poly, SeriesRatioOfConicWeight) {
  // (-m^2 + m) / (m (2m + 1))
  const auto s = series_ratio(PolyM({Rational(0), Rational(1), Rational(-1)}),
                              PolyM({Rational(0), Rational(1), Rational(2)}), 2);
  EXPECT_EQ(s.start, 0);
  EXPECT_EQ(s.coefficient(0).to_string(), "-1/2");
  EXPECT_EQ(s.coefficient(-1).to_string(), "3/4");
  EXPECT_EQ(s.coefficient(1), Rational(0));
  EXPECT_THROW((void)s.coefficient(-5), Error);
}

TEST(Poly, FiniteDifferencesMatchDirectDifferencing) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 5; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
    const PolyM p(c);
    std::vector<Rational> window;
    std::vector<oracle::Q> ow;
    for (long m = -3; m < 7; ++m) {
      window.push_back(p.eval(Rational(m)));
      ow.push_back(q(window.back()));
    }
    for (unsigned k = 0; k <= 5; ++k) {
      const auto got = finite_difference(window, k);
      const auto want = oracle::delta(ow, k);
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(q(got[i]), want[i]);
      EXPECT_EQ(finite_difference(p, k).eval(Rational(-3)), got[0]);
    }
    EXPECT_TRUE(finite_difference(p, 5).is_zero());
  }
  const std::vector<Rational> tiny = {Rational(1)};
  EXPECT_THROW((void)finite_difference(tiny, 1), Error);
}

TEST(Poly, BinomialBasisMatchesLinearSolveOracle) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i < 4; ++i) c.emplace_back(BigInt(static_cast<long>(rng() % 21) - 10), BigInt(1 + rng() % 3));
    const PolyM p(c);
    const auto e = to_binomial_basis(p);
    std::vector<oracle::Q> samples;
    std::vector<Rational> window;
    for (long m = 2; m < 8; ++m) {
      samples.push_back(q(p.eval(Rational(m))));
      window.push_back(p.eval(Rational(m)));
    }
    const auto want = oracle::binomial_basis(samples, 2, 3);
    ASSERT_LE(e.size(), 4u);
    for (std::size_t j = 0; j <= 3; ++j) EXPECT_EQ(j < e.size() ? q(e[j]) : oracle::Q(0), want[j]);
    EXPECT_EQ(from_binomial_basis(e), p);
    auto padded = e;
    padded.resize(4);
    auto from_window = to_binomial_basis(window, 2, 3);
    from_window.resize(4);
    EXPECT_EQ(from_window, padded);
    EXPECT_EQ(interpolate_consecutive(window, 2), p);
  }
  // a window that is not of the claimed degree
  const std::vector<Rational> bad = {Rational(0), Rational(1), Rational(4), Rational(9), Rational(17)};
  EXPECT_THROW((void)to_binomial_basis(bad, 0, 2), Error);
}

TEST(Poly, LagrangeInterpolationRecoversPolynomial) {
  const PolyM p({Rational(3), Rational(-1), Rational(0), Rational(BigInt(1), BigInt(2))});
  std::vector<Rational> xs = {Rational(-2), Rational(BigInt(1), BigInt(3)), Rational(5), Rational(7)};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(p.eval(x));
  EXPECT_EQ(interpolate(xs, ys), p);
}
