#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hilbert_chow/error.hpp"
#include "hilbert_chow/fixtures.hpp"
#include "hilbert_chow/graded_ideal.hpp"
#include "support.hpp"

using namespace hilbert_chow;

namespace {

PolyM poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return PolyM(v);
}

class MemoryStore : public PieceStore {
 public:
  std::optional<std::vector<VectorQ>> load(const std::string& key) override {
    ++loads;
    auto it = data.find(key);
    if (it == data.end()) return std::nullopt;
    return it->second;
  }
  void save(const std::string& key, const std::vector<VectorQ>& rows) override { data[key] = rows; }
  std::map<std::string, std::vector<VectorQ>> data;
  int loads = 0;
};

}  // namespace

TEST(Monomials, CountAndOrder) {
  for (std::size_t nv = 1; nv <= 4; ++nv) {
    for (int m = 0; m <= 5; ++m) {
      const auto monos = enumerate_monomials(nv, m);
      EXPECT_EQ(BigInt(monos.size()), binomial(m + static_cast<long>(nv) - 1, static_cast<long>(nv) - 1));
      EXPECT_EQ(monos.size(), oracle::monomials(nv, m).size());
      for (std::size_t i = 1; i < monos.size(); ++i) EXPECT_GT(monos[i - 1], monos[i]);
      for (const auto& x : monos) EXPECT_EQ(x.degree(), m);
    }
  }
  const auto q2 = enumerate_monomials(3, 2);
  EXPECT_EQ(q2.front().to_string(), "z0^2");
  EXPECT_EQ(q2.back().to_string(), "z2^2");
}

TEST(HomogeneousPoly, ParsesAndMergesTerms) {
  const auto p = HomogeneousPoly::parse("z0*z2 - z1^2 + 2*z1*z1", 3);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.to_string(), HomogeneousPoly::parse("z1^2 + z0*z2", 3).to_string());
  EXPECT_EQ(HomogeneousPoly::parse("3/2*x0^2 + x1*x2", 3).terms().front().coeff.to_string(), "3/2");
}

TEST(HomogeneousPoly, RejectsBadInput) {
  try {
    (void)HomogeneousPoly::parse("z0^2 + z1", 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "inhomogeneous");
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
  EXPECT_THROW((void)HomogeneousPoly::parse("z0 - z0", 3), Error);
  EXPECT_THROW((void)HomogeneousPoly::parse("z5", 3), Error);
  EXPECT_THROW((void)HomogeneousPoly::parse("z0 +", 3), Error);
}

TEST(HomogeneousIdeal, CanonicalTextIgnoresGeneratorOrder) {
  const HomogeneousIdeal a(3, {HomogeneousPoly::parse("z0", 3), HomogeneousPoly::parse("z1*z2 - z2^2", 3)});
  const HomogeneousIdeal b(3, {HomogeneousPoly::parse("-z2^2 + z1*z2", 3), HomogeneousPoly::parse("z0", 3)});
  EXPECT_EQ(a.canonical(), b.canonical());
}

TEST(QuotientRing, HilbertFunctionMatchesRankOracle) {
  for (const auto& fx : builtin_fixtures()) {
    QuotientRing ring(fx.ideal());
    const auto gens = support::oracle_generators(fx.name);
    for (int m = 0; m <= 6; ++m) {
      EXPECT_EQ(ring.hilbert_function(m), oracle::hilbert_function(gens, fx.num_vars, m)) << fx.name << " m=" << m;
    }
  }
}

TEST(QuotientRing, StandardMonomialsAreNonPivotColumns) {
  QuotientRing ring(builtin_fixture("twisted_cubic").ideal());
  for (int m = 1; m <= 4; ++m) {
    const GradedPiece& p = ring.piece(m);
    std::set<std::size_t> all(p.standard().begin(), p.standard().end());
    for (std::size_t piv : p.ideal().pivots) {
      EXPECT_EQ(all.count(piv), 0u);
      all.insert(piv);
    }
    EXPECT_EQ(all.size(), p.ambient_dim());
    // standard monomials map to unit vectors, ideal rows to zero
    for (std::size_t k = 0; k < p.standard().size(); ++k) {
      const VectorQ& img = p.monomial_image(p.standard()[k]);
      for (std::size_t j = 0; j < img.size(); ++j) EXPECT_EQ(img[j], Rational(j == k ? 1 : 0));
    }
    for (std::size_t i = 0; i < p.ideal().rows.rows(); ++i) {
      for (const auto& x : p.normal_form(p.ideal().rows.row(i))) EXPECT_TRUE(x.is_zero());
    }
  }
}

TEST(QuotientRing, MultiplicationMapsCommute) {
  QuotientRing ring(builtin_fixture("twisted_cubic").ideal());
  const VectorQ x = {Rational(1), Rational(2), Rational(0), Rational(-1)};
  const VectorQ y = {Rational(0), Rational(1), Rational(3), Rational(BigInt(1), BigInt(2))};
  for (int m = 1; m <= 3; ++m) {
    const MatrixQ a = ring.mult_map(m + 1, y) * ring.mult_map(m, x);
    const MatrixQ b = ring.mult_map(m + 1, x) * ring.mult_map(m, y);
    EXPECT_EQ(a, b);
    EXPECT_EQ(ring.mult_map(m, x).rows(), ring.hilbert_function(m + 1));
    EXPECT_EQ(ring.mult_map(m, x).cols(), ring.hilbert_function(m));
  }
}

TEST(QuotientRing, StoreRoundTripIsTransparent) {
  MemoryStore store;
  const HomogeneousIdeal ideal = builtin_fixture("conic").ideal();
  std::vector<std::size_t> cold;
  {
    QuotientRing ring(ideal, &store);
    for (int m = 0; m <= 5; ++m) cold.push_back(ring.hilbert_function(m));
    EXPECT_EQ(ring.store_hits(), 0u);
  }
  EXPECT_FALSE(store.data.empty());
  QuotientRing warm(ideal, &store);
  for (int m = 0; m <= 5; ++m) {
    EXPECT_EQ(warm.hilbert_function(m), cold[static_cast<std::size_t>(m)]);
    QuotientRing fresh(ideal);
    EXPECT_EQ(warm.piece(m).ideal().rows, fresh.piece(m).ideal().rows);
  }
  EXPECT_GT(warm.store_hits(), 0u);
  EXPECT_NE(warm.cache_key(2), warm.cache_key(3));
  EXPECT_NE(warm.cache_key(2).find(std::string(kMonomialOrderVersion)), std::string::npos);
}

TEST(HilbertPolynomial, FixturesFitExpectedPolynomials) {
  const std::map<std::string, PolyM> expected = {
      {"conic", poly({1, 2})},           {"twisted_cubic", poly({1, 3})}, {"quadric_surface", poly({1, 2, 1})},
      {"point", poly({1})},              {"two_points", poly({2})},       {"fat_point", poly({3})},
  };
  for (const auto& [name, p] : expected) {
    QuotientRing ring(builtin_fixture(name).ideal());
    const HilbertData h = fit_hilbert_polynomial(ring, 1, 9);
    EXPECT_EQ(h.polynomial, p) << name;
    // d = n! b_n and integer binomial coefficients
    EXPECT_EQ(Rational(h.d), Rational(factorial(h.n)) * h.b(h.n)) << name;
    for (const auto& e : h.binomial_coeffs) EXPECT_TRUE(e.is_integer()) << name;
  }
  QuotientRing plane(builtin_fixture("plane").ideal());
  const HilbertData hp = fit_hilbert_polynomial(plane, 0, 8);
  EXPECT_EQ(hp.polynomial, PolyM::binomial(2).shift(Rational(2)));
  EXPECT_EQ(hp.d, 1);
}

TEST(HilbertPolynomial, MuConventionsAndStabilization) {
  QuotientRing conic(builtin_fixture("conic").ideal());
  const HilbertData c = fit_hilbert_polynomial(conic, 1, 8);
  EXPECT_EQ(c.mu_literal, Rational(1));
  EXPECT_EQ(c.mu_normalized, Rational(1));
  EXPECT_EQ(c.m_stab, 1);
  QuotientRing cubic(builtin_fixture("twisted_cubic").ideal());
  const HilbertData t = fit_hilbert_polynomial(cubic, 1, 8);
  EXPECT_EQ(t.mu_literal, Rational(1));
  EXPECT_EQ(t.mu_normalized, Rational(BigInt(2), BigInt(3)));
  QuotientRing quad(builtin_fixture("quadric_surface").ideal());
  const HilbertData qd = fit_hilbert_polynomial(quad, 1, 8);
  EXPECT_EQ(qd.mu_literal, Rational(2));
  EXPECT_EQ(qd.mu_normalized, Rational(4));
  // the fat point agrees with its polynomial only from m = 1 on
  QuotientRing fat(builtin_fixture("fat_point").ideal());
  const HilbertData f = fit_hilbert_polynomial(fat, 0, 8);
  EXPECT_EQ(f.m_stab, 1);
  EXPECT_EQ(parse_mu_convention("normalized"), MuConvention::normalized);
  EXPECT_THROW((void)parse_mu_convention("other"), Error);
}

TEST(HilbertPolynomial, ShortWindowIsRejected) {
  QuotientRing ring(builtin_fixture("conic").ideal());
  EXPECT_THROW((void)fit_hilbert_polynomial(ring, 1, 3), Error);
}

TEST(Gotzmann, NumbersOfFixturePolynomials) {
  EXPECT_EQ(gotzmann_number(poly({1, 2})), 2);
  EXPECT_EQ(gotzmann_number(poly({1, 3})), 4);
  EXPECT_EQ(gotzmann_number(poly({1, 2, 1})), 2);
  EXPECT_EQ(gotzmann_number(poly({1})), 1);
  EXPECT_EQ(gotzmann_number(poly({2})), 2);
  // plane curves of degree d: d m + 1 - (d-1)(d-2)/2 decomposes into d linear summands
  for (long d = 1; d <= 6; ++d) {
    const long g = (d - 1) * (d - 2) / 2;
    EXPECT_EQ(gotzmann_number(poly({1 - g, d})), d) << d;
  }
  // P^2 itself: binom(m + 2, 2) is one summand
  EXPECT_EQ(gotzmann_number(PolyM::binomial(2).shift(Rational(2))), 1);
  EXPECT_THROW((void)gotzmann_number(poly({-1})), Error);
}
