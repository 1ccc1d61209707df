#include "hilbert_chow/rational.hpp"

#include <cctype>
#include <limits>

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw domain_error("zero_denominator", "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(text)) {
      throw input_error("bad_rational", "cannot parse rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-') {
    throw input_error("bad_rational", "cannot parse rational '" + std::string(text) + "'");
  }
  const BigInt d = parse_integer(den);
  if (d == 0) throw input_error("bad_rational", "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw domain_error("division_by_zero", "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw internal_error("rational " + to_string() + " is not an integer");
  const BigInt n = num();
  if (!n.fits_slong_p()) throw internal_error("integer " + to_string() + " out of range");
  return static_cast<std::int64_t>(n.get_si());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("division_by_zero", "division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational binomial_of(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational acc = 1;
  for (long i = 0; i < k; ++i) acc *= x - Rational(i);
  return acc / Rational(factorial(k));
}

}  // namespace hilbert_chow
