#include "hilbert_chow/poly.hpp"

#include <sstream>

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

PolyM::PolyM(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyM::PolyM(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

void PolyM::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyM PolyM::monomial(long degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return PolyM(std::move(v));
}

PolyM PolyM::linear(const Rational& shift) { return PolyM(std::vector<Rational>{shift, 1}); }

PolyM PolyM::binomial(long k) {
  PolyM p(Rational(1));
  for (long i = 0; i < k; ++i) p = p * linear(Rational(-i));
  return p * Rational(factorial(k)).inverse();
}

Rational PolyM::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational PolyM::eval(const Rational& m) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + *it;
  return acc;
}

PolyM PolyM::shift(const Rational& s) const {
  // Horner in the polynomial ring: p(m+s) = (...(c_d (m+s) + c_{d-1})(m+s) + ...).
  PolyM acc;
  const PolyM x = linear(s);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + PolyM(*it);
  return acc;
}

PolyM PolyM::pow(unsigned e) const {
  PolyM r(Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

PolyM PolyM::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

PolyM& PolyM::operator+=(const PolyM& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyM& PolyM::operator-=(const PolyM& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyM& PolyM::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

PolyM operator*(const PolyM& a, const PolyM& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyM(std::move(r));
}

std::string PolyM::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    if (i == 0 || c != Rational(1)) os << c;
    if (i >= 1) {
      if (c != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<PolyM, PolyM> divmod(const PolyM& a, const PolyM& b) {
  if (b.is_zero()) throw domain_error("division_by_zero", "polynomial division by zero");
  PolyM r = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  const Rational lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const long shift = r.degree() - b.degree();
    const Rational f = r.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = f;
    r -= PolyM::monomial(shift, f) * b;
  }
  return {PolyM(std::move(q)), r};
}

PolyM gcd(PolyM a, PolyM b) {
  while (!b.is_zero()) {
    PolyM r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int root_multiplicity(const PolyM& p, const Rational& r) {
  if (p.is_zero()) throw domain_error("zero_polynomial", "root multiplicity of the zero polynomial");
  int mult = 0;
  PolyM cur = p;
  const PolyM x = PolyM::linear(-r);
  while (true) {
    auto [q, rem] = divmod(cur, x);
    if (!rem.is_zero()) break;
    cur = std::move(q);
    ++mult;
  }
  return mult;
}

RatFuncM::RatFuncM(PolyM num, PolyM den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw domain_error("division_by_zero", "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyM(Rational(1));
    return;
  }
  const PolyM g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    num_ *= lead.inverse();
    den_ *= lead.inverse();
  }
}

std::optional<Rational> RatFuncM::constant() const {
  if (num_.degree() <= 0 && den_.degree() == 0) return num_.coeff(0) / den_.coeff(0);
  return std::nullopt;
}

Rational RatFuncM::eval(const Rational& m) const { return num_.eval(m) / den_.eval(m); }

RatFuncM operator+(const RatFuncM& a, const RatFuncM& b) {
  if (a.den_ == b.den_) return RatFuncM(a.num_ + b.num_, a.den_);
  return RatFuncM(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncM operator-(const RatFuncM& a, const RatFuncM& b) { return a + (-b); }

RatFuncM operator*(const RatFuncM& a, const RatFuncM& b) {
  return RatFuncM(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncM operator/(const RatFuncM& a, const RatFuncM& b) {
  if (b.is_zero()) throw domain_error("division_by_zero", "rational function division by zero");
  return RatFuncM(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFuncM::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational InvMSeries::coefficient(long e) const {
  if (e > start) return 0;
  if (e < lowest_exponent()) {
    throw internal_error("series coefficient m^" + std::to_string(e) + " lies past the truncation m^" +
                         std::to_string(lowest_exponent()));
  }
  return coeffs[static_cast<std::size_t>(start - e)];
}

InvMSeries series_ratio(const PolyM& numer, const PolyM& denom, std::size_t order) {
  if (denom.is_zero()) throw domain_error("division_by_zero", "series of a ratio with zero denominator");
  InvMSeries s;
  s.order = order;
  s.coeffs.assign(order + 1, Rational(0));
  if (numer.is_zero()) return s;
  s.start = numer.degree() - denom.degree();
  const long a = numer.degree();
  const long b = denom.degree();
  const Rational d0_inv = denom.leading().inverse();
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = numer.coeff(a - static_cast<long>(k));
    for (std::size_t j = 1; j <= k; ++j) {
      const Rational dj = denom.coeff(b - static_cast<long>(j));
      if (!dj.is_zero()) acc -= dj * s.coeffs[k - j];
    }
    s.coeffs[k] = acc * d0_inv;
  }
  return s;
}

std::vector<Rational> laurent_coefficients(const PolyM& numer, const PolyM& denom, long top,
                                           std::size_t count) {
  std::vector<Rational> out(count);
  if (numer.is_zero() || count == 0) {
    if (denom.is_zero()) throw domain_error("division_by_zero", "series of a ratio with zero denominator");
    return out;
  }
  const long start = numer.degree() - denom.degree();
  const long lowest = top - static_cast<long>(count) + 1;
  if (start < lowest) return out;
  const InvMSeries s = series_ratio(numer, denom, static_cast<std::size_t>(start - lowest));
  for (std::size_t i = 0; i < count; ++i) out[i] = s.coefficient(top - static_cast<long>(i));
  return out;
}

PolyM finite_difference(const PolyM& p, unsigned k) {
  PolyM cur = p;
  for (unsigned i = 0; i < k; ++i) cur = cur.shift(1) - cur;
  return cur;
}

std::vector<Rational> finite_difference(std::span<const Rational> window, unsigned k) {
  if (window.size() < static_cast<std::size_t>(k) + 1) {
    throw input_error("window_too_short", "window of length " + std::to_string(window.size()) +
                                              " is too short for a difference of order " + std::to_string(k));
  }
  std::vector<Rational> cur(window.begin(), window.end());
  for (unsigned i = 0; i < k; ++i) {
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) cur[j] = cur[j + 1] - cur[j];
    cur.pop_back();
  }
  return cur;
}

std::vector<Rational> to_binomial_basis(const PolyM& p) {
  std::vector<Rational> e;
  PolyM cur = p;
  for (long i = 0; i <= p.degree(); ++i) {
    e.push_back(cur.eval(0));
    cur = cur.shift(1) - cur;
  }
  return e;
}

std::vector<Rational> to_binomial_basis(std::span<const Rational> window, long m0, unsigned degree) {
  if (window.size() < static_cast<std::size_t>(degree) + 1) {
    throw input_error("window_too_short", "binomial-basis window needs at least " + std::to_string(degree + 1) +
                                              " samples");
  }
  if (window.size() >= static_cast<std::size_t>(degree) + 2) {
    const auto d = finite_difference(window, degree + 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i].is_zero()) {
        throw domain_error("inconsistent_window",
                           "samples are not a polynomial of degree <= " + std::to_string(degree) +
                               ": difference of order " + std::to_string(degree + 1) + " at m=" +
                               std::to_string(m0 + static_cast<long>(i)) + " is " + d[i].to_string());
      }
    }
  }
  return to_binomial_basis(interpolate_consecutive(window.first(degree + 1), m0));
}

PolyM from_binomial_basis(std::span<const Rational> e) {
  PolyM p;
  for (std::size_t i = 0; i < e.size(); ++i) p += PolyM::binomial(static_cast<long>(i)) * e[i];
  return p;
}

PolyM interpolate_consecutive(std::span<const Rational> window, long m0) {
  if (window.empty()) return {};
  PolyM p;
  std::vector<Rational> cur(window.begin(), window.end());
  for (std::size_t i = 0; i < window.size(); ++i) {
    // cur[0] now holds Delta^i chi(m0).
    if (!cur[0].is_zero()) p += PolyM::binomial(static_cast<long>(i)).shift(Rational(-m0)) * cur[0];
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) cur[j] = cur[j + 1] - cur[j];
    cur.pop_back();
  }
  return p;
}

PolyM interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw input_error("dimension_mismatch", "interpolation node/value mismatch");
  PolyM p;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    PolyM basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * PolyM::linear(-xs[j]);
      denom *= xs[i] - xs[j];
    }
    p += basis * (ys[i] / denom);
  }
  return p;
}

}  // namespace hilbert_chow
