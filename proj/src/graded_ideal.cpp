#include "hilbert_chow/graded_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

// ---------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::vector<int> exps) : e_(std::move(exps)) {
  for (int x : e_) {
    if (x < 0) throw input_error("negative_exponent", "negative exponent in multi-index");
    degree_ += x;
  }
}

MultiIndex MultiIndex::times_var(std::size_t k) const {
  MultiIndex r = *this;
  ++r.e_.at(k);
  ++r.degree_;
  return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw input_error("dimension_mismatch", "multi-index length mismatch");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.degree_ += o.degree_;
  return r;
}

bool MultiIndex::divides(const MultiIndex& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << "z" << i;
    if (e_[i] > 1) os << "^" << e_[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::vector<MultiIndex> enumerate_monomials(std::size_t num_vars, int degree) {
  std::vector<MultiIndex> out;
  if (num_vars == 0 || degree < 0) return out;
  std::vector<int> cur(num_vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == num_vars) {
      cur[pos] = left;
      out.emplace_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

// ------------------------------------------------------------ HomogeneousPoly

HomogeneousPoly::HomogeneousPoly(std::size_t num_vars, std::vector<Term> terms) : num_vars_(num_vars) {
  std::map<MultiIndex, Rational, std::greater<>> merged;
  for (auto& t : terms) {
    if (t.exps.size() != num_vars) {
      throw input_error("arity_mismatch", "term " + t.exps.to_string() + " has " + std::to_string(t.exps.size()) +
                                              " exponents, expected " + std::to_string(num_vars));
    }
    merged[t.exps] += t.coeff;
  }
  for (auto& [mono, c] : merged) {
    if (!c.is_zero()) terms_.push_back({c, mono});
  }
  if (terms_.empty()) throw input_error("zero_generator", "generator is the zero polynomial");
  degree_ = terms_.front().exps.degree();
  for (const auto& t : terms_) {
    if (t.exps.degree() != degree_) {
      throw input_error("inhomogeneous", "generator " + to_string() + " is not homogeneous: it has terms of degree " +
                                             std::to_string(degree_) + " and " + std::to_string(t.exps.degree()));
    }
  }
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t num_vars) : s_(text), nv_(num_vars) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
    terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-' ? -1 : 1));
    }
    return terms;
  }

 private:
  Term term(int sign) {
    Rational coeff = sign;
    std::vector<int> exps(nv_, 0);
    bool any = false;
    while (true) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (c == 'z' || c == 'x') {
        ++pos_;
        const long idx = integer();
        if (idx < 0 || static_cast<std::size_t>(idx) >= nv_) fail("variable index out of range");
        long e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = integer();
        }
        exps[static_cast<std::size_t>(idx)] += static_cast<int>(e);
      } else {
        fail("expected a coefficient or a variable");
      }
      any = true;
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return {coeff, MultiIndex(std::move(exps))};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  long integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("bad_polynomial", "cannot parse polynomial '" + std::string(s_) + "' at offset " +
                                            std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t nv_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogeneousPoly HomogeneousPoly::parse(std::string_view text, std::size_t num_vars) {
  return HomogeneousPoly(num_vars, PolyParser(text, num_vars).parse());
}

std::string HomogeneousPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    const bool constant = t.exps.degree() == 0;
    if (c != Rational(1) || constant) {
      os << c;
      if (!constant) os << "*";
    }
    if (!constant) os << t.exps.to_string();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------- HomogeneousIdeal

HomogeneousIdeal::HomogeneousIdeal(std::size_t num_vars, std::vector<HomogeneousPoly> generators)
    : num_vars_(num_vars), gens_(std::move(generators)) {
  if (num_vars_ == 0) throw input_error("no_variables", "an ideal needs at least one variable");
  for (const auto& g : gens_) {
    if (g.num_vars() != num_vars_) throw input_error("arity_mismatch", "generator over the wrong number of variables");
  }
}

std::string HomogeneousIdeal::canonical() const {
  std::vector<std::string> parts;
  parts.reserve(gens_.size());
  for (const auto& g : gens_) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  os << "vars=" << num_vars_ << ";gens=[";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

// --------------------------------------------------------------- GradedPiece

GradedPiece GradedPiece::from_span(std::size_t num_vars, int degree, const MatrixQ& rows) {
  GradedPiece p;
  p.degree_ = degree;
  p.num_vars_ = num_vars;
  p.monomials_ = enumerate_monomials(num_vars, degree);
  if (rows.cols() != p.monomials_.size()) {
    throw input_error("dimension_mismatch", "span rows do not match the monomial count of degree " +
                                                std::to_string(degree));
  }
  for (std::size_t i = 0; i < p.monomials_.size(); ++i) p.index_.emplace(p.monomials_[i], i);
  p.ideal_ = row_echelon(rows);
  std::vector<bool> is_pivot(p.monomials_.size(), false);
  for (auto c : p.ideal_.pivots) is_pivot[c] = true;
  std::vector<std::size_t> slot(p.monomials_.size(), 0);
  for (std::size_t c = 0; c < p.monomials_.size(); ++c) {
    if (!is_pivot[c]) {
      slot[c] = p.standard_.size();
      p.standard_.push_back(c);
    }
  }
  const std::size_t q = p.standard_.size();
  p.images_.assign(p.monomials_.size(), VectorQ(q));
  for (auto c : p.standard_) p.images_[c][slot[c]] = 1;
  for (std::size_t r = 0; r < p.ideal_.pivots.size(); ++r) {
    VectorQ& img = p.images_[p.ideal_.pivots[r]];
    for (std::size_t j = 0; j < q; ++j) img[j] = -p.ideal_.rows(r, p.standard_[j]);
  }
  return p;
}

std::size_t GradedPiece::index_of(const MultiIndex& mono) const {
  auto it = index_.find(mono);
  if (it == index_.end()) {
    throw input_error("bad_monomial", "monomial " + mono.to_string() + " is not of degree " + std::to_string(degree_));
  }
  return it->second;
}

const VectorQ& GradedPiece::monomial_image(std::size_t col) const { return images_.at(col); }

VectorQ GradedPiece::normal_form(std::span<const Rational> f) const {
  if (f.size() != monomials_.size()) throw input_error("dimension_mismatch", "normal form of a vector of wrong size");
  VectorQ out(standard_.size());
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c].is_zero()) continue;
    const VectorQ& img = images_[c];
    for (std::size_t j = 0; j < out.size(); ++j)
      if (!img[j].is_zero()) out[j] += f[c] * img[j];
  }
  return out;
}

GradedPiece ideal_degree_piece(const HomogeneousIdeal& ideal, int m) {
  const std::size_t nv = ideal.num_vars();
  const auto monos = enumerate_monomials(nv, m);
  std::map<MultiIndex, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  std::vector<VectorQ> rows;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > m) continue;
    for (const auto& alpha : enumerate_monomials(nv, m - g.degree())) {
      VectorQ row(monos.size());
      for (const auto& t : g.terms()) row[index.at(alpha + t.exps)] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return GradedPiece::from_span(nv, m, MatrixQ::from_rows(rows, monos.size()));
}

// -------------------------------------------------------------- QuotientRing

QuotientRing::QuotientRing(HomogeneousIdeal ideal, PieceStore* store) : ideal_(std::move(ideal)), store_(store) {}

std::string QuotientRing::cache_key(int m) const {
  return ideal_.canonical() + "|m=" + std::to_string(m) + "|order=" + std::string(kMonomialOrderVersion);
}

const GradedPiece& QuotientRing::piece(int m) {
  if (m < 0) throw input_error("negative_degree", "negative degree " + std::to_string(m));
  auto it = pieces_.find(m);
  if (it != pieces_.end()) return *it->second;
  std::unique_ptr<GradedPiece> p;
  if (store_ != nullptr) {
    const std::string key = cache_key(m);
    if (auto rows = store_->load(key)) {
      const std::size_t cols = enumerate_monomials(num_vars(), m).size();
      p = std::make_unique<GradedPiece>(GradedPiece::from_span(num_vars(), m, MatrixQ::from_rows(*rows, cols)));
      ++store_hits_;
    } else {
      p = std::make_unique<GradedPiece>(ideal_degree_piece(ideal_, m));
      std::vector<VectorQ> out;
      for (std::size_t r = 0; r < p->ideal().rows.rows(); ++r) out.push_back(p->ideal().rows.row_vector(r));
      store_->save(key, out);
    }
  } else {
    p = std::make_unique<GradedPiece>(ideal_degree_piece(ideal_, m));
  }
  return *pieces_.emplace(m, std::move(p)).first->second;
}

MatrixQ QuotientRing::mult_map(int m, std::span<const Rational> form) {
  if (form.size() != num_vars()) {
    throw input_error("dimension_mismatch", "linear form has " + std::to_string(form.size()) +
                                                " coefficients, expected " + std::to_string(num_vars()));
  }
  const GradedPiece& src = piece(m);
  const GradedPiece& dst = piece(m + 1);
  MatrixQ out(dst.quotient_dim(), src.quotient_dim());
  for (std::size_t j = 0; j < src.standard().size(); ++j) {
    const MultiIndex& beta = src.monomials()[src.standard()[j]];
    for (std::size_t k = 0; k < form.size(); ++k) {
      if (form[k].is_zero()) continue;
      const VectorQ& img = dst.monomial_image(dst.index_of(beta.times_var(k)));
      for (std::size_t i = 0; i < img.size(); ++i)
        if (!img[i].is_zero()) out(i, j) += form[k] * img[i];
    }
  }
  return out;
}

// --------------------------------------------------------------- HilbertData

const char* to_string(MuConvention c) { return c == MuConvention::literal ? "literal" : "normalized"; }

MuConvention parse_mu_convention(std::string_view s) {
  if (s == "literal") return MuConvention::literal;
  if (s == "normalized") return MuConvention::normalized;
  throw input_error("bad_mu", "mu convention must be 'literal' or 'normalized', got '" + std::string(s) + "'");
}

HilbertData hilbert_data_from_polynomial(const PolyM& p) {
  if (p.is_zero()) throw domain_error("empty_scheme", "Hilbert polynomial is zero (empty subscheme)");
  HilbertData h;
  h.polynomial = p;
  h.n = static_cast<int>(p.degree());
  const Rational d = p.leading() * Rational(factorial(h.n));
  if (!d.is_integer() || d.sign() <= 0) {
    throw domain_error("non_integer_degree", "n! * leading coefficient = " + d.to_string() +
                                                 " is not a positive integer");
  }
  h.d = d.num();
  h.binomial_coeffs = to_binomial_basis(p);
  for (const auto& e : h.binomial_coeffs) {
    if (!e.is_integer()) {
      throw domain_error("not_numerical", "Hilbert polynomial " + p.to_string() + " is not integer valued");
    }
  }
  h.mu_literal = h.n >= 1 ? p.coeff(h.n - 1) : Rational(0);
  h.mu_normalized = Rational(2) * h.mu_literal / p.leading();
  return h;
}

HilbertData fit_hilbert_polynomial(QuotientRing& ring, int m_lo, int m_hi) {
  if (m_lo < 0 || m_hi < m_lo) throw input_error("bad_window", "invalid degree window");
  const int len = m_hi - m_lo + 1;
  if (len < 3) throw input_error("window_too_short", "Hilbert window needs at least 3 degrees");
  std::vector<std::size_t> samples;
  std::vector<Rational> values;
  for (int m = m_lo; m <= m_hi; ++m) {
    samples.push_back(ring.hilbert_function(m));
    values.emplace_back(static_cast<long>(samples.back()));
  }
  int degree = -1;
  for (int k = 0; k + 3 <= len; ++k) {
    std::span<const Rational> tail(values.data() + (len - (k + 3)), static_cast<std::size_t>(k + 3));
    const auto diffs = finite_difference(tail, static_cast<unsigned>(k + 1));
    if (std::all_of(diffs.begin(), diffs.end(), [](const Rational& x) { return x.is_zero(); })) {
      degree = k;
      break;
    }
  }
  if (degree < 0) {
    throw domain_error("non_stabilized", "Hilbert function on m=" + std::to_string(m_lo) + ".." +
                                             std::to_string(m_hi) + " agrees with no polynomial of degree <= " +
                                             std::to_string(len - 3) + "; widen the window");
  }
  const PolyM p = interpolate_consecutive(std::span<const Rational>(values).last(static_cast<std::size_t>(degree + 1)),
                                          m_hi - degree);
  int m_stab = m_hi;
  while (m_stab - 1 >= m_lo && p.eval(Rational(m_stab - 1)) == values[static_cast<std::size_t>(m_stab - 1 - m_lo)]) {
    --m_stab;
  }
  if (m_hi - m_stab + 1 < degree + 3) {
    throw domain_error("non_stabilized", "Hilbert function disagrees with the fitted polynomial at m=" +
                                             std::to_string(m_stab - 1));
  }
  HilbertData h = hilbert_data_from_polynomial(p);
  h.m_stab = m_stab;
  h.window_lo = m_lo;
  h.window_hi = m_hi;
  h.samples = std::move(samples);
  return h;
}

long gotzmann_number(const PolyM& p) {
  if (p.is_zero() || p.leading().sign() <= 0) {
    throw domain_error("not_hilbert_polynomial", "Gotzmann decomposition needs an eventually positive polynomial");
  }
  PolyM rest = p;
  long s = 0;
  long prev_a = p.degree();
  constexpr long kMaxSummands = 1'000'000;
  while (!rest.is_zero()) {
    const long a = rest.degree();
    if (a > prev_a || rest.leading().sign() < 0) {
      throw domain_error("not_hilbert_polynomial", "greedy Macaulay decomposition of " + p.to_string() +
                                                       " fails after " + std::to_string(s) + " summands");
    }
    ++s;
    if (s > kMaxSummands) throw domain_error("not_hilbert_polynomial", "Macaulay decomposition too long");
    rest -= PolyM::binomial(a).shift(Rational(a - s + 1));
    prev_a = a;
  }
  return s;
}

}  // namespace hilbert_chow
