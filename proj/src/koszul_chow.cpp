#include "hilbert_chow/koszul_chow.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilbert_chow/error.hpp"

namespace hilbert_chow {

// ---------------------------------------------------------------- forms, rng

bool LinearFormSet::degenerate() const { return mat_rank(matrix()) < count(); }

MatrixQ LinearFormSet::matrix() const { return MatrixQ::from_rows(rows, num_vars()); }

LinearFormSet LinearFormSet::interpolate(const LinearFormSet& a, const LinearFormSet& b, const Rational& t) {
  if (a.count() != b.count() || a.num_vars() != b.num_vars()) {
    throw input_error("pencil_shape", "pencil endpoints have different shapes");
  }
  LinearFormSet out;
  const Rational s = Rational(1) - t;
  for (std::size_t i = 0; i < a.count(); ++i) {
    VectorQ row(a.num_vars());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = s * a.rows[i][k] + t * b.rows[i][k];
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string LinearFormSet::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t k = 0; k < rows[i].size(); ++k) os << (k ? ", " : "") << rows[i][k];
    os << "]";
  }
  os << "]";
  return os.str();
}

long Sampler::integer(long lo, long hi) {
  // Plain modulo keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(eng_() % span);
}

Rational Sampler::rational() {
  const long p = integer(-bound_, bound_);
  const long q = integer(1, bound_);
  return Rational(BigInt(p), BigInt(q));
}

LinearFormSet Sampler::forms(std::size_t count, std::size_t num_vars) {
  LinearFormSet f;
  for (std::size_t i = 0; i < count; ++i) {
    VectorQ row;
    for (std::size_t k = 0; k < num_vars; ++k) row.push_back(rational());
    f.rows.push_back(std::move(row));
  }
  return f;
}

MatrixQ Sampler::invertible_matrix(std::size_t size) {
  for (;;) {
    MatrixQ g(size, size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) g(i, j) = Rational(integer(-5, 5));
    }
    if (!mat_det(g).is_zero()) return g;
  }
}

// ----------------------------------------------------------------- complexes

bool BasedComplex::d_squared_zero() const {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (!(d[i + 1] * d[i]).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> BasedComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& m : d) r.push_back(mat_rank(m));
  return r;
}

std::optional<std::size_t> first_inexact_level(const BasedComplex& c) {
  const auto r = c.ranks();
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const std::size_t in = i == 0 ? 0 : r[i - 1];
    const std::size_t out = i < r.size() ? r[i] : 0;
    if (in + out != c.dims[i]) return i;
  }
  return std::nullopt;
}

bool is_exact(const BasedComplex& c) { return !first_inexact_level(c).has_value(); }

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::string subset_label(const std::vector<std::size_t>& s) {
  if (s.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "^e" : "e") + std::to_string(s[i]);
  return out;
}

}  // namespace

KoszulBuilder::KoszulBuilder(QuotientRing& ring, int m, std::size_t num_forms, const HilbertData* h)
    : m_(m), num_forms_(num_forms), num_vars_(ring.num_vars()) {
  if (num_forms == 0) throw input_error("no_forms", "a Koszul complex needs at least one form");
  for (std::size_t i = 0; i <= num_forms; ++i) {
    const int deg = m + static_cast<int>(i);
    const std::size_t dim = ring.piece(deg).quotient_dim();
    if (h != nullptr) {
      const Rational expected = h->value(deg);
      if (expected != Rational(static_cast<long>(dim))) {
        throw domain_error("stabilization_violated", "quotient dimension " + std::to_string(dim) + " at degree " +
                                                         std::to_string(deg) + " differs from P=" +
                                                         expected.to_string());
      }
    }
    piece_dims_.push_back(dim);
  }
  for (std::size_t i = 0; i < num_forms; ++i) {
    std::vector<MatrixQ> maps;
    for (std::size_t k = 0; k < num_vars_; ++k) {
      VectorQ unit(num_vars_);
      unit[k] = 1;
      maps.push_back(ring.mult_map(m + static_cast<int>(i), unit));
    }
    var_maps_.push_back(std::move(maps));
  }
}

BasedComplex KoszulBuilder::build(const LinearFormSet& forms) const {
  if (forms.count() != num_forms_ || forms.num_vars() != num_vars_) {
    throw input_error("forms_shape", "expected " + std::to_string(num_forms_) + " forms in " +
                                         std::to_string(num_vars_) + " variables");
  }
  const std::size_t k = num_forms_;
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  BasedComplex c;
  for (std::size_t i = 0; i <= k; ++i) {
    subsets.push_back(subsets_of_size(k, i));
    c.dims.push_back(piece_dims_[i] * subsets.back().size());
    std::vector<std::string> labels;
    for (const auto& s : subsets.back()) {
      for (std::size_t b = 0; b < piece_dims_[i]; ++b) {
        labels.push_back("deg" + std::to_string(m_ + static_cast<int>(i)) + "[" + std::to_string(b) + "]" +
                         subset_label(s));
      }
    }
    c.labels.push_back(std::move(labels));
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t src = piece_dims_[i];
    const std::size_t dst = piece_dims_[i + 1];
    std::vector<MatrixQ> form_maps;
    for (std::size_t j = 0; j < k; ++j) {
      MatrixQ lj(dst, src);
      for (std::size_t v = 0; v < num_vars_; ++v) {
        const Rational& w = forms.rows[j][v];
        if (w.is_zero()) continue;
        const MatrixQ& zv = var_maps_[i][v];
        for (std::size_t r = 0; r < dst; ++r) {
          for (std::size_t s = 0; s < src; ++s) {
            if (!zv(r, s).is_zero()) lj(r, s) += w * zv(r, s);
          }
        }
      }
      form_maps.push_back(std::move(lj));
    }
    const auto& from = subsets[i];
    const auto& to = subsets[i + 1];
    MatrixQ d(c.dims[i + 1], c.dims[i]);
    for (std::size_t a = 0; a < from.size(); ++a) {
      for (std::size_t j = 0; j < k; ++j) {
        if (std::find(from[a].begin(), from[a].end(), j) != from[a].end()) continue;
        std::vector<std::size_t> merged = from[a];
        merged.insert(std::upper_bound(merged.begin(), merged.end(), j), j);
        const auto b = static_cast<std::size_t>(std::find(to.begin(), to.end(), merged) - to.begin());
        const auto before = std::count_if(from[a].begin(), from[a].end(), [&](std::size_t x) { return x < j; });
        const Rational sign = before % 2 == 0 ? Rational(1) : Rational(-1);
        for (std::size_t r = 0; r < dst; ++r) {
          for (std::size_t s = 0; s < src; ++s) {
            const Rational& v = form_maps[j](r, s);
            if (!v.is_zero()) d(b * dst + r, a * src + s) += sign * v;
          }
        }
      }
    }
    c.d.push_back(std::move(d));
  }
  if (!c.d_squared_zero()) throw internal_error("Koszul boundary does not square to zero");
  return c;
}

BasedComplex build_koszul(QuotientRing& ring, int m, const LinearFormSet& forms, const HilbertData* h) {
  return KoszulBuilder(ring, m, forms.count(), h).build(forms);
}

// ------------------------------------------------------------------- torsion

const char* to_string(PivotStrategy s) { return s == PivotStrategy::min_index ? "min_index" : "max_numerator"; }

namespace {

std::vector<std::size_t> pick_rows_min_index(const MatrixQ& a) {
  IndependenceOracle oracle(a.cols());
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < a.rows() && !oracle.full(); ++r) {
    if (oracle.extend(a.row(r))) rows.push_back(r);
  }
  return rows;
}

std::vector<std::size_t> pick_rows_max_numerator(MatrixQ a) {
  std::vector<bool> used(a.rows(), false);
  std::vector<std::size_t> rows;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (used[r] || a(r, c).is_zero()) continue;
      if (!best || abs(a(r, c).num()) > abs(a(*best, c).num())) best = r;
    }
    if (!best) continue;
    used[*best] = true;
    rows.push_back(*best);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (used[r] || a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / a(*best, c);
      for (std::size_t cc = c; cc < a.cols(); ++cc) a(r, cc) -= f * a(*best, cc);
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

int sequence_sign(const std::vector<std::size_t>& seq) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Rational TorsionCertificate::product_of_minors() const {
  Rational t(1);
  for (std::size_t i = 0; i < minors.size(); ++i) t = (i % 2 == 0) ? t * minors[i] : t / minors[i];
  return t;
}

TorsionCertificate torsion(const BasedComplex& c, PivotStrategy strategy) {
  if (const auto bad = first_inexact_level(c)) {
    throw domain_error("incident", "complex is not exact at level " + std::to_string(*bad) +
                                       ": the forms have a common zero on X (Chow form vanishes)");
  }
  TorsionCertificate cert;
  cert.strategy = strategy;
  cert.dims = c.dims;
  cert.ranks = c.ranks();
  std::vector<std::size_t> cols(c.dims.empty() ? 0 : c.dims[0]);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  for (std::size_t i = 0; i < c.d.size(); ++i) {
    const std::size_t target = c.dims[i + 1];
    std::vector<std::size_t> all_rows(target);
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    const MatrixQ a = c.d[i].select(all_rows, cols);
    std::vector<std::size_t> rows =
        strategy == PivotStrategy::min_index ? pick_rows_min_index(a) : pick_rows_max_numerator(a);
    if (rows.size() != cols.size()) throw internal_error("pivot selection lost rank in an exact complex");
    std::vector<std::size_t> rest;
    for (std::size_t r = 0; r < target; ++r) {
      if (!std::binary_search(rows.begin(), rows.end(), r)) rest.push_back(r);
    }
    std::vector<std::size_t> seq = rows;
    seq.insert(seq.end(), rest.begin(), rest.end());
    const Rational minor = rows.empty() ? Rational(1) : mat_det(c.d[i].select(rows, cols));
    cert.columns.push_back(cols);
    cert.rows.push_back(rows);
    cert.minors.push_back(Rational(sequence_sign(seq)) * minor);
    cols = std::move(rest);
  }
  if (!cols.empty()) throw internal_error("torsion left unmatched basis vectors in the last term");
  cert.value = cert.product_of_minors();
  return cert;
}

// ---------------------------------------------------------------- chow forms

namespace {

/// Torsion, or nullopt for degenerate or incident configurations.
std::optional<Rational> torsion_value(const KoszulBuilder& builder, const LinearFormSet& forms) {
  if (forms.degenerate()) return std::nullopt;
  const BasedComplex c = builder.build(forms);
  if (!is_exact(c)) return std::nullopt;
  return torsion(c).value;
}

}  // namespace

ChowEval chow_eval(const KoszulBuilder& builder, const LinearFormSet& forms, const ChowReference* reference) {
  if (forms.degenerate()) {
    throw input_error("degenerate_forms", "linear forms " + forms.to_string() + " are linearly dependent");
  }
  const BasedComplex c = builder.build(forms);
  ChowEval r;
  if (const auto bad = first_inexact_level(c)) {
    r.incident = true;
    r.failing_level = *bad;
    return r;
  }
  r.torsion = torsion(c).value;
  if (reference != nullptr) {
    if (reference->m != builder.degree()) throw input_error("reference_degree", "reference taken at another degree");
    r.normalized = r.torsion / reference->torsion;
  }
  return r;
}

ChowEval chow_eval(QuotientRing& ring, const LinearFormSet& forms, int m, const HilbertData* h,
                   const ChowReference* reference) {
  return chow_eval(KoszulBuilder(ring, m, forms.count(), h), forms, reference);
}

ChowReference make_chow_reference(const KoszulBuilder& builder, Sampler& sampler) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ChowReference ref;
    ref.forms = sampler.forms(builder.num_forms(), builder.num_vars());
    ref.m = builder.degree();
    if (const auto t = torsion_value(builder, ref.forms)) {
      ref.torsion = *t;
      return ref;
    }
  }
  throw domain_error("no_reference", "no non-incident reference configuration found");
}

namespace {

std::optional<long> log2_exact(const BigInt& v) {
  if (v <= 0) return std::nullopt;
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  if (mpz_scan1(v.get_mpz_t(), 0) != bits - 1) return std::nullopt;
  return static_cast<long>(bits - 1);
}

}  // namespace

long scaling_exponent(const KoszulBuilder& builder, const LinearFormSet& forms, std::size_t row) {
  const auto base = torsion_value(builder, forms);
  if (!base) throw domain_error("incident", "scaling test needs a non-incident configuration");
  LinearFormSet scaled = forms;
  for (auto& x : scaled.rows.at(row)) x *= Rational(2);
  const auto twice = torsion_value(builder, scaled);
  if (!twice) throw internal_error("scaling a form changed incidence");
  const Rational ratio = *twice / *base;
  if (ratio.den() == 1) {
    if (const auto e = log2_exact(ratio.num())) return *e;
  } else if (ratio.num() == 1) {
    if (const auto e = log2_exact(ratio.den())) return -*e;
  }
  throw domain_error("not_multihomogeneous", "scaling a form by 2 multiplied the torsion by " + ratio.to_string());
}

int chow_exponent(const KoszulBuilder& builder, const HilbertData& h, Sampler& sampler) {
  const ChowReference probe = make_chow_reference(builder, sampler);
  const long e = scaling_exponent(builder, probe.forms, 0);
  const long d = h.d.get_si();
  if (e == d) return 1;
  if (e == -d) return -1;
  throw domain_error("exponent_mismatch", "torsion scales with exponent " + std::to_string(e) +
                                              " under a form scaling, expected +-" + std::to_string(d));
}

// ------------------------------------------------------ multihomogeneous polys

MultihomogPoly::MultihomogPoly(std::size_t groups, std::size_t vars_per_group, int degree)
    : groups_(groups), vars_(vars_per_group), degree_(degree) {}

void MultihomogPoly::add_term(const Exps& e, const Rational& c) {
  if (e.size() != groups_) throw input_error("multidegree", "wrong number of exponent groups");
  for (const auto& g : e) {
    if (g.size() != vars_ || std::accumulate(g.begin(), g.end(), 0) != degree_) {
      throw input_error("multidegree", "exponent group is not of degree " + std::to_string(degree_));
    }
  }
  if (c.is_zero()) return;
  Rational& slot = terms_[e];
  slot += c;
  if (slot.is_zero()) terms_.erase(e);
}

Rational MultihomogPoly::eval(const LinearFormSet& point) const {
  if (point.count() != groups_ || point.num_vars() != vars_) throw input_error("forms_shape", "point shape mismatch");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t g = 0; g < groups_; ++g) {
      for (std::size_t v = 0; v < vars_; ++v) {
        if (e[g][v] != 0) t *= point.rows[g][v].pow(e[g][v]);
      }
    }
    total += t;
  }
  return total;
}

Rational MultihomogPoly::make_primitive() {
  if (terms_.empty()) return Rational(1);
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  if (terms_.begin()->second.sign() < 0) factor = -factor;
  for (auto& [e, c] : terms_) c *= factor;
  return factor;
}

std::string MultihomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      coeff = c.abs();
    } else if (c.sign() < 0) {
      os << "-";
      coeff = c.abs();
    }
    first = false;
    std::string mono;
    for (std::size_t g = 0; g < groups_; ++g) {
      for (std::size_t v = 0; v < vars_; ++v) {
        if (e[g][v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "w" + std::to_string(g) + "_" + std::to_string(v);
        if (e[g][v] > 1) mono += "^" + std::to_string(e[g][v]);
      }
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == Rational(1)) {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

// -------------------------------------------------------------- interpolation

ChowInterpolation chow_interpolate(QuotientRing& ring, const HilbertData& h, int m, std::uint64_t seed,
                                   std::size_t held_out) {
  const std::size_t groups = static_cast<std::size_t>(h.n) + 1;
  const std::size_t nv = ring.num_vars();
  const int d = static_cast<int>(h.d.get_si());
  KoszulBuilder builder(ring, m, groups, &h);
  Sampler sampler(seed);

  ChowInterpolation out{MultihomogPoly(groups, nv, d), MultihomogPoly(groups, nv, d), 0, 0, 0, 0, {}};
  out.exponent = chow_exponent(builder, h, sampler);
  out.reference = make_chow_reference(builder, sampler);

  auto value_at = [&](const LinearFormSet& f) -> Rational {
    const auto t = torsion_value(builder, f);
    if (!t) return Rational(0);
    const Rational r = *t / out.reference.torsion;
    return out.exponent == 1 ? r : r.inverse();
  };

  const auto monos = enumerate_monomials(nv, d);
  const std::size_t K = monos.size();
  std::vector<std::vector<VectorQ>> points(groups);  // [group][p] -> point in Q^(N+1)
  std::vector<MatrixQ> inv_eval(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    for (;;) {
      const MatrixQ G = sampler.invertible_matrix(nv);
      std::vector<VectorQ> pts;
      for (const auto& a : monos) {
        VectorQ lattice(nv);
        for (std::size_t v = 0; v < nv; ++v) lattice[v] = Rational(a[v]);
        pts.push_back(G * std::span<const Rational>(lattice));
      }
      MatrixQ A(K, K);
      for (std::size_t p = 0; p < K; ++p) {
        for (std::size_t q = 0; q < K; ++q) {
          Rational val(1);
          for (std::size_t v = 0; v < nv; ++v) {
            if (monos[q][v] != 0) val *= pts[p][v].pow(monos[q][v]);
          }
          A(p, q) = val;
        }
      }
      if (mat_det(A).is_zero()) continue;
      points[g] = std::move(pts);
      inv_eval[g] = inverse(A);
      break;
    }
  }

  std::size_t total = 1;
  for (std::size_t g = 0; g < groups; ++g) total *= K;
  std::vector<Rational> tensor(total);
  // Flat index: group 0 is the most significant digit.
  for (std::size_t idx = 0; idx < total; ++idx) {
    LinearFormSet f;
    std::size_t rest = idx;
    std::vector<std::size_t> digits(groups);
    for (std::size_t g = groups; g-- > 0;) {
      digits[g] = rest % K;
      rest /= K;
    }
    for (std::size_t g = 0; g < groups; ++g) f.rows.push_back(points[g][digits[g]]);
    tensor[idx] = value_at(f);
    if (tensor[idx].is_zero()) ++out.incident_grid_points;
    ++out.evaluations;
  }

  // Apply the inverse evaluation matrix along each mode.
  std::size_t stride = total;
  for (std::size_t g = 0; g < groups; ++g) {
    stride /= K;
    const std::size_t block = stride * K;
    std::vector<Rational> next(total);
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t s = 0; s < stride; ++s) {
        for (std::size_t q = 0; q < K; ++q) {
          Rational acc;
          for (std::size_t p = 0; p < K; ++p) {
            const Rational& a = inv_eval[g](q, p);
            const Rational& v = tensor[base + p * stride + s];
            if (!a.is_zero() && !v.is_zero()) acc += a * v;
          }
          next[base + q * stride + s] = acc;
        }
      }
    }
    tensor = std::move(next);
  }

  for (std::size_t idx = 0; idx < total; ++idx) {
    if (tensor[idx].is_zero()) continue;
    MultihomogPoly::Exps e(groups);
    std::size_t rest = idx;
    for (std::size_t g = groups; g-- > 0;) {
      e[g] = monos[rest % K].exps();
      rest /= K;
    }
    out.raw.add_term(e, tensor[idx]);
  }

  for (std::size_t i = 0; i < held_out; ++i) {
    const LinearFormSet f = sampler.forms(groups, nv);
    const Rational expect = value_at(f);
    const Rational got = out.raw.eval(f);
    if (expect != got) {
      throw identity_error("held_out_mismatch", "interpolant gives " + got.to_string() + " but the torsion gives " +
                                                    expect.to_string() + " at " + f.to_string());
    }
    ++out.held_out;
  }
  out.poly = out.raw;
  out.poly.make_primitive();
  return out;
}

// ------------------------------------------------------------------- pencils

VanishingProbe vanishing_order_probe(const KoszulBuilder& builder, const HilbertData& h, const LinearFormSet& a,
                                     const LinearFormSet& b, std::optional<Rational> t0) {
  VanishingProbe r;
  if (t0) {
    r.t0 = *t0;
  } else if (!torsion_value(builder, a)) {
    r.t0 = 0;
  } else if (!torsion_value(builder, b)) {
    r.t0 = 1;
  } else {
    throw input_error("no_crossing", "neither pencil endpoint is incident; pass the crossing parameter explicitly");
  }
  const long bound = (h.n + 1) * h.d.get_si();
  const std::size_t need = static_cast<std::size_t>(bound) + 1;
  const std::size_t check = 3;
  std::vector<Rational> ts, values;
  for (long k = 2; ts.size() < need + check && k < 20 * bound + 60; ++k) {
    const Rational t(BigInt(k), BigInt(k % 2 == 0 ? 1 : 3));
    if (t == r.t0) continue;
    if (const auto v = torsion_value(builder, LinearFormSet::interpolate(a, b, t))) {
      ts.push_back(t);
      values.push_back(*v);
    }
  }
  if (ts.size() < need + check) {
    throw domain_error("pencil_inside_incidence", "the pencil meets X at almost every parameter");
  }
  auto fits = [&](const std::vector<Rational>& ys) -> std::optional<PolyM> {
    const PolyM p = interpolate(std::span<const Rational>(ts).first(need), std::span<const Rational>(ys).first(need));
    for (std::size_t i = need; i < ts.size(); ++i) {
      if (p.eval(ts[i]) != ys[i]) return std::nullopt;
    }
    return p;
  };
  if (auto p = fits(values)) {
    r.torsion_is_polynomial = true;
    r.profile = *p;
  } else {
    std::vector<Rational> inv;
    for (const auto& v : values) inv.push_back(v.inverse());
    if (auto q = fits(inv)) {
      r.profile = *q;
    } else {
      throw domain_error("not_reconstructible",
                         "neither the torsion nor its reciprocal is a polynomial of degree <= " +
                             std::to_string(bound) + " along the pencil");
    }
  }
  const int mult = root_multiplicity(r.profile, r.t0);
  r.order = r.torsion_is_polynomial ? mult : -mult;
  if (mult == 0) r.warnings.push_back("no_crossing: the pencil does not meet the incidence locus at t0");
  if (mult >= 2) {
    r.warnings.push_back("tangent_pencil: multiplicity " + std::to_string(mult) + " at t=" + r.t0.to_string());
  }
  return r;
}

}  // namespace hilbert_chow
