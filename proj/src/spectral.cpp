#include <llterm/spectral.hpp>

#include <llterm/factor.hpp>

#include <algorithm>
#include <stdexcept>

namespace llterm {

namespace {

using KPoly = std::vector<FieldElement>;  // lowest degree first

KPoly kpoly_from(const FieldPtr& K, const RatPolynomial& p) {
  KPoly out;
  for (int i = 0; i <= p.degree(); ++i) out.emplace_back(K, p.coeff(i));
  return out;
}

KPoly kpoly_mul(const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly out(a.size() + b.size() - 1, FieldElement(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// p = (x - t) * quotient + remainder
std::pair<KPoly, FieldElement> synthetic_division(const KPoly& p, const FieldElement& t) {
  if (p.empty()) return {{}, FieldElement(0)};
  KPoly q(p.size() - 1, FieldElement(0));
  FieldElement acc = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    q[i] = acc;
    acc = acc * t + p[i];
  }
  return {q, acc};
}

KMatrix to_k(const IntMatrix& m) {
  KMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = FieldElement(Rational(m(i, j)));
  return out;
}

KMatrix eval_kpoly(const KPoly& h, const KMatrix& A) {
  const std::size_t n = A.rows();
  KMatrix acc(n, n);
  for (std::size_t i = h.size(); i-- > 0;) {
    acc = acc * A;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += h[i];
  }
  return acc;
}

KMatrix projector_for(const RatPolynomial& minpoly, const IntPolynomial& q, unsigned t, const FieldPtr& K,
                      const KMatrix& A) {
  const FieldElement theta = FieldElement::generator(K);
  RatPolynomial qt = to_rational(q).pow(t);
  auto [r, rest] = divmod(minpoly, qt);
  if (!rest.is_zero()) throw std::logic_error("projector: factor does not divide the minimal polynomial");
  auto [g, g_rem] = synthetic_division(kpoly_from(K, to_rational(q)), theta);
  if (!g_rem.is_zero()) throw std::logic_error("projector: generator is not a root of its polynomial");
  KPoly h = kpoly_from(K, r);
  for (unsigned i = 0; i < t; ++i) h = kpoly_mul(h, g);
  // Taylor coefficients of h at theta, then 1/h as a power series mod (x - theta)^t
  std::vector<FieldElement> hj;
  KPoly cur = h;
  for (unsigned j = 0; j < t; ++j) {
    auto [quo, rem0] = synthetic_division(cur, theta);
    hj.push_back(rem0);
    cur = quo;
  }
  std::vector<FieldElement> gamma(t, FieldElement(0));
  FieldElement inv0 = hj[0].inverse();
  gamma[0] = inv0;
  for (unsigned j = 1; j < t; ++j) {
    FieldElement s(0);
    for (unsigned i = 1; i <= j; ++i) s += hj[i] * gamma[j - i];
    gamma[j] = -(s * inv0);
  }
  const std::size_t n = A.rows();
  KMatrix H = eval_kpoly(h, A);
  KMatrix N = A;
  for (std::size_t d = 0; d < n; ++d) N(d, d) -= theta;
  KMatrix P(n, n), Nj = KMatrix::identity(n);
  for (unsigned j = 0; j < t; ++j) {
    P = P + gamma[j] * (Nj * H);
    Nj = Nj * N;
  }
  return P;
}

Rational factorial(unsigned m) {
  Rational f = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Rational> stirling_row(unsigned m) {
  std::vector<Rational> s{Rational(1)};
  for (unsigned j = 0; j < m; ++j) {
    std::vector<Rational> next(s.size() + 1, Rational(0));
    for (std::size_t k = 0; k < s.size(); ++k) {
      next[k + 1] += s[k];
      next[k] -= Rational(j) * s[k];
    }
    s = std::move(next);
  }
  return s;
}

Rational trace_in(const EigenFamily& f, const FieldElement& x) {
  if (x.field()) return x.trace();
  return Rational(f.field->degree()) * x.rational_value();
}

SpectralData eigendecompose(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("eigendecompose: matrix must be square");
  SpectralData s;
  s.dim = A.rows();
  s.A = A;
  s.min_poly = minimal_polynomial(to_rational(A));
  const KMatrix AK = to_k(A);
  Factorization fac = factor(to_primitive_integer(s.min_poly));
  for (const auto& [q, mult] : fac.factors) {
    EigenFamily f;
    f.q = q;
    f.index = static_cast<unsigned>(mult);
    f.field = std::make_shared<const NumberField>(q);
    f.projector = projector_for(s.min_poly, q, f.index, f.field, AK);
    s.families.push_back(std::move(f));
  }
  for (std::size_t fi = 0; fi < s.families.size(); ++fi) {
    const EigenFamily& f = s.families[fi];
    if (f.zero()) continue;
    const auto& emb = f.field->embeddings();
    for (std::size_t e = 0; e < emb.size(); ++e) {
      Eigenvalue ev;
      ev.family = fi;
      ev.embedding = e;
      ev.value = emb[e];
      ev.index = f.index;
      ev.real = emb[e].is_real();
      ev.conjugate = e;
      if (ev.real) {
        ev.real_sign = alg_sign(emb[e]);
      } else {
        AlgebraicNumber c = alg_conj(emb[e]);
        for (std::size_t e2 = 0; e2 < emb.size(); ++e2)
          if (e2 != e && !emb[e2].is_real() && alg_equals(c, emb[e2])) ev.conjugate = e2;
      }
      s.eigenvalues.push_back(std::move(ev));
    }
  }
  // Order by decreasing modulus. Conjugates are equal without computation,
  // everything else is settled by enclosures or, failing that, exactly.
  const std::size_t m = s.eigenvalues.size();
  std::vector<std::optional<AlgebraicNumber>> abs2(m);
  auto get_abs2 = [&](std::size_t i) -> const AlgebraicNumber& {
    if (!abs2[i]) abs2[i] = alg_abs2(s.eigenvalues[i].value);
    return *abs2[i];
  };
  auto cmp = [&](std::size_t i, std::size_t j) -> int {
    const Eigenvalue& a = s.eigenvalues[i];
    const Eigenvalue& b = s.eigenvalues[j];
    if (i == j || (a.family == b.family && a.conjugate == b.embedding)) return 0;
    Ball x = a.value.enclose(64).abs2(), y = b.value.enclose(64).abs2();
    if (!x.overlaps(y)) return x.re() < y.re() ? -1 : 1;
    return alg_compare(get_abs2(i), get_abs2(j));
  };
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return cmp(i, j) > 0; });
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t i = order[k];
    if (k == 0 || cmp(order[k - 1], i) != 0) {
      s.classes.emplace_back();
      s.classes.back().modulus_squared = get_abs2(i);
    }
    ModulusClass& c = s.classes.back();
    Eigenvalue& ev = s.eigenvalues[i];
    ev.cls = s.classes.size() - 1;
    c.members.push_back(i);
    c.max_index = std::max(c.max_index, ev.index);
    if (ev.real) {
      (ev.real_sign > 0 ? c.positive_real : c.negative_real) = i;
    } else if (ev.value.enclose(32).imag_sign() > 0) {
      c.complex_upper.push_back(i);
    }
  }
  return s;
}

SupportVerdict check_supported(const SpectralData& spec, std::size_t dim) {
  if (has_opposite_reals(spec))
    return {false, "a modulus class holds two real eigenvalues of opposite sign (degenerate matrix)"};
  if (dim <= 5) return {};
  for (const auto& ev : spec.eigenvalues)
    if (!ev.real && ev.index > 1)
      return {false, "complex eigenvalue " + ev.value.to_string() + " has index " + std::to_string(ev.index) +
                         " in dimension " + std::to_string(dim) + " (> 5)"};
  return {};
}

bool has_opposite_reals(const SpectralData& spec) {
  for (const auto& c : spec.classes)
    if (c.positive_real && c.negative_real) return true;
  return false;
}

FieldElement CoefficientData::apply(std::size_t f, unsigned k, const RatVector& v) const {
  FieldElement acc(0);
  const KVector& a = alpha[f][k];
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0 && !a[j].is_zero()) acc += a[j] * FieldElement(v[j]);
  return acc;
}

std::vector<std::vector<FieldElement>> CoefficientData::apply_all(const RatVector& v) const {
  std::vector<std::vector<FieldElement>> out(alpha.size());
  for (std::size_t f = 0; f < alpha.size(); ++f)
    for (unsigned k = 0; k < alpha[f].size(); ++k) out[f].push_back(apply(f, k, v));
  return out;
}

CoefficientData coefficient_vectors(const SpectralData& spec, const RatVector& b) {
  const std::size_t n = spec.dim;
  if (b.size() != n) throw std::invalid_argument("coefficient_vectors: functional has wrong length");
  CoefficientData c;
  c.b = b;
  c.alpha.resize(spec.families.size());
  Integer den = 1;
  for (std::size_t fi = 0; fi < spec.families.size(); ++fi) {
    const EigenFamily& f = spec.families[fi];
    if (f.zero()) continue;
    const FieldElement theta = FieldElement::generator(f.field);
    const FieldElement theta_inv = theta.inverse();
    KVector row(n, FieldElement(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (b[i] != 0) row[j] += FieldElement(b[i]) * f.projector(i, j);
    std::vector<KVector> rows_m{row};  // b^T (A - theta)^m P
    for (unsigned m = 1; m < f.index; ++m) {
      const KVector& prev = rows_m.back();
      KVector next(n, FieldElement(0));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
          if (spec.A(i, j) != 0) next[j] += prev[i] * FieldElement(Rational(spec.A(i, j)));
        next[j] -= prev[j] * theta;
      }
      rows_m.push_back(std::move(next));
    }
    std::vector<std::vector<Rational>> st;
    for (unsigned m = 0; m < f.index; ++m) st.push_back(stirling_row(m));
    for (unsigned k = 0; k < f.index; ++k) {
      KVector ak(n, FieldElement(0));
      for (unsigned m = k; m < f.index; ++m) {
        Rational w = st[m][k] / factorial(m);
        if (w == 0) continue;
        FieldElement scale = theta_inv.pow(m).scaled(w);
        for (std::size_t j = 0; j < n; ++j) ak[j] += scale * rows_m[m][j];
      }
      for (const auto& x : ak)
        for (const auto& q : x.coordinates()) den = lcm_of(den, q.get_den());
      c.alpha[fi].push_back(std::move(ak));
    }
  }
  c.scale = den;
  for (auto& fam : c.alpha)
    for (auto& ak : fam)
      for (auto& x : ak) x = x.scaled(Rational(den));
  return c;
}

std::vector<AlgebraicNumber> coefficient_vector(const SpectralData& spec, const CoefficientData& c, std::size_t e,
                                                unsigned k) {
  const Eigenvalue& ev = spec.eigenvalues.at(e);
  std::vector<AlgebraicNumber> out;
  for (const auto& x : c.alpha.at(ev.family).at(k)) {
    if (x.is_rational())
      out.emplace_back(x.rational_value());
    else
      out.push_back(x.to_algebraic(ev.embedding));
  }
  return out;
}

Rational expansion_value(const SpectralData& spec, const CoefficientData& c, const RatVector& v, unsigned long n) {
  Rational total = 0;
  for (std::size_t fi = 0; fi < spec.families.size(); ++fi) {
    const EigenFamily& f = spec.families[fi];
    if (f.zero()) continue;
    FieldElement tn = FieldElement::generator(f.field).pow(n);
    Rational nk = 1;
    for (unsigned k = 0; k < c.alpha[fi].size(); ++k) {
      FieldElement a = c.apply(fi, k, v);
      if (!a.is_zero()) total += nk * trace_in(f, a * tn);
      nk *= n;
    }
  }
  return total / Rational(c.scale);
}

KVector family_component(const SpectralData& spec, std::size_t f, const RatVector& u) {
  const KMatrix& P = spec.families.at(f).projector;
  KVector out(spec.dim, FieldElement(0));
  for (std::size_t i = 0; i < spec.dim; ++i)
    for (std::size_t j = 0; j < spec.dim; ++j)
      if (u[j] != 0) out[i] += P(i, j) * FieldElement(u[j]);
  return out;
}

std::vector<ClassComponent> project_components(const SpectralData& spec, const RatVector& u) {
  std::vector<KVector> fam;
  for (std::size_t f = 0; f < spec.families.size(); ++f) fam.push_back(family_component(spec, f, u));
  std::vector<ClassComponent> out(spec.classes.size() + 1);
  for (std::size_t i = 0; i <= spec.classes.size(); ++i) out[i].cls = i;
  for (std::size_t e = 0; e < spec.eigenvalues.size(); ++e) {
    const Eigenvalue& ev = spec.eigenvalues[e];
    out[ev.cls].terms.emplace_back(e, fam[ev.family]);
  }
  for (std::size_t f = 0; f < spec.families.size(); ++f)
    if (spec.families[f].zero()) out.back().terms.emplace_back(spec.eigenvalues.size(), fam[f]);
  return out;
}

RatVector sum_of_components(const SpectralData& spec, const RatVector& u) {
  RatVector out(spec.dim, Rational(0));
  for (std::size_t f = 0; f < spec.families.size(); ++f) {
    KVector c = family_component(spec, f, u);
    for (std::size_t i = 0; i < spec.dim; ++i) out[i] += trace_in(spec.families[f], c[i]);
  }
  return out;
}

}  // namespace llterm
