#include <llterm/witness.hpp>

#include <cmath>
#include <queue>
#include <stdexcept>

namespace llterm {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::In: return "IN";
    case Membership::Out: return "OUT";
    case Membership::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(TorusSign s) {
  switch (s) {
    case TorusSign::NonNeg: return "NONNEG";
    case TorusSign::Neg: return "NEG";
    case TorusSign::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
  }
  return "?";
}

std::string to_string(PieceKind k) {
  switch (k) {
    case PieceKind::Zero: return "zero";
    case PieceKind::Ladder: return "ladder";
    case PieceKind::Torus: return "torus";
    case PieceKind::Oscillating: return "oscillating";
  }
  return "?";
}

ExactValue ExactValue::of(const AlgebraicNumber& x) {
  ExactValue v;
  v.zero = x.is_zero();
  v.enclose = [x](long bits) { return x.enclose(bits); };
  v.exact = [x] { return x; };
  return v;
}

ExactValue ExactValue::of(const FieldElement& x, std::size_t embedding) {
  ExactValue v;
  v.zero = x.is_zero();
  v.enclose = [x, embedding](long bits) { return x.evaluate(embedding, bits); };
  v.exact = [x, embedding] {
    return x.is_rational() ? AlgebraicNumber(x.rational_value()) : x.to_algebraic(embedding);
  };
  return v;
}

int embedded_sign(const FieldElement& x, std::size_t embedding) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.rational_value());
  for (long bits = 64; bits <= 4096; bits *= 2) {
    int s = x.evaluate(embedding, bits).real_sign();
    if (s != 0) return s;
  }
  return alg_sign(alg_re(x.to_algebraic(embedding)));
}

namespace {

// Sign of a nonzero real value, refining enclosures, exact as a last resort.
int value_sign(const ExactValue& a) {
  if (a.zero) return 0;
  for (long bits = 64; bits <= 4096; bits *= 2) {
    int s = a.enclose(bits).real_sign();
    if (s != 0) return s;
  }
  return alg_sign(alg_re(a.exact()));
}

bool character_trivial(const TorusGroup& T, std::size_t j) {
  for (std::size_t i = 0; i < T.free_dim(); ++i)
    if (T.exponent(j, i) != 0) return false;
  for (std::size_t i = 0; i < T.rank; ++i)
    if (T.V(j, i) % T.divisors[i] != 0) return false;
  return true;
}

TorusMinResult closed_form(const ExactValue& a, const std::vector<ExactValue>& b, const std::vector<std::size_t>& nz) {
  TorusMinResult r;
  r.method = "closed-form";
  for (long bits = 64; bits <= 1024; bits *= 4) {
    Ball g = a.zero ? Ball::from_integer(0, bits + 4) : a.enclose(bits);
    for (std::size_t j : nz) {
      Ball m = b[j].enclose(bits).abs();
      g = g - m - m;
    }
    r.estimate = g.re_double();
    int s = g.real_sign();
    if (s > 0) {
      r.sign = TorusSign::NonNeg;
      r.lower_bound = g.real_lower();
      return r;
    }
    if (s < 0) {
      r.sign = TorusSign::Neg;
      return r;
    }
  }
  AlgebraicNumber A = a.zero ? AlgebraicNumber(0) : alg_re(a.exact());
  AlgebraicNumber S(0);
  for (std::size_t j : nz) S = alg_add(S, alg_abs(b[j].exact()));
  int c = alg_compare(A, alg_add(S, S));
  r.sign = c >= 0 ? TorusSign::NonNeg : TorusSign::Neg;
  r.boundary = c == 0;
  r.lower_bound = 0;
  r.method = "closed-form-exact";
  return r;
}

AlgebraicNumber unit_at(const Rational& turns) {
  Integer num = turns.get_num(), den = turns.get_den();
  Integer n = num % den;
  if (n < 0) n += den;
  return AlgebraicNumber::root_of_unity(n.get_si(), den.get_si());
}

TorusMinResult finite_points(const ExactValue& a, const std::vector<ExactValue>& b, const std::vector<std::size_t>& nz,
                             const TorusGroup& T) {
  TorusMinResult r;
  r.method = "finite";
  bool first = true;
  for (const auto& m : T.components()) {
    int sign = 0;
    Rational lower;
    double est = 0;
    for (long bits = 64; bits <= 1024 && sign == 0; bits *= 4) {
      Ball g = a.zero ? Ball::from_integer(0, bits + 4) : a.enclose(bits);
      for (std::size_t j : nz) {
        Ball term = (b[j].enclose(bits) * unit_at(T.torsion_phase(j, m)).enclose(bits)).real_part();
        g = g + term + term;
      }
      sign = g.real_sign();
      lower = g.real_lower();
      est = g.re_double();
    }
    if (sign == 0) {
      AlgebraicNumber v = a.zero ? AlgebraicNumber(0) : alg_re(a.exact());
      for (std::size_t j : nz) {
        AlgebraicNumber t = alg_re(alg_mul(b[j].exact(), unit_at(T.torsion_phase(j, m))));
        v = alg_add(v, alg_add(t, t));
      }
      sign = alg_sign(v);
      if (sign == 0) {
        r.boundary = true;
        lower = 0;
      }
    }
    if (sign < 0) {
      r.sign = TorusSign::Neg;
      r.estimate = est;
      return r;
    }
    if (first || lower < r.lower_bound) r.lower_bound = lower;
    if (first || est < r.estimate) r.estimate = est;
    first = false;
  }
  r.sign = TorusSign::NonNeg;
  if (r.boundary) r.lower_bound = 0;
  return r;
}

struct Box {
  double lb;
  std::vector<long> m;
  std::vector<double> center, half;
  bool operator>(const Box& o) const { return lb > o.lb; }
};

TorusMinResult branch_and_bound(const ExactValue& a, const std::vector<ExactValue>& b,
                                const std::vector<std::size_t>& nz, const TorusGroup& T, const TorusOptions& opt) {
  TorusMinResult r;
  r.method = "branch-and-bound";
  const std::size_t F = T.free_dim();
  const double ad = a.zero ? 0.0 : a.enclose(64).re_double();
  std::vector<std::complex<double>> bd;
  double scale = std::fabs(ad);
  for (std::size_t j : nz) {
    Ball x = b[j].enclose(64);
    bd.emplace_back(x.re_double(), x.im_double());
    scale += 2 * std::abs(bd.back());
  }
  std::vector<double> lip(F, 0.0);
  for (std::size_t i = 0; i < F; ++i)
    for (std::size_t q = 0; q < nz.size(); ++q) lip[i] += 4 * M_PI * std::abs(bd[q]) * std::labs(T.exponent(nz[q], i));
  const double err = 1e-12 * scale * (1 + F);
  const double band = opt.margin * scale;
  auto f = [&](const std::vector<long>& m, const std::vector<double>& t) {
    double v = ad;
    for (std::size_t q = 0; q < nz.size(); ++q) {
      double ph = T.phase(nz[q], m, t);
      v += 2 * (bd[q] * std::polar(1.0, 2 * M_PI * ph)).real();
    }
    return v;
  };
  std::priority_queue<Box, std::vector<Box>, std::greater<Box>> pq;
  double ub = INFINITY;
  auto push = [&](const std::vector<long>& m, std::vector<double> c, std::vector<double> h) {
    double v = f(m, c);
    ub = std::min(ub, v);
    double slack = err;
    for (std::size_t i = 0; i < F; ++i) slack += lip[i] * h[i];
    pq.push(Box{v - slack, m, std::move(c), std::move(h)});
  };
  for (const auto& m : T.components()) push(m, std::vector<double>(F, 0.5), std::vector<double>(F, 0.5));
  std::size_t boxes = pq.size();
  while (!pq.empty()) {
    Box bx = pq.top();
    r.estimate = ub;
    if (bx.lb > 0) {
      r.sign = TorusSign::NonNeg;
      r.lower_bound = Rational(bx.lb);
      return r;
    }
    if (ub < -band - err) {
      r.sign = TorusSign::Neg;
      return r;
    }
    if (boxes >= opt.max_boxes || (ub - bx.lb < band && std::fabs(ub) <= band)) {
      r.sign = TorusSign::Inconclusive;
      return r;
    }
    pq.pop();
    std::size_t split = 0;
    for (std::size_t i = 1; i < F; ++i)
      if (lip[i] * bx.half[i] > lip[split] * bx.half[split]) split = i;
    for (int side : {-1, 1}) {
      std::vector<double> c = bx.center, h = bx.half;
      h[split] /= 2;
      c[split] += side * h[split];
      push(bx.m, std::move(c), std::move(h));
      ++boxes;
    }
  }
  r.sign = TorusSign::Inconclusive;
  return r;
}

}  // namespace

TorusMinResult torus_min(const ExactValue& a, const std::vector<ExactValue>& b, const TorusGroup& T,
                         const TorusOptions& opt) {
  if (b.size() != T.s) throw std::invalid_argument("torus_min: coefficient count does not match the torus");
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!b[j].zero) nz.push_back(j);
  if (nz.empty()) {
    TorusMinResult r;
    r.method = "constant";
    int s = value_sign(a);
    r.sign = s >= 0 ? TorusSign::NonNeg : TorusSign::Neg;
    r.boundary = s == 0;
    if (s > 0) {
      for (long bits = 64;; bits *= 2) {
        Ball x = a.enclose(bits);
        if (x.real_sign() > 0) {
          r.lower_bound = x.real_lower();
          r.estimate = x.re_double();
          break;
        }
      }
    }
    return r;
  }
  bool all_nontrivial = true;
  for (std::size_t j : nz) all_nontrivial = all_nontrivial && !character_trivial(T, j);
  if (all_nontrivial && value_sign(a) <= 0) {
    // the mean over T is a, and a nonconstant function dips below its mean
    TorusMinResult r;
    r.method = "mean";
    r.sign = TorusSign::Neg;
    r.estimate = a.zero ? 0.0 : a.enclose(64).re_double();
    return r;
  }
  if (T.rank == 0) return closed_form(a, b, nz);
  if (T.free_dim() == 0) return finite_points(a, b, nz, T);
  return branch_and_bound(a, b, nz, T, opt);
}

EntPiece classify_class(const SpectralData& spec, std::size_t cls) {
  const ModulusClass& c = spec.classes.at(cls);
  EntPiece p;
  p.cls = cls;
  p.rho = c.positive_real;
  p.complex_members = c.complex_upper;
  p.top_level = c.max_index - 1;
  if (!c.positive_real) {
    p.tag = CaseTag::II;
    return p;
  }
  p.rho_index = spec.eigenvalues[*c.positive_real].index;
  p.tag = CaseTag::III;
  for (std::size_t e : c.complex_upper)
    if (spec.eigenvalues[e].index > 1) p.tag = CaseTag::I;
  return p;
}

std::vector<RatVector> vanishing_rows(const SpectralData& spec, const CoefficientData& c, std::size_t family,
                                      unsigned level) {
  std::vector<RatVector> rows;
  const int e = spec.families[family].field->degree();
  const KVector& a = c.alpha[family][level];
  for (int coord = 0; coord < e; ++coord) {
    RatVector r(spec.dim);
    bool nonzero = false;
    for (std::size_t j = 0; j < spec.dim; ++j) {
      r[j] = a[j].value().coeff(coord);
      nonzero = nonzero || r[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(r));
  }
  return rows;
}

bool ZeroSet::contains(const RatVector& v) const {
  for (const auto& r : equations) {
    Rational s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += r[j] * v[j];
    if (s != 0) return false;
  }
  return true;
}

ZeroSet class_zero_set(const SpectralData& spec, const CoefficientData& c, std::size_t cls) {
  ZeroSet z;
  std::vector<bool> seen(spec.families.size(), false);
  for (std::size_t e : spec.classes.at(cls).members) {
    std::size_t f = spec.eigenvalues[e].family;
    if (seen[f]) continue;
    seen[f] = true;
    for (unsigned k = 0; k < c.alpha[f].size(); ++k)
      for (auto& r : vanishing_rows(spec, c, f, k)) z.equations.push_back(std::move(r));
  }
  return z;
}

ZeroSet zero_set(const SpectralData& spec, const CoefficientData& c) {
  ZeroSet z;
  for (std::size_t f = 0; f < spec.families.size(); ++f)
    for (unsigned k = 0; k < c.alpha[f].size(); ++k)
      for (auto& r : vanishing_rows(spec, c, f, k)) z.equations.push_back(std::move(r));
  return z;
}

namespace {

bool family_vanishes(const std::vector<std::vector<FieldElement>>& vals, std::size_t f) {
  for (const auto& x : vals[f])
    if (!x.is_zero()) return false;
  return true;
}

bool class_vanishes(const SpectralData& spec, const std::vector<std::vector<FieldElement>>& vals, std::size_t cls) {
  for (std::size_t e : spec.classes[cls].members)
    if (!family_vanishes(vals, spec.eigenvalues[e].family)) return false;
  return true;
}

}  // namespace

std::optional<std::size_t> dominant_component(const SpectralData& spec, const CoefficientData& c, const RatVector& v) {
  auto vals = c.apply_all(v);
  for (std::size_t i = 0; i < spec.classes.size(); ++i)
    if (!class_vanishes(spec, vals, i)) return i;
  return std::nullopt;
}

WitnessSet WitnessSet::build(const LoopProgram& p, const WitnessConfig& cfg) {
  p.validate();
  auto red = std::make_shared<ReducedLoop>();
  red->original = p;
  auto [h, hcert] = homogenize(p);
  red->homogenized = h;
  red->chain.push_back(hcert);
  red->L = compute_L(h.A);
  red->AL = h.A.pow(red->L);
  red->spec = eigendecompose(red->AL);
  red->support = check_supported(red->spec, h.dim);
  for (const auto& row : split_rows(h)) red->chain.push_back(row.provenance.back());
  red->chain.push_back(depower(h, red->L).second);

  WitnessSet w;
  w.cfg_ = cfg;
  w.cache_ = std::make_shared<Cache>();
  const std::size_t D = h.dim;
  RationalMatrix Ah = to_rational(h.A);
  for (std::size_t r = 0; r < h.B.rows(); ++r) {
    RatVector b(D);
    for (std::size_t j = 0; j < D; ++j) b[j] = h.B(r, j);
    for (std::size_t ph = 0; ph < red->L; ++ph) {
      GuardComponent gc;
      gc.row = r;
      gc.phase = ph;
      gc.b = b;
      gc.coeffs = coefficient_vectors(red->spec, b);
      w.comps_.push_back(std::move(gc));
      // b^T A_h
      RatVector nb(D, Rational(0));
      for (std::size_t j = 0; j < D; ++j)
        for (std::size_t i = 0; i < D; ++i) nb[j] += b[i] * Ah(i, j);
      b = std::move(nb);
    }
  }
  for (std::size_t i = 0; i < red->spec.classes.size(); ++i) w.pieces_.push_back(classify_class(red->spec, i));
  w.red_ = std::move(red);
  return w;
}

const LevelTorus& WitnessSet::torus(std::size_t cls, unsigned level) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(cls, level);
  auto it = cache_->tori.find(key);
  if (it != cache_->tori.end()) return *it->second;
  auto t = std::make_shared<LevelTorus>();
  const SpectralData& s = spec();
  const EntPiece& piece = pieces_.at(cls);
  const AlgebraicNumber& rho = s.eigenvalues.at(*piece.rho).value;
  for (std::size_t e : piece.complex_members)
    if (s.eigenvalues[e].index > level) {
      t->members.push_back(e);
      t->mu.push_back(alg_div(s.eigenvalues[e].value, rho));
    }
  t->lattice = relation_lattice(t->mu, cfg_.relations);
  t->group = torus_group(t->lattice);
  cache_->tori[key] = t;
  return *t;
}

PieceEval WitnessSet::evaluate(std::size_t comp, const RatVector& v) const {
  const SpectralData& s = spec();
  const CoefficientData& c = comps_.at(comp).coeffs;
  auto vals = c.apply_all(v);
  PieceEval out;
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    if (class_vanishes(s, vals, i)) continue;
    const EntPiece& piece = pieces_[i];
    out.cls = i;
    if (!piece.rho) {
      out.kind = PieceKind::Oscillating;
      out.result = Membership::Out;
      out.note = "dominant class has no positive real eigenvalue";
      return out;
    }
    // highest power of n with a nonzero coefficient in this class
    int level = -1;
    for (int k = static_cast<int>(piece.top_level); k >= 0 && level < 0; --k)
      for (std::size_t e : s.classes[i].members) {
        const Eigenvalue& ev = s.eigenvalues[e];
        if (ev.index > static_cast<unsigned>(k) && !vals[ev.family][k].is_zero()) {
          level = k;
          break;
        }
      }
    out.level = static_cast<unsigned>(level);
    const Eigenvalue& rho = s.eigenvalues[*piece.rho];
    FieldElement a = rho.index > out.level ? vals[rho.family][out.level] : FieldElement(0);
    std::vector<std::size_t> live;
    for (std::size_t e : piece.complex_members) {
      const Eigenvalue& ev = s.eigenvalues[e];
      if (ev.index > out.level && !vals[ev.family][out.level].is_zero()) live.push_back(e);
    }
    if (live.empty()) {
      out.kind = PieceKind::Ladder;
      out.result = embedded_sign(a, rho.embedding) > 0 ? Membership::In : Membership::Out;
      return out;
    }
    out.kind = PieceKind::Torus;
    const LevelTorus& lt = torus(i, out.level);
    std::vector<ExactValue> bs;
    for (std::size_t e : lt.members) {
      const Eigenvalue& ev = s.eigenvalues[e];
      bs.push_back(ExactValue::of(vals[ev.family][out.level], ev.embedding));
    }
    out.torus = torus_min(ExactValue::of(a, rho.embedding), bs, lt.group, cfg_.torus);
    out.result = out.torus.sign == TorusSign::NonNeg ? Membership::In
                 : out.torus.sign == TorusSign::Neg  ? Membership::Out
                                                     : Membership::Inconclusive;
    return out;
  }
  out.kind = PieceKind::Zero;
  out.result = Membership::In;
  return out;
}

Membership WitnessSet::membership_homogeneous(const RatVector& v) const {
  if (!supported()) return Membership::Inconclusive;
  Membership m = Membership::In;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    Membership r = evaluate(i, v).result;
    if (r == Membership::Out) return r;
    if (r == Membership::Inconclusive) m = r;
  }
  return m;
}

RatVector WitnessSet::lift(const RatVector& u) const {
  RatVector v(u);
  v.emplace_back(1);
  return v;
}

Membership WitnessSet::membership(const RatVector& u) const { return membership_homogeneous(lift(u)); }

Membership WitnessSet::membership(const IntVector& u) const {
  RatVector r;
  for (const auto& x : u) r.emplace_back(x);
  return membership(r);
}

std::vector<PieceEval> WitnessSet::explain(const RatVector& u) const {
  std::vector<PieceEval> out;
  RatVector v = lift(u);
  for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(evaluate(i, v));
  return out;
}

}  // namespace llterm
