#include <llterm/decision.hpp>
#include <llterm/lattice.hpp>
#include <llterm/simulator.hpp>

#include <mpfr.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace llterm {

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "certified";
    case CertStatus::Refuted: return "refuted";
    case CertStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Empty: return "empty";
    case SearchStatus::Exhausted: return "exhausted";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::NonTerminating: return "NONTERMINATING";
    case Outcome::Terminates: return "TERMINATES";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

RatVector to_rat(const IntVector& u) {
  RatVector r;
  r.reserve(u.size());
  for (const auto& x : u) r.emplace_back(x);
  return r;
}

std::string decimal(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// RAII wrapper, rounding chosen per operation.
struct Mp {
  mpfr_t x;
  Mp() { mpfr_init2(x, 128); }
  ~Mp() { mpfr_clear(x); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
};

void set_q(Mp& m, const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(m.x, q.get_mpq_t(), rnd); }

Rational abs_upper(const FieldElement& x, std::size_t emb) {
  if (x.is_zero()) return 0;
  return x.evaluate(emb, 64).abs_upper();
}

// Least q >= start with C1/q + C2 q^e r^q < delta, where the bound decreases from start on.
std::optional<unsigned long> crossover(const Rational& c1, const Rational& c2, long e, const Rational& r,
                                       const Rational& delta, unsigned long start, unsigned long cap) {
  Mp C1, C2, R, Del;
  set_q(C1, c1, MPFR_RNDU);
  set_q(C2, c2, MPFR_RNDU);
  set_q(R, r, MPFR_RNDU);
  set_q(Del, delta, MPFR_RNDD);
  auto ok = [&](unsigned long q) {
    Mp t1, t2, t3, qq;
    mpfr_set_ui(qq.x, q, MPFR_RNDN);  // exact for 128 bits
    mpfr_div_ui(t1.x, C1.x, q, MPFR_RNDU);
    if (c2 != 0) {
      mpfr_pow_si(t2.x, qq.x, e, MPFR_RNDU);
      mpfr_pow_ui(t3.x, R.x, q, MPFR_RNDU);
      mpfr_mul(t2.x, t2.x, t3.x, MPFR_RNDU);
      mpfr_mul(t2.x, t2.x, C2.x, MPFR_RNDU);
      mpfr_add(t1.x, t1.x, t2.x, MPFR_RNDU);
    }
    return mpfr_less_p(t1.x, Del.x) != 0;
  };
  if (ok(start)) return start;
  unsigned long lo = start, hi = start;
  for (;;) {
    if (hi > cap) return std::nullopt;
    lo = hi;
    hi = std::max(2 * hi, hi + 1);
    if (ok(hi)) break;
  }
  while (hi - lo > 1) {
    unsigned long mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

// Eventual sign data for one guard component.
RowCertificate certify_component(const WitnessSet& w, std::size_t comp, const RatVector& v, unsigned long cap,
                                 bool& inconclusive, bool& audit_stable) {
  const SpectralData& s = w.spec();
  const GuardComponent& gc = w.components()[comp];
  RowCertificate rc;
  rc.row = gc.row;
  rc.phase = gc.phase;
  const unsigned long D = std::max<unsigned long>(s.threshold(), 1);
  PieceEval e = w.evaluate(comp, v);
  rc.kind = e.kind;
  rc.cls = e.cls;
  rc.level = e.level;
  if (e.kind == PieceKind::Zero) {
    rc.method = "identically zero";
    rc.n0 = D;
    return rc;
  }
  const ModulusClass& cls = s.classes[e.cls];
  rc.modulus = decimal(std::sqrt(cls.modulus_squared.enclose(64).re_double()));
  if (e.kind == PieceKind::Torus && e.torus.method != "mean") {
    const LevelTorus& lt = w.torus(e.cls, e.level);
    audit_stable = audit_stable && lt.lattice.audit_stable && !lt.lattice.capped;
  }
  if (e.result == Membership::Out) {
    rc.sign = -1;
    rc.method = e.kind == PieceKind::Oscillating ? "dominant class without positive real eigenvalue"
                : e.kind == PieceKind::Ladder   ? "negative leading coefficient"
                                                : "torus minimum negative (" + e.torus.method + ")";
    return rc;
  }
  if (e.result == Membership::Inconclusive) {
    rc.method = "torus minimum undecided";
    inconclusive = true;
    return rc;
  }
  auto vals = gc.coeffs.apply_all(v);
  const Eigenvalue& rho = s.eigenvalues[*w.pieces()[e.cls].rho];
  if (e.kind == PieceKind::Ladder) {
    const FieldElement& a = vals[rho.family][e.level];
    for (long bits = 64;; bits *= 2) {
      Ball b = a.evaluate(rho.embedding, bits);
      if (b.real_sign() > 0) {
        rc.delta = b.real_lower();
        break;
      }
    }
    rc.method = "ladder";
  } else {
    rc.delta = e.torus.lower_bound;
    rc.method = "torus " + e.torus.method;
  }
  Rational c1 = 0, c2 = 0;
  long k2 = -1;
  for (std::size_t m : cls.members) {
    const Eigenvalue& ev = s.eigenvalues[m];
    for (unsigned k = 0; k < e.level && k < ev.index; ++k) c1 += abs_upper(vals[ev.family][k], ev.embedding);
  }
  for (std::size_t j = e.cls + 1; j < s.classes.size(); ++j)
    for (std::size_t m : s.classes[j].members) {
      const Eigenvalue& ev = s.eigenvalues[m];
      for (unsigned k = 0; k < ev.index; ++k) {
        Rational b = abs_upper(vals[ev.family][k], ev.embedding);
        if (b != 0) {
          c2 += b;
          k2 = std::max<long>(k2, k);
        }
      }
    }
  rc.tail_c1 = c1;
  rc.tail_c2 = c2;
  rc.sign = 1;
  if (rc.delta <= 0) {
    if (c1 == 0 && c2 == 0) {
      rc.n0 = D;
      rc.method += ", boundary with empty tail";
      return rc;
    }
    rc.sign = 0;
    rc.method += ": minimum touches zero and the tail does not vanish";
    inconclusive = true;
    return rc;
  }
  Rational r = 0;
  long ex = 0;
  unsigned long start = D;
  if (c2 != 0) {
    const AlgebraicNumber& lower = s.classes[e.cls + 1].modulus_squared;
    Rational r2;
    for (long bits = 64; bits <= 2048; bits *= 2) {
      r2 = lower.enclose(bits).real_upper() / cls.modulus_squared.enclose(bits).real_lower();
      if (r2 < 1) break;
    }
    if (r2 >= 1) {
      rc.sign = 0;
      rc.method += ": modulus ratio not separated";
      inconclusive = true;
      return rc;
    }
    Mp R2, Rt;
    set_q(R2, r2, MPFR_RNDU);
    mpfr_sqrt(Rt.x, R2.x, MPFR_RNDU);
    // dyadic upper bound of the ratio, kept exact from here on
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, Rt.x);
    r = Rational(q);
    mpq_clear(q);
    ex = k2 - static_cast<long>(e.level);
    if (ex > 0) {
      Mp lg, one;
      mpfr_set_q(lg.x, r.get_mpq_t(), MPFR_RNDU);
      mpfr_log(lg.x, lg.x, MPFR_RNDU);  // log r < 0, rounded towards zero
      mpfr_neg(lg.x, lg.x, MPFR_RNDD);
      mpfr_ui_div(one.x, static_cast<unsigned long>(ex), lg.x, MPFR_RNDU);
      mpfr_ceil(one.x, one.x);
      start = std::max(start, static_cast<unsigned long>(mpfr_get_ui(one.x, MPFR_RNDU)));
    }
    rc.ratio = decimal(r.get_d());
  }
  auto n0 = crossover(c1, c2, ex, r, rc.delta, start, cap);
  if (!n0) {
    rc.sign = 0;
    rc.method += ": crossover beyond the prefix cap";
    inconclusive = true;
    return rc;
  }
  rc.n0 = *n0;
  return rc;
}

}  // namespace

PointCertificate certify_point(const WitnessSet& w, const IntVector& u, const DecisionConfig& cfg) {
  PointCertificate pc;
  pc.point = u;
  const ReducedLoop& red = w.reduced();
  const LoopProgram& p = red.original;
  pc.L = red.L;
  if (!w.supported()) {
    pc.reason = "unsupported fragment: " + red.support.reason;
    return pc;
  }
  const unsigned long L = red.L;
  const unsigned long m_max = cfg.m_max.value_or(2 * p.dim * (L + 1));
  const unsigned long cap = std::max<unsigned long>(cfg.max_prefix / L, 1);
  RatVector v = w.lift(to_rat(u));
  bool inconclusive = false, refuted = false;
  unsigned long n0 = 1;
  for (std::size_t c = 0; c < w.components().size(); ++c) {
    RowCertificate rc = certify_component(w, c, v, cap, inconclusive, pc.lattice_audit_stable);
    refuted = refuted || rc.sign < 0;
    n0 = std::max(n0, rc.n0);
    pc.rows.push_back(std::move(rc));
  }
  if (refuted) {
    pc.status = CertStatus::Refuted;
    // observed violations, continued until one lies past every tested restart
    IntVector x = u;
    const unsigned long horizon = std::max(cfg.refutation_horizon, m_max + 1);
    for (unsigned long n = 0; n <= horizon; ++n) {
      if (violated_row(p, x)) {
        if (pc.failures.size() < 8) pc.failures.push_back(n);
        if (n >= m_max) {
          if (pc.failures.back() != n) pc.failures.push_back(n);
          pc.simulated = n + 1;
          break;
        }
      }
      pc.simulated = n + 1;
      x = step(p, x);
    }
    pc.reason = pc.failures.empty() || pc.failures.back() < m_max
                    ? "asymptotic refutation; no violation observed beyond the restart horizon"
                    : "guard violated beyond every restart up to m_max; the dominant term recurs negative";
    return pc;
  }
  if (inconclusive) {
    pc.reason = "some guard component has no certified eventual sign";
    return pc;
  }
  // every component is non-negative from depowered step n0 on
  const unsigned long N = L * n0;
  IntVector x = u;
  std::optional<unsigned long> last;
  std::vector<IntVector> states;
  for (unsigned long n = 0; n < N; ++n) {
    if (violated_row(p, x)) last = n;
    states.push_back(x);
    x = step(p, x);
  }
  states.push_back(x);
  pc.simulated = N;
  pc.m = last ? *last + 1 : 0;
  pc.nt_point = states[pc.m];
  pc.status = CertStatus::Certified;
  pc.reason = "guard holds from step " + std::to_string(pc.m) + " on";
  return pc;
}

PointCertificate certify_point(const LoopProgram& p, const IntVector& u, const DecisionConfig& cfg) {
  return certify_point(WitnessSet::build(p, cfg.witness), u, cfg);
}

namespace {

// Strict leading-coefficient condition alpha . v > 0 under the embedding of rho.
struct StrictRow {
  bool rational = true;
  RatVector row;       // rational case
  const KVector* coeffs = nullptr;
  std::size_t embedding = 0;
  std::string label;
};

struct Pattern {
  std::vector<RatVector> eq;
  std::optional<StrictRow> strict;
  bool torus = false;
  std::string label;
};

std::vector<Pattern> component_patterns(const WitnessSet& w, std::size_t comp) {
  const SpectralData& s = w.spec();
  const CoefficientData& c = w.components()[comp].coeffs;
  std::vector<Pattern> out;
  std::vector<RatVector> prefix;
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    const EntPiece& piece = w.pieces()[i];
    std::set<std::size_t> fams;
    for (std::size_t m : s.classes[i].members) fams.insert(s.eigenvalues[m].family);
    if (piece.rho) {
      const Eigenvalue& rho = s.eigenvalues[*piece.rho];
      for (unsigned k = 0; k < rho.index; ++k) {
        Pattern pt;
        pt.eq = prefix;
        for (std::size_t f : fams)
          for (unsigned j = k + 1; j < c.alpha[f].size(); ++j)
            for (auto& r : vanishing_rows(s, c, f, j)) pt.eq.push_back(std::move(r));
        StrictRow sr;
        const KVector& a = c.alpha[rho.family][k];
        if (s.families[rho.family].field->degree() == 1) {
          for (const auto& x : a) sr.row.push_back(x.value().coeff(0));
        } else {
          sr.rational = false;
          sr.coeffs = &a;
          sr.embedding = rho.embedding;
        }
        sr.label = "class " + std::to_string(i) + " level " + std::to_string(k);
        pt.strict = std::move(sr);
        for (std::size_t m : piece.complex_members)
          if (s.eigenvalues[m].index > k) pt.torus = true;
        pt.label = "dominant class " + std::to_string(i) + " at n^" + std::to_string(k);
        out.push_back(std::move(pt));
      }
    }
    for (auto& r : class_zero_set(s, c, i).equations) prefix.push_back(std::move(r));
  }
  Pattern z;
  z.eq = std::move(prefix);
  z.label = "zero";
  out.push_back(std::move(z));
  return out;
}

struct Node {
  std::vector<RatVector> eq;
  std::vector<RatVector> strict;
  std::vector<const StrictRow*> irrational;
  bool torus = false;
};

enum class Prune { None, Equalities, Constant, Polyhedron };

struct Reduced {
  IntegerCoset coset;
  std::vector<LinearConstraint> cons;
};

bool all_zero(const RatVector& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

class Searcher {
 public:
  Searcher(const WitnessSet& w, const DecisionConfig& cfg) : w_(w), cfg_(cfg), d_(w.reduced().original.dim) {
    for (std::size_t c = 0; c < w.components().size(); ++c) patterns_.push_back(component_patterns(w, c));
  }

  SearchResult run() {
    fast_path();
    if (res_.status == SearchStatus::Found) return finish();
    Node root;
    dfs(root, 0);
    return finish();
  }

 private:
  const WitnessSet& w_;
  const DecisionConfig& cfg_;
  std::size_t d_;
  std::vector<std::vector<Pattern>> patterns_;
  SearchResult res_;
  std::set<IntVector> tested_;
  std::set<std::string> seen_;
  bool exhausted_ = false, bounded_inconclusive_ = false;
  std::vector<std::string> open_;

  SearchResult finish() {
    SearchResult r = std::move(res_);
    if (r.status == SearchStatus::Found) return r;
    if (exhausted_ || !open_.empty() || bounded_inconclusive_) {
      r.status = SearchStatus::Exhausted;
      r.reason = r.stats.inconclusive_points > 0 || bounded_inconclusive_ ? "torus-inconclusive" : "radius-exhausted";
      if (exhausted_) r.proof.push_back("search tree truncated at " + std::to_string(cfg_.node_limit) + " nodes");
      for (auto& o : open_) r.proof.push_back(std::move(o));
      return r;
    }
    r.status = SearchStatus::Empty;
    const auto& s = r.stats;
    r.proof.push_back(std::to_string(s.leaves + s.pruned_equalities + s.pruned_constant + s.pruned_polyhedron) +
                      " dominance patterns examined");
    if (s.pruned_equalities)
      r.proof.push_back(std::to_string(s.pruned_equalities) + " with no integer solution of the vanishing equations");
    if (s.pruned_constant)
      r.proof.push_back(std::to_string(s.pruned_constant) + " with a leading coefficient constant and non-positive");
    if (s.pruned_polyhedron)
      r.proof.push_back(std::to_string(s.pruned_polyhedron) + " with infeasible strict inequalities (Fourier-Motzkin)");
    if (s.pruned_bounded)
      r.proof.push_back(std::to_string(s.pruned_bounded) + " bounded regions enumerated without a witness");
    return r;
  }

  // true when a certified witness was found
  bool test(const IntVector& u) {
    if (!tested_.insert(u).second) return false;
    ++res_.stats.candidates;
    Membership m = w_.membership(u);
    if (m == Membership::Inconclusive) ++res_.stats.inconclusive_points;
    if (m != Membership::In) return false;
    PointCertificate pc = certify_point(w_, u, cfg_);
    if (pc.status != CertStatus::Certified) {
      ++res_.stats.inconclusive_points;
      return false;
    }
    res_.status = SearchStatus::Found;
    res_.point = u;
    res_.certificate = std::move(pc);
    return true;
  }

  void fast_path() {
    long r = cfg_.box_radius.value_or(d_ <= 1 ? 16 : d_ == 2 ? 5 : d_ == 3 ? 2 : 1);
    Box box(d_, {-r, r});
    auto pts = box_points(box);
    std::stable_sort(pts.begin(), pts.end(), [](const IntVector& a, const IntVector& b) {
      Integer na = 0, nb = 0;
      for (const auto& x : a) na = std::max<Integer>(na, abs(x));
      for (const auto& x : b) nb = std::max<Integer>(nb, abs(x));
      return na < nb;
    });
    for (const auto& u : pts)
      if (test(u)) return;
    res_.stats.radius = r;
    for (const auto& e : rays())
      for (long R : cfg_.radius_schedule)
        for (long sgn : {1L, -1L}) {
          IntVector u(d_);
          for (std::size_t i = 0; i < d_; ++i) u[i] = sgn * R * e[i];
          if (test(u)) return;
        }
  }

  // Generalized eigenvectors of positive rational eigenvalues, restricted to the
  // original coordinates: far along them the real dominant term outweighs the rest.
  std::vector<IntVector> rays() const {
    std::vector<IntVector> out;
    const SpectralData& s = w_.spec();
    const RationalMatrix AL = to_rational(w_.reduced().AL);
    for (const auto& c : s.classes) {
      if (!c.positive_real) continue;
      const Eigenvalue& ev = s.eigenvalues[*c.positive_real];
      if (!ev.value.is_rational()) continue;
      RationalMatrix M = AL;
      for (std::size_t i = 0; i < M.rows(); ++i) M(i, i) -= ev.value.rational_value();
      RationalMatrix P = M.pow(ev.index);
      auto sol = solve_linear_exact(P, RatVector(P.rows(), Rational(0)));
      for (const auto& k : sol.kernel) {
        RatVector head(k.begin(), k.begin() + d_);
        if (all_zero(head)) continue;
        out.push_back(clear_denominators(head));
      }
    }
    return out;
  }

  std::pair<Prune, Reduced> check(const Node& n) const {
    Reduced red;
    const std::size_t D = d_ + 1;
    if (n.eq.empty()) {
      red.coset.x0 = IntVector(d_, Integer(0));
      red.coset.basis = IntMatrix(d_, d_);
      for (std::size_t i = 0; i < d_; ++i) red.coset.basis(i, i) = 1;
    } else {
      RationalMatrix A(n.eq.size(), d_);
      RatVector b(n.eq.size());
      for (std::size_t i = 0; i < n.eq.size(); ++i) {
        for (std::size_t j = 0; j < d_; ++j) A(i, j) = n.eq[i][j];
        b[i] = -n.eq[i][D - 1];
      }
      auto cs = integer_solutions(A, b);
      if (!cs) return {Prune::Equalities, red};
      red.coset = std::move(*cs);
    }
    const std::size_t f = red.coset.dim();
    for (const auto& r : n.strict) {
      LinearConstraint lc;
      lc.strict = true;
      lc.a.assign(f, Rational(0));
      lc.b = r[D - 1];
      for (std::size_t j = 0; j < d_; ++j) {
        lc.b += r[j] * red.coset.x0[j];
        for (std::size_t t = 0; t < f; ++t) lc.a[t] += r[j] * red.coset.basis(j, t);
      }
      if (lc.constant() && lc.b <= 0) return {Prune::Constant, red};
      red.cons.push_back(std::move(lc));
    }
    for (const StrictRow* sr : n.irrational) {
      const KVector& a = *sr->coeffs;
      bool constant = true;
      for (std::size_t t = 0; t < f && constant; ++t) {
        FieldElement g(0);
        for (std::size_t j = 0; j < d_; ++j) g += a[j].scaled(Rational(red.coset.basis(j, t)));
        constant = g.is_zero();
      }
      if (!constant) continue;
      FieldElement c0 = a[D - 1];
      for (std::size_t j = 0; j < d_; ++j) c0 += a[j].scaled(Rational(red.coset.x0[j]));
      if (embedded_sign(c0, sr->embedding) <= 0) return {Prune::Constant, red};
    }
    if (!red.cons.empty() && !fourier_motzkin(red.cons, f).feasible) return {Prune::Polyhedron, red};
    return {Prune::None, std::move(red)};
  }

  static std::string key(std::size_t depth, const Node& n) {
    std::ostringstream os;
    os << depth << '|' << n.torus << '|';
    std::set<std::string> eqs, st;
    for (const auto& r : n.eq) {
      std::ostringstream e;
      for (const auto& x : clear_denominators(r)) e << x << ',';
      eqs.insert(e.str());
    }
    for (const auto& r : n.strict) {
      std::ostringstream e;
      for (const auto& x : clear_denominators(r)) e << x << ',';
      st.insert(e.str());
    }
    for (const auto& e : eqs) os << e << ';';
    os << '|';
    for (const auto& e : st) os << e << ';';
    os << '|';
    for (const auto* p : n.irrational) os << p << ';';
    return os.str();
  }

  void dfs(const Node& n, std::size_t depth) {
    if (res_.status == SearchStatus::Found || exhausted_) return;
    if (!seen_.insert(key(depth, n)).second) return;
    if (++res_.stats.nodes > cfg_.node_limit) {
      exhausted_ = true;
      return;
    }
    auto [pr, red] = check(n);
    switch (pr) {
      case Prune::Equalities: ++res_.stats.pruned_equalities; return;
      case Prune::Constant: ++res_.stats.pruned_constant; return;
      case Prune::Polyhedron: ++res_.stats.pruned_polyhedron; return;
      case Prune::None: break;
    }
    if (depth == patterns_.size()) {
      leaf(n, red);
      return;
    }
    for (const auto& pt : patterns_[depth]) {
      Node child = n;
      for (const auto& r : pt.eq)
        if (!all_zero(r)) child.eq.push_back(r);
      if (pt.strict) {
        if (pt.strict->rational)
          child.strict.push_back(pt.strict->row);
        else
          child.irrational.push_back(&*pt.strict);
      }
      child.torus = child.torus || pt.torus;
      dfs(child, depth + 1);
      if (res_.status == SearchStatus::Found || exhausted_) return;
    }
  }

  IntVector point(const Reduced& red, const IntVector& t) const { return red.coset.point(t); }

  void leaf(const Node& n, const Reduced& red) {
    ++res_.stats.leaves;
    const std::size_t f = red.coset.dim();
    if (f == 0) {
      if (test(red.coset.x0)) return;
      if (w_.membership(red.coset.x0) == Membership::Inconclusive) bounded_inconclusive_ = true;
      ++res_.stats.pruned_bounded;
      return;
    }
    // bounded relaxation: enumerate every lattice point
    std::vector<Interval> ranges;
    bool bounded = !red.cons.empty();
    Integer count = 1;
    for (std::size_t i = 0; i < f && bounded; ++i) {
      ranges.push_back(variable_range(red.cons, f, i));
      auto c = ranges.back().integer_count();
      if (!c) bounded = false;
      else count *= *c;
    }
    if (bounded && count <= 20000) {
      Box box;
      for (const auto& iv : ranges) {
        if (*iv.integer_count() == 0) {
          ++res_.stats.pruned_bounded;
          return;
        }
        box.emplace_back(iv.least_integer()->get_si(), iv.greatest_integer()->get_si());
      }
      bool inconclusive = false;
      for (const auto& t : box_points(box)) {
        RatVector tr = to_rat(t);
        if (!std::all_of(red.cons.begin(), red.cons.end(), [&](const LinearConstraint& c) { return c.holds(tr); }))
          continue;
        IntVector u = point(red, t);
        if (test(u)) return;
        inconclusive = inconclusive || w_.membership(u) == Membership::Inconclusive;
      }
      if (inconclusive) bounded_inconclusive_ = true;
      ++res_.stats.pruned_bounded;
      return;
    }
    Elimination el = fourier_motzkin(red.cons, f);
    for (long R : cfg_.radius_schedule) {
      res_.stats.radius = std::max(res_.stats.radius, R);
      std::vector<IntVector> cands;
      IntVector t(f);
      RatVector prefix(f);
      generate(el, 0, R, t, prefix, cands);
      for (const auto& tc : cands)
        if (test(point(red, tc))) return;
    }
    ++res_.stats.open_leaves;
    std::ostringstream os;
    os << "open region: " << red.cons.size() << " rational strict constraints, " << n.irrational.size()
       << " irrational, " << f << " free integer parameters" << (n.torus ? ", torus condition" : "");
    if (open_.size() < 16) open_.push_back(os.str());
  }

  // Integer back-substitution through the elimination stages.
  void generate(const Elimination& el, std::size_t k, long R, IntVector& t, RatVector& prefix,
                std::vector<IntVector>& out) const {
    if (out.size() >= 64) return;
    if (k == el.n) {
      out.push_back(t);
      return;
    }
    Interval iv = el.range(k, prefix);
    if (iv.empty()) return;
    std::vector<Integer> choice;
    auto lo = iv.least_integer(), hi = iv.greatest_integer();
    if (lo && hi) {
      if (*lo > *hi) return;
      choice = {*lo, *hi, floor_of(Rational(*lo + *hi, 2))};
      if (*hi - *lo > 2 * R) choice.push_back(*lo + R), choice.push_back(*hi - R);
    } else if (lo) {
      choice = {*lo + R, *lo, *lo + 1};
    } else if (hi) {
      choice = {*hi - R, *hi, *hi - 1};
    } else {
      choice = {Integer(0), Integer(R), Integer(-R)};
    }
    std::sort(choice.begin(), choice.end());
    choice.erase(std::unique(choice.begin(), choice.end()), choice.end());
    for (const auto& c : choice) {
      t[k] = c;
      prefix[k] = c;
      generate(el, k + 1, R, t, prefix, out);
    }
  }
};

}  // namespace

SearchResult find_integer_point(const WitnessSet& w, const DecisionConfig& cfg) {
  if (!w.supported()) {
    SearchResult r;
    r.status = SearchStatus::Exhausted;
    r.reason = "unsupported-fragment";
    r.proof.push_back(w.reduced().support.reason);
    return r;
  }
  return Searcher(w, cfg).run();
}

Verdict analyze(const WitnessSet& w, const DecisionConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  const ReducedLoop& red = w.reduced();
  v.audit.L = red.L;
  v.audit.m_max = cfg.m_max.value_or(2 * red.original.dim * (red.L + 1));
  if (!w.supported()) {
    v.outcome = Outcome::Unknown;
    v.reason = "unsupported-fragment";
    v.evidence.push_back(red.support.reason);
  } else {
    SearchResult sr = find_integer_point(w, cfg);
    v.audit.search = sr.stats;
    v.audit.radius = sr.stats.radius;
    v.evidence = sr.proof;
    switch (sr.status) {
      case SearchStatus::Found:
        v.outcome = Outcome::NonTerminating;
        v.witness = sr.point;
        v.certificate = std::move(sr.certificate);
        break;
      case SearchStatus::Empty: v.outcome = Outcome::Terminates; break;
      case SearchStatus::Exhausted:
        v.outcome = Outcome::Unknown;
        v.reason = sr.reason;
        break;
    }
    // relation lattices behind every torus condition
    const SpectralData& s = w.spec();
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
      const EntPiece& pc = w.pieces()[i];
      if (!pc.rho || pc.complex_members.empty()) continue;
      for (unsigned k = 0; k <= pc.top_level; ++k) {
        const LevelTorus& lt = w.torus(i, k);
        if (lt.members.empty()) continue;
        if (!lt.lattice.audit_stable || lt.lattice.capped) {
          v.audit.lattice_stable = false;
          v.audit.flags.push_back("relation lattice of class " + std::to_string(i) + " level " + std::to_string(k) +
                                  (lt.lattice.capped ? " hit the enumeration cap" : " changed under the audit"));
        }
      }
    }
    if (v.certificate && !v.certificate->lattice_audit_stable) v.audit.lattice_stable = false;
  }
  v.audit.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

Verdict analyze(const LoopProgram& p, const DecisionConfig& cfg) {
  return analyze(WitnessSet::build(p, cfg.witness), cfg);
}

}  // namespace llterm
