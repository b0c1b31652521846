#include <llterm/report.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace llterm {

namespace {

std::string str(const Rational& q) { return q.get_str(); }

double approx(const AlgebraicNumber& x, bool imag = false) {
  Ball b = x.enclose(64);
  return imag ? b.im_double() : b.re_double();
}

Json eigen_json(const SpectralData& s, std::size_t e) {
  const Eigenvalue& ev = s.eigenvalues[e];
  Json j = algebraic_json(ev.value);
  j["index"] = ev.index;
  j["class"] = ev.cls;
  return j;
}

}  // namespace

Json algebraic_json(const AlgebraicNumber& x) {
  Json j;
  j["re"] = approx(x);
  j["im"] = approx(x, true);
  j["min_poly"] = to_string(x.min_poly());
  Ball b = x.enclose(64);
  j["box"] = {{"re", str(b.re())}, {"im", str(b.im())}, {"radius", str(b.radius())}};
  return j;
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

Json to_json(const PointCertificate& c) {
  Json j;
  j["point"] = to_json(c.point);
  j["status"] = to_string(c.status);
  j["L"] = c.L;
  if (c.status == CertStatus::Certified) {
    j["m"] = c.m;
    j["nt_point"] = to_json(c.nt_point);
  }
  j["simulated_steps"] = c.simulated;
  j["failures"] = c.failures;
  j["lattice_audit_stable"] = c.lattice_audit_stable;
  j["reason"] = c.reason;
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json x;
    x["row"] = r.row;
    x["phase"] = r.phase;
    x["kind"] = to_string(r.kind);
    x["sign"] = r.sign;
    if (r.kind != PieceKind::Zero) {
      x["class"] = r.cls;
      x["level"] = r.level;
      x["modulus"] = r.modulus;
    }
    if (r.sign > 0) {
      x["delta"] = str(r.delta);
      x["tail_c1"] = str(r.tail_c1);
      x["tail_c2"] = str(r.tail_c2);
      if (!r.ratio.empty()) x["ratio_bound"] = r.ratio;
    }
    x["n0"] = r.n0;
    x["method"] = r.method;
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  if (v.outcome == Outcome::Unknown) j["reason"] = v.reason;
  j["evidence"] = v.evidence;
  Json a;
  a["lattice_stable"] = v.audit.lattice_stable;
  a["flags"] = v.audit.flags;
  a["radius"] = v.audit.radius;
  a["L"] = v.audit.L;
  a["m_max"] = v.audit.m_max;
  const SearchStats& s = v.audit.search;
  a["search"] = {{"nodes", s.nodes},
                 {"leaves", s.leaves},
                 {"open_leaves", s.open_leaves},
                 {"candidates", s.candidates},
                 {"inconclusive_points", s.inconclusive_points}};
  a["seconds"] = v.audit.seconds;
  j["audit"] = std::move(a);
  return j;
}

Json to_json(const Trace& t) {
  Json j;
  j["initial"] = to_json(t.initial);
  j["outcome"] = to_string(t.outcome);
  j["steps"] = t.steps;
  if (t.violated_row) j["violated_row"] = *t.violated_row;
  j["final_state"] = to_json(t.final_state);
  if (!t.states.empty()) {
    Json s = Json::array();
    for (const auto& x : t.states) s.push_back(to_json(x));
    j["states"] = std::move(s);
  }
  return j;
}

Json spectrum_json(const SpectralData& s) {
  Json j;
  j["dim"] = s.dim;
  j["min_poly"] = to_string(s.min_poly);
  Json ev = Json::array();
  for (std::size_t e = 0; e < s.eigenvalues.size(); ++e) ev.push_back(eigen_json(s, e));
  j["eigenvalues"] = std::move(ev);
  Json cls = Json::array();
  for (const auto& c : s.classes) {
    Json x;
    x["modulus"] = std::sqrt(approx(c.modulus_squared));
    x["members"] = c.members;
    x["max_index"] = c.max_index;
    x["positive_real"] = c.positive_real ? Json(*c.positive_real) : Json(nullptr);
    x["negative_real"] = c.negative_real ? Json(*c.negative_real) : Json(nullptr);
    x["complex_pairs"] = c.complex_upper.size();
    cls.push_back(std::move(x));
  }
  j["classes"] = std::move(cls);
  return j;
}

Json relations_json(const std::vector<AlgebraicNumber>& mu, const RelationOptions& opt) {
  RelationLattice lat = relation_lattice(mu, opt);
  TorusGroup g = torus_group(lat);
  Json x;
  Json m = Json::array();
  for (const auto& v : mu) m.push_back(algebraic_json(v));
  x["mu"] = std::move(m);
  Json basis = Json::array();
  for (std::size_t r = 0; r < lat.basis.rows(); ++r) basis.push_back(to_json(lat.basis.row(r)));
  x["basis"] = std::move(basis);
  x["rank"] = lat.rank();
  x["bound"] = lat.bound.get_str();
  x["searched_radius"] = lat.searched;
  x["capped"] = lat.capped;
  x["audit_radius"] = lat.audit_radius;
  x["audit_stable"] = lat.audit_stable;
  x["torus_free_dim"] = g.free_dim();
  x["torus_components"] = g.component_count().get_str();
  return x;
}

Json relations_json(const WitnessSet& w) {
  Json out = Json::array();
  const SpectralData& s = w.spec();
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    const EntPiece& p = w.pieces()[i];
    if (!p.rho || p.complex_members.empty()) continue;
    for (unsigned k = 0; k <= p.top_level; ++k) {
      const LevelTorus& t = w.torus(i, k);
      if (t.members.empty()) continue;
      Json x;
      x["class"] = i;
      x["level"] = k;
      Json mu = Json::array();
      for (const auto& m : t.mu) mu.push_back(algebraic_json(m));
      x["mu"] = std::move(mu);
      Json basis = Json::array();
      for (std::size_t r = 0; r < t.lattice.basis.rows(); ++r) basis.push_back(to_json(t.lattice.basis.row(r)));
      x["basis"] = std::move(basis);
      x["rank"] = t.lattice.rank();
      x["bound"] = t.lattice.bound.get_str();
      x["searched_radius"] = t.lattice.searched;
      x["capped"] = t.lattice.capped;
      x["audit_radius"] = t.lattice.audit_radius;
      x["audit_stable"] = t.lattice.audit_stable;
      x["torus_free_dim"] = t.group.free_dim();
      x["torus_components"] = t.group.component_count().get_str();
      out.push_back(std::move(x));
    }
  }
  return out;
}

Json witness_json(const WitnessSet& w) {
  Json j;
  const ReducedLoop& r = w.reduced();
  j["supported"] = w.supported();
  if (!w.supported()) j["reason"] = r.support.reason;
  j["L"] = r.L;
  Json chain = Json::array();
  for (const auto& c : r.chain) chain.push_back({{"kind", kind_name(c.kind)}, {"parameter", c.parameter}, {"recovery", c.recovery}});
  j["reductions"] = std::move(chain);
  j["components"] = w.components().size();
  Json pieces = Json::array();
  for (const auto& p : w.pieces()) {
    Json x;
    x["class"] = p.cls;
    x["case"] = to_string(p.tag);
    x["positive_real"] = p.rho.has_value();
    x["complex_pairs"] = p.complex_members.size();
    x["top_level"] = p.top_level;
    pieces.push_back(std::move(x));
  }
  j["pieces"] = std::move(pieces);
  // b^T AL^q v = (1/scale) sum over eigenvalues and levels of q^k lambda^q (alpha . v)
  Json comps = Json::array();
  const SpectralData& s = w.spec();
  for (const auto& g : w.components()) {
    Json c;
    c["row"] = g.row;
    c["phase"] = g.phase;
    c["scale"] = g.coeffs.scale.get_str();
    Json terms = Json::array();
    for (std::size_t e = 0; e < s.eigenvalues.size(); ++e) {
      const Eigenvalue& ev = s.eigenvalues[e];
      if (!ev.real && ev.value.enclose(32).imag_sign() < 0) continue;  // conjugates are implied
      const auto& levels = g.coeffs.alpha[ev.family];
      for (unsigned k = 0; k < levels.size(); ++k) {
        bool zero = std::all_of(levels[k].begin(), levels[k].end(), [](const FieldElement& f) { return f.is_zero(); });
        if (zero) continue;
        Json alpha = Json::array();
        for (const auto& a : coefficient_vector(s, g.coeffs, e, k)) alpha.push_back(algebraic_json(a));
        terms.push_back({{"eigenvalue", e}, {"level", k}, {"alpha", std::move(alpha)}});
      }
    }
    c["terms"] = std::move(terms);
    comps.push_back(std::move(c));
  }
  j["coefficients"] = std::move(comps);
  return j;
}

Json membership_json(const WitnessSet& w, const IntVector& u) {
  Json j;
  j["point"] = to_json(u);
  j["membership"] = to_string(w.membership(u));
  RatVector r;
  for (const auto& x : u) r.emplace_back(x);
  Json comps = Json::array();
  std::size_t i = 0;
  for (const auto& e : w.explain(r)) {
    const GuardComponent& g = w.components()[i++];
    Json x;
    x["row"] = g.row;
    x["phase"] = g.phase;
    x["result"] = to_string(e.result);
    x["kind"] = to_string(e.kind);
    if (e.kind != PieceKind::Zero) {
      x["class"] = e.cls;
      x["level"] = e.level;
    }
    if (e.kind == PieceKind::Torus) {
      x["torus_sign"] = to_string(e.torus.sign);
      x["torus_method"] = e.torus.method;
      x["torus_estimate"] = e.torus.estimate;
    }
    comps.push_back(std::move(x));
  }
  j["components"] = std::move(comps);
  return j;
}

std::string certificate_text(const PointCertificate& c) {
  std::ostringstream os;
  os << "certificate: " << to_string(c.status) << " (" << c.reason << ")\n";
  for (const auto& r : c.rows) {
    os << "  row " << r.row << " phase " << r.phase << ": " << to_string(r.kind);
    if (r.kind != PieceKind::Zero) os << ", class " << r.cls << " |lambda| " << r.modulus << ", n^" << r.level;
    if (r.sign > 0 && r.delta > 0) os << ", delta >= " << r.delta.get_d();
    os << ", n0 " << r.n0 << " [" << r.method << "]\n";
  }
  if (!c.failures.empty()) {
    os << "  guard violations at n =";
    for (auto n : c.failures) os << ' ' << n;
    os << '\n';
  }
  return os.str();
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.outcome);
  if (v.outcome == Outcome::Unknown) os << " (" << v.reason << ")";
  os << '\n';
  if (v.witness) {
    os << "witness:";
    for (const auto& x : *v.witness) os << ' ' << x;
    os << '\n';
    if (v.certificate) {
      os << "guard holds forever from step " << v.certificate->m << ", state";
      for (const auto& x : v.certificate->nt_point) os << ' ' << x;
      os << '\n' << certificate_text(*v.certificate);
    }
  }
  for (const auto& e : v.evidence) os << "  " << e << '\n';
  if (!v.audit.lattice_stable) os << "warning: relation lattice audit unstable\n";
  for (const auto& f : v.audit.flags) os << "  flag: " << f << '\n';
  return os.str();
}

}  // namespace llterm
