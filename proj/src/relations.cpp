#include <llterm/relations.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace llterm {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

Integer integer_from_ld(long double x) {
  if (x <= 0) return 0;
  int exp = 0;
  long double mant = std::frexp(std::ceil(x), &exp);
  Integer m(static_cast<unsigned long>(std::ldexp(mant, 63) / 2));
  return shift(m, exp - 62);
}

struct Angles {
  std::vector<long double> turn;     // arg / 2 pi
  std::vector<long double> log_abs;  // log |mu|
};

Angles angles_of(const std::vector<AlgebraicNumber>& mu) {
  Angles a;
  for (const auto& x : mu) {
    Ball b = x.enclose(80);
    long double re = b.re_double(), im = b.im_double();
    a.turn.push_back(std::atan2(im, re) / kTwoPi);
    a.log_abs.push_back(0.5L * std::log(re * re + im * im));
  }
  return a;
}

bool numeric_candidate(const Angles& a, const std::vector<long>& v) {
  long double t = 0, l = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    t += v[j] * a.turn[j];
    l += v[j] * a.log_abs[j];
  }
  return std::fabs(t - std::nearbyint(t)) < 1e-9L && std::fabs(l) < 1e-9L;
}

long radius_for(std::size_t s, std::size_t limit) {
  if (s == 0) return 0;
  long m = static_cast<long>(std::floor((std::pow(static_cast<long double>(limit), 1.0L / s) - 1) / 2));
  return std::max(m, 1L);
}

// Adds to `hnf` every relation found with sup-norm <= m.
void search(const std::vector<AlgebraicNumber>& mu, const Angles& ang, long m, IntMatrix& hnf) {
  const std::size_t s = mu.size();
  std::vector<long> v(s, -m);
  std::vector<std::vector<long>> cands;
  for (;;) {
    // canonical sign: first nonzero entry positive
    std::size_t k = 0;
    while (k < s && v[k] == 0) ++k;
    if (k < s && v[k] > 0 && numeric_candidate(ang, v)) cands.push_back(v);
    std::size_t i = 0;
    while (i < s && v[i] == m) v[i++] = -m;
    if (i == s) break;
    ++v[i];
  }
  auto norm = [](const std::vector<long>& x) {
    long n = 0;
    for (long e : x) n = std::max(n, std::labs(e));
    return n;
  };
  std::stable_sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) { return norm(a) < norm(b); });
  for (const auto& c : cands) {
    IntVector iv(c.begin(), c.end());
    if (hnf.rows() > 0 && in_row_lattice(hnf, iv)) continue;
    if (!satisfies_relation(mu, iv)) continue;
    IntMatrix grown(hnf.rows() + 1, s);
    for (std::size_t r = 0; r < hnf.rows(); ++r)
      for (std::size_t j = 0; j < s; ++j) grown(r, j) = hnf(r, j);
    for (std::size_t j = 0; j < s; ++j) grown(hnf.rows(), j) = iv[j];
    hnf = hermite_normal_form(grown);
  }
}

}  // namespace

Integer masser_bound(const std::vector<AlgebraicNumber>& mu, double c, long floor) {
  if (mu.empty()) return floor;
  long double D = 1, logH = 0;
  for (const auto& x : mu) {
    D = std::max<long double>(D, x.degree());
    logH = std::max<long double>(logH, std::log(x.height().get_d()));
  }
  const long double s = static_cast<long double>(mu.size());
  const long double base = D * logH;
  if (base <= 1) return floor;
  long double lg = c * s * s * std::log(base);
  Integer M = lg > 11000 ? shift(Integer(1), 16000) : integer_from_ld(std::exp(lg));
  return M < floor ? Integer(floor) : M;
}

bool satisfies_relation(const std::vector<AlgebraicNumber>& mu, const IntVector& v) {
  AlgebraicNumber num(1), den(1);
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (v[j] == 0) continue;
    unsigned long e = iabs(v[j]).get_ui();
    if (v[j] > 0)
      num = alg_mul(num, alg_pow(mu[j], e));
    else
      den = alg_mul(den, alg_pow(mu[j], e));
  }
  return alg_equals(num, den);
}

RelationLattice relation_lattice(const std::vector<AlgebraicNumber>& mu, const Integer& M, const RelationOptions& opt) {
  RelationLattice lat;
  lat.s = mu.size();
  lat.bound = M;
  lat.basis = IntMatrix(0, lat.s);
  if (lat.s == 0) return lat;
  Angles ang = angles_of(mu);
  long cap = radius_for(lat.s, opt.enumeration_limit);
  long m = M.fits_slong_p() ? std::min(M.get_si(), cap) : cap;
  lat.searched = m;
  lat.capped = Integer(m) < M;
  search(mu, ang, m, lat.basis);
  IntMatrix audited = lat.basis;
  long r = m;
  for (int i = 0; i < opt.audit_doublings; ++i) {
    r *= 2;
    search(mu, ang, r, audited);
  }
  lat.audit_radius = r;
  lat.audit_stable = audited == lat.basis;
  lat.basis = audited;
  return lat;
}

RelationLattice relation_lattice(const std::vector<AlgebraicNumber>& mu, const RelationOptions& opt) {
  return relation_lattice(mu, masser_bound(mu, opt.c, opt.floor), opt);
}

Integer TorusGroup::component_count() const {
  Integer c = 1;
  for (const auto& d : divisors) c *= d;
  return c;
}

std::vector<std::vector<long>> TorusGroup::components(std::size_t cap) const {
  if (component_count() > static_cast<unsigned long>(cap)) throw std::runtime_error("torus has too many components");
  std::vector<std::vector<long>> out;
  std::vector<long> m(rank, 0);
  for (;;) {
    out.push_back(m);
    std::size_t i = 0;
    while (i < rank && m[i] + 1 == divisors[i].get_si()) m[i++] = 0;
    if (i == rank) break;
    ++m[i];
  }
  return out;
}

Rational TorusGroup::torsion_phase(std::size_t j, const std::vector<long>& m) const {
  Rational p = 0;
  // labels may be shortened: missing entries are 0
  for (std::size_t i = 0; i < rank && i < m.size(); ++i) p += Rational(V(j, i)) * Rational(m[i]) / Rational(divisors[i]);
  return p;
}

long TorusGroup::exponent(std::size_t j, std::size_t free_index) const { return V(j, rank + free_index).get_si(); }

double TorusGroup::phase(std::size_t j, const std::vector<long>& m, const std::vector<double>& t) const {
  double p = torsion_phase(j, m).get_d();
  for (std::size_t i = 0; i < free_dim(); ++i) p += exponent(j, i) * t[i];
  return p;
}

std::vector<std::complex<double>> TorusGroup::point(const std::vector<long>& m, const std::vector<double>& t) const {
  std::vector<std::complex<double>> z;
  for (std::size_t j = 0; j < s; ++j) z.push_back(std::polar(1.0, 2 * M_PI * phase(j, m, t)));
  return z;
}

bool TorusGroup::contains(const std::vector<std::complex<double>>& z, double tol) const {
  for (const auto& zj : z)
    if (std::fabs(std::abs(zj) - 1) > tol) return false;
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    std::complex<double> p = 1;
    for (std::size_t j = 0; j < s; ++j) p *= std::pow(z[j], relations(r, j).get_d());
    if (std::abs(p - 1.0) > tol) return false;
  }
  return true;
}

TorusGroup torus_group(const IntMatrix& relations, std::size_t s) {
  TorusGroup t;
  t.s = s;
  t.relations = relations;
  if (relations.rows() == 0) {
    t.V = IntMatrix::identity(s);
    return t;
  }
  SmithForm f = smith_normal_form(relations);
  t.rank = f.rank;
  t.divisors = f.divisors;
  t.V = f.V;
  return t;
}

TorusGroup torus_group(const RelationLattice& lat) { return torus_group(lat.basis, lat.s); }

std::optional<unsigned long> orbit_approach(const std::vector<AlgebraicNumber>& lambda,
                                            const std::vector<std::complex<double>>& target, double eps,
                                            unsigned long n_max) {
  const std::size_t s = lambda.size();
  if (target.size() != s) throw std::invalid_argument("orbit_approach: target has wrong length");
  Angles ang = angles_of(lambda);
  std::vector<long double> tt(s);
  for (std::size_t j = 0; j < s; ++j) tt[j] = std::arg(target[j]) / kTwoPi;
  const long double slack = eps == 0 ? 1e-9L : 0;
  for (unsigned long n = 0; n <= n_max; ++n) {
    bool ok = true;
    for (std::size_t j = 0; j < s && ok; ++j) {
      long double d = n * ang.turn[j] - tt[j];
      d -= std::nearbyint(d);
      long double chord = 2 * std::fabs(std::sin(kTwoPi * d / 2));
      long double radial = std::fabs(std::exp(n * ang.log_abs[j]) - std::abs(target[j]));
      ok = chord + radial <= eps + slack;
    }
    if (!ok) continue;
    // confirm
    const long bits = 80 + 2 * static_cast<long>(std::log2(n + 2.0));
    bool confirmed = true;
    for (std::size_t j = 0; j < s && confirmed; ++j) {
      if (eps == 0) {
        AlgebraicNumber p = alg_pow(lambda[j], n);
        AlgebraicNumber z = alg_add(AlgebraicNumber(Rational(target[j].real())),
                                    alg_mul(AlgebraicNumber(Rational(target[j].imag())), AlgebraicNumber::imaginary_unit()));
        confirmed = alg_equals(p, z);
      } else {
        Ball p = lambda[j].enclose(bits).pow(n);
        Ball d = p - Ball::from_rational(Rational(target[j].real()), Rational(target[j].imag()), p.precision());
        confirmed = d.abs_upper() <= Rational(eps);
      }
    }
    if (confirmed) return n;
  }
  return std::nullopt;
}

}  // namespace llterm
