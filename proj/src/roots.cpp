// Aberth seeds in long double, fixed-point polishing, and certification by
// Gerschgorin discs of the Weierstrass corrections: for monic p and distinct
// z_i, the zeros of p are the eigenvalues of diag(z_i) - W 1^T, whose
// Gerschgorin discs lie inside |z - z_i| <= n |W_i|.
#include <llterm/roots.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace llterm {
namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth_seed(const IntPolynomial& p) {
  const int n = p.degree();
  std::vector<long double> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = static_cast<long double>(mpz_get_d(p[i].get_mpz_t()));
  // Rescale coefficients to avoid overflow for large heights.
  long double mx = 0;
  for (auto v : c) mx = std::max(mx, std::fabs(v));
  for (auto& v : c) v /= mx;
  auto eval = [&](cld z, cld& dp) {
    cld v = 0;
    dp = 0;
    for (int i = n; i >= 0; --i) {
      dp = dp * z + v;
      v = v * z + c[i];
    }
    return v;
  };
  // Initial radius: geometric mean of root moduli.
  long double r = std::pow(std::fabs(c[0] / c[n]) + 1e-30L, 1.0L / n);
  if (!(r > 1e-10L) || !std::isfinite(r)) r = 1;
  std::vector<cld> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(r, 2 * M_PIl * i / n + 0.4L);
  for (int it = 0; it < 800; ++it) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      cld dp;
      cld v = eval(z[i], dp);
      if (v == cld(0)) continue;
      cld ratio = v / dp;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

Ball from_cld(cld v, long prec) {
  auto conv = [&](long double x) {
    if (!std::isfinite(x)) return Integer(0);
    int e;
    long double m = std::frexp(x, &e);
    long long mm = static_cast<long long>(std::ldexp(m, 62));
    return shift(Integer(static_cast<long>(mm)), e - 62 + prec);
  };
  return Ball(prec, conv(v.real()), conv(v.imag()), 0);
}

Ball center_only(const Ball& b) { return Ball(b.precision(), b.re_mant(), b.im_mant(), 0); }

struct Approx {
  std::vector<Ball> z;
};

void polish(const IntPolynomial& p, std::vector<Ball>& z, long prec, int iters) {
  const int n = p.degree();
  IntPolynomial dp = p.derivative();
  for (auto& v : z) v = center_only(v.with_precision(prec));
  for (int it = 0; it < iters; ++it) {
    bool tiny = true;
    for (int i = 0; i < n; ++i) {
      Ball v = center_only(evaluate(p, z[i]));
      Ball d = center_only(evaluate(dp, z[i]));
      if (!d.surely_nonzero()) continue;
      Ball ratio = center_only(v / d);
      Ball s(prec, 0, 0, 0);
      bool ok = true;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Ball diff = z[i] - z[j];
        if (!diff.surely_nonzero()) {
          ok = false;
          break;
        }
        s += center_only(diff.inverse());
      }
      if (!ok) continue;
      Ball denom = Ball::from_integer(1, prec) - center_only(ratio * s);
      if (!denom.surely_nonzero()) continue;
      Ball w = center_only(ratio / denom);
      z[i] = center_only(z[i] - w);
      Integer size = abs(w.re_mant()) + abs(w.im_mant());
      if (bit_length(size) > 4) tiny = false;
    }
    if (tiny) break;
  }
}

// Enforce conjugate symmetry: near-real points become real, others pair up.
bool symmetrize(std::vector<Ball>& z, long prec, std::vector<bool>& real) {
  const std::size_t n = z.size();
  real.assign(n, false);
  std::vector<bool> used(n, false);
  // threshold ~ 2^(-prec/2) relative
  for (std::size_t i = 0; i < n; ++i) {
    Integer mag = abs(z[i].re_mant()) + shift(Integer(1), prec);
    Integer thr = shift(mag, -(prec / 2));
    if (abs(z[i].im_mant()) <= thr) {
      z[i] = Ball(prec, z[i].re_mant(), 0, 0);
      real[i] = true;
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i] || z[i].im_mant() < 0) continue;
    std::size_t best = n;
    Integer bestd;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || j == i || z[j].im_mant() >= 0) continue;
      Integer d = abs(z[j].re_mant() - z[i].re_mant()) + abs(z[j].im_mant() + z[i].im_mant());
      if (best == n || d < bestd) {
        best = j;
        bestd = d;
      }
    }
    if (best == n) return false;
    used[i] = used[best] = true;
    z[best] = z[i].conj();
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) return false;
  return true;
}

bool certify(const IntPolynomial& p, const std::vector<Ball>& z, const std::vector<bool>& real,
             std::vector<RootDisc>& out) {
  const int n = p.degree();
  const long prec = z[0].precision();
  Ball lc = Ball::from_integer(p.leading(), prec);
  std::vector<Integer> rad(n);
  for (int i = 0; i < n; ++i) {
    Ball den = lc;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Ball diff = z[i] - z[j];
      if (!diff.surely_nonzero()) return false;
      den = den * diff;
    }
    if (!den.surely_nonzero()) return false;
    Ball w = evaluate(p, z[i]) / den;
    rad[i] = w.abs_upper_mant() * n + 1;
  }
  for (int i = 0; i < n; ++i) {
    // a valid but loose disc means polishing has not converged; ask for another round
    if (bit_length(rad[i]) > bit_length(abs(z[i].re_mant()) + abs(z[i].im_mant()) + shift(Integer(1), prec)) - prec / 2)
      return false;
    if (!real[i] && abs(z[i].im_mant()) <= rad[i]) return false;
    for (int j = i + 1; j < n; ++j) {
      Integer r = rad[i] + rad[j];
      if (abs(z[i].re_mant() - z[j].re_mant()) <= r && abs(z[i].im_mant() - z[j].im_mant()) <= r) return false;
    }
  }
  out.clear();
  for (int i = 0; i < n; ++i) out.push_back({Ball(prec, z[i].re_mant(), z[i].im_mant(), rad[i]), real[i]});
  return true;
}

}  // namespace

Ball evaluate(const IntPolynomial& p, const Ball& z) {
  const long prec = z.precision();
  Ball acc(prec, 0, 0, 0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + Ball::from_integer(p[i], prec);
  return acc;
}

std::vector<RootDisc> isolate_squarefree(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::domain_error("isolate_squarefree: constant polynomial");
  std::vector<RootDisc> out;
  if (n == 1) {
    Rational r = make_rational(-p[0], p[1]);
    Ball b = Ball::from_rational(r, 64);
    long prec = 64;
    // exact dyadic roots get radius 0, others one ulp
    out.push_back({b, true});
    (void)prec;
    return out;
  }
  std::vector<cld> seed = aberth_seed(p);
  long prec = 64;
  std::vector<Ball> z;
  for (auto& s : seed) z.push_back(from_cld(s, prec));
  for (int round = 0; round < 14; ++round) {
    polish(p, z, prec, 6 + 2 * round + n);
    std::vector<Ball> zs = z;
    std::vector<bool> real;
    if (symmetrize(zs, prec, real) && certify(p, zs, real, out)) break;
    out.clear();
    prec *= 2;
  }
  if (out.empty()) throw std::runtime_error("root isolation failed to certify: " + to_string(p));
  std::sort(out.begin(), out.end(), [](const RootDisc& a, const RootDisc& b) {
    if (a.real != b.real) return a.real;
    if (a.disc.re_mant() != b.disc.re_mant()) return a.disc.re_mant() < b.disc.re_mant();
    return a.disc.im_mant() < b.disc.im_mant();
  });
  return out;
}

namespace {

Integer round_to(const Rational& v, long prec) {
  Rational s = v * Rational(shift(Integer(1), prec));
  return floor_of(s + Rational(1, 2));
}

// Quarters the isolating interval of a real root by exact bisection on the sign
// of p. Complex roots have no such fallback.
bool shrink(const IntPolynomial& p, RootDisc& root) {
  if (!root.real) return false;
  const Rational c = root.disc.re(), h = root.disc.radius();
  if (h == 0) return true;
  const long prec = std::max<long>(root.disc.precision(), bit_length(h.get_den()) + 8) + 4;
  auto sign_at = [&](const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
    return sgn(acc);
  };
  Rational lo = c - h, hi = c + h;
  const int slo = sign_at(lo), shi = sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi) return false;
  for (int i = 0; i < 2; ++i) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_at(mid);
    if (sm == 0) {
      root.disc = Ball::from_rational(mid, prec);
      return true;
    }
    (sm == slo ? lo : hi) = mid;
  }
  root.disc = Ball(prec, round_to((lo + hi) / 2, prec), 0, round_to((hi - lo) / 2, prec) + 1);
  return true;
}

}  // namespace

void refine_root(const IntPolynomial& p, RootDisc& root, long target_bits) {
  if (p.degree() == 1) {
    Rational r = make_rational(-p[0], p[1]);
    long prec = std::max(root.disc.precision(), target_bits + 2);
    root.disc = Ball::from_rational(r, prec);
    return;
  }
  const int n = p.degree();
  const IntPolynomial dp = p.derivative();
  auto small_enough = [&]() {
    // radius * 2^-prec <= 2^-target  <=>  bitlen(rad) <= prec - target
    return bit_length(root.disc.rad_mant()) <= root.disc.precision() - target_bits;
  };
  long prec = std::max<long>(root.disc.precision(), 64);
  int failures = 0;
  Ball z = center_only(root.disc.with_precision(prec));
  while (!small_enough()) {
    prec = std::max(prec, target_bits + 32);
    if (failures > 0 && failures % 4 == 0) prec *= 2;
    z = center_only(z.with_precision(prec));
    Ball v = evaluate(p, z), d = evaluate(dp, z);
    if (d.surely_nonzero()) {
      Ball znew = center_only(z - center_only(v / d));
      if (root.real) znew = Ball(prec, znew.re_mant(), 0, 0);
      Ball v2 = evaluate(p, znew), d2 = evaluate(dp, znew);
      if (d2.surely_nonzero()) {
        Ball ratio = v2 / d2;
        Integer rad = ratio.abs_upper_mant() * n + 1;
        Ball cand(prec, znew.re_mant(), znew.im_mant(), rad);
        if (cand.inside_square_of(root.disc) && 2 * cand.radius() <= root.disc.radius()) {
          root.disc = cand;
          failures = 0;
          z = znew;
          continue;
        }
      }
    }
    // Newton left the box or stalled: bisect when possible, restart from the center.
    if (shrink(p, root)) {
      prec = std::max(prec, root.disc.precision());
    } else if (++failures > 60) {
      throw std::runtime_error("refine_root failed to contract");
    }
    z = center_only(root.disc.with_precision(prec));
  }
}

}  // namespace llterm
