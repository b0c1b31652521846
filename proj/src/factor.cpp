// Zassenhaus: Cantor-Zassenhaus modulo a small prime, multifactor Hensel
// lifting, then recombination of lifted factors by exact trial division.
#include <llterm/factor.hpp>

#include <algorithm>
#include <cstdint>
#include <random>

namespace llterm {
namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  int deg(const ModPoly& a) const { return static_cast<int>(a.size()) - 1; }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  // quotient and remainder
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    ModPoly r = a;
    const int db = deg(b);
    ModPoly q(a.size() - b.size() + 1, 0);
    const u64 il = inv(b.back());
    for (int i = deg(a); i >= db; --i) {
      u64 f = mul(r[i], il);
      if (!f) continue;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(f, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    u64 il = inv(a.back());
    for (auto& v : a) v = mul(v, il);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s a + t b = 1 for coprime a, b
  std::pair<ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ModPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 il = inv(r0.back());
    for (auto& v : s0) v = mul(v, il);
    for (auto& v : t0) v = mul(v, il);
    return {s0, t0};
  }
  ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    const long bits = bit_length(e);
    for (long i = bits - 1; i >= 0; --i) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = rem(mul(r, base), m);
    }
    return r;
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p);
    trim(d);
    return d;
  }
};

ModPoly reduce_mod(const IntPolynomial& f, u64 p) {
  ModPoly r(f.size());
  Integer t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  Zp::trim(r);
  return r;
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<ModPoly> factor_mod_p(const Zp& F, ModPoly f, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  std::vector<std::pair<ModPoly, int>> ddf;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  Integer pz(static_cast<unsigned long>(F.p));
  for (int i = 1; F.deg(f) >= 2 * i; ++i) {
    h = F.powmod(h, pz, f);
    ModPoly g = F.gcd(f, F.sub(h, x));
    if (F.deg(g) > 0) {
      ddf.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (F.deg(f) > 0) ddf.emplace_back(F.monic(f), F.deg(f));

  for (auto& [g, d] : ddf) {
    std::vector<ModPoly> stack{g};
    Integer e = (ipow(pz, static_cast<unsigned long>(d)) - 1) / 2;
    while (!stack.empty()) {
      ModPoly cur = std::move(stack.back());
      stack.pop_back();
      if (F.deg(cur) == d) {
        out.push_back(F.monic(cur));
        continue;
      }
      for (;;) {
        ModPoly a(F.deg(cur));
        for (auto& v : a) v = rng() % F.p;
        Zp::trim(a);
        if (F.deg(a) < 1) continue;
        ModPoly b = F.powmod(a, e, cur);
        if (b.empty()) continue;
        b[0] = F.sub(b[0], 1);
        Zp::trim(b);
        ModPoly s = F.gcd(cur, b);
        if (F.deg(s) > 0 && F.deg(s) < F.deg(cur)) {
          stack.push_back(F.divmod(cur, s).first);
          stack.push_back(s);
          break;
        }
      }
    }
  }
  return out;
}

// ---- arithmetic in Z/mZ[x] with big m --------------------------------------

using BigPoly = std::vector<Integer>;

void trim(BigPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
BigPoly reduce(BigPoly a, const Integer& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}
BigPoly mul(const BigPoly& a, const BigPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  BigPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}
BigPoly add(const BigPoly& a, const BigPoly& b, const Integer& m) {
  BigPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(std::move(r), m);
}
BigPoly sub(const BigPoly& a, const BigPoly& b, const Integer& m) {
  BigPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), m);
}
// Division by a monic polynomial modulo m.
std::pair<BigPoly, BigPoly> divmod_monic(const BigPoly& a, const BigPoly& h, const Integer& m) {
  if (a.size() < h.size()) return {{}, a};
  BigPoly r = a;
  const int dh = static_cast<int>(h.size()) - 1;
  BigPoly q(a.size() - h.size() + 1, Integer(0));
  for (int i = static_cast<int>(a.size()) - 1; i >= dh; --i) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] == 0) continue;
    Integer f = r[i];
    q[i - dh] = f;
    for (int j = 0; j <= dh; ++j) r[i - dh + j] -= f * h[j];
  }
  r.resize(dh);
  return {reduce(std::move(q), m), reduce(std::move(r), m)};
}

BigPoly to_big(const ModPoly& a) {
  BigPoly r;
  r.reserve(a.size());
  for (u64 v : a) r.emplace_back(static_cast<unsigned long>(v));
  return r;
}

struct Lifted {
  BigPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2; h monic.
Lifted hensel_step(const BigPoly& f, const Lifted& in, const Integer& m) {
  const Integer m2 = m * m;
  BigPoly e = sub(f, mul(in.g, in.h, m2), m2);
  auto [q, r] = divmod_monic(mul(in.s, e, m2), in.h, m2);
  BigPoly g2 = add(add(in.g, mul(in.t, e, m2), m2), mul(q, in.g, m2), m2);
  BigPoly h2 = add(in.h, r, m2);
  BigPoly b = sub(add(mul(in.s, g2, m2), mul(in.t, h2, m2), m2), BigPoly{Integer(1)}, m2);
  auto [c, d] = divmod_monic(mul(in.s, b, m2), h2, m2);
  BigPoly s2 = sub(in.s, d, m2);
  BigPoly t2 = sub(sub(in.t, mul(in.t, b, m2), m2), mul(c, g2, m2), m2);
  return {g2, h2, s2, t2};
}

// Lift f == lc * prod(factors) (mod p) to monic factors modulo P = p^k.
void multifactor_lift(const Zp& F, const BigPoly& f, const std::vector<ModPoly>& factors,
                      const Integer& P, std::vector<BigPoly>& out) {
  if (factors.size() == 1) {
    Integer lc = f.back(), inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t());
    BigPoly g = f;
    for (auto& v : g) v *= inv;
    out.push_back(reduce(std::move(g), P));
    return;
  }
  const std::size_t k = factors.size() / 2;
  ModPoly g0{1}, h0{1};
  for (std::size_t i = 0; i < k; ++i) g0 = F.mul(g0, factors[i]);
  for (std::size_t i = k; i < factors.size(); ++i) h0 = F.mul(h0, factors[i]);
  Integer pz(static_cast<unsigned long>(F.p));
  BigPoly fbig = reduce(f, pz);
  u64 lc = fbig.back().get_ui();
  for (auto& v : g0) v = F.mul(v, lc);
  auto [s0, t0] = F.xgcd(g0, h0);
  Lifted cur{to_big(g0), to_big(h0), to_big(s0), to_big(t0)};
  Integer m = pz;
  while (m < P) {
    cur = hensel_step(f, cur, m);
    m *= m;
  }
  BigPoly g = reduce(cur.g, P), h = reduce(cur.h, P);
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<long>(k));
  std::vector<ModPoly> right(factors.begin() + static_cast<long>(k), factors.end());
  multifactor_lift(F, g, left, P, out);
  multifactor_lift(F, h, right, P, out);
}

IntPolynomial symmetric(const BigPoly& a, const Integer& P) {
  Integer half = P / 2;
  std::vector<Integer> c(a);
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
    if (v > half) v -= P;
  }
  return IntPolynomial(std::move(c));
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& input) {
  IntPolynomial f = primitive_part(input);
  if (f.degree() <= 1) return {f};
  std::vector<IntPolynomial> result;
  if (f[0] == 0) {
    result.push_back(IntPolynomial{Integer(0), Integer(1)});
    f = *exact_quotient(f, result.back());
    if (f.degree() <= 0) return result;
    if (f.degree() == 1) {
      result.push_back(f);
      return result;
    }
  }
  const int n = f.degree();
  const IntPolynomial df = f.derivative();

  // Choose a prime giving the fewest modular factors among a few good ones.
  std::mt19937_64 rng(0x5eed1234ULL);
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (u64 p = 3; good < 5 && p < (1ULL << 31); p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    Zp F{p};
    ModPoly fp = reduce_mod(f, p);
    ModPoly g = F.gcd(fp, reduce_mod(df, p));
    if (F.deg(g) > 0) continue;
    ++good;
    std::vector<ModPoly> fac = factor_mod_p(F, F.monic(fp), rng);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) {
    result.push_back(f);
    return result;
  }

  // Coefficient bound for any lc-scaled factor candidate.
  Integer norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Integer bound = abs(f.leading()) * ipow(Integer(2), static_cast<unsigned long>(n)) * isqrt_ceil(norm2);
  Integer P = best_p;
  while (P <= 2 * bound) P *= Integer(static_cast<unsigned long>(best_p));

  Zp F{best_p};
  std::vector<BigPoly> lifted;
  multifactor_lift(F, f.coefficients(), best, P, lifted);

  IntPolynomial cur = f;
  std::vector<BigPoly> rest = lifted;
  for (std::size_t s = 1; 2 * s <= rest.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      BigPoly prod{cur.leading()};
      for (std::size_t i : idx) prod = mul(prod, rest[i], P);
      IntPolynomial cand = primitive_part(symmetric(prod, P));
      if (cand.degree() > 0) {
        if (auto q = exact_quotient(cur, cand)) {
          result.push_back(cand);
          cur = *q;
          for (std::size_t i = s; i-- > 0;) rest.erase(rest.begin() + static_cast<long>(idx[i]));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == rest.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.degree() > 0) result.push_back(primitive_part(cur));
  return result;
}

Factorization factor(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("factor of zero polynomial");
  Factorization out;
  out.unit = content(p);
  if (p.leading() < 0) out.unit = -out.unit;
  for (const auto& [sf, mult] : squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree(sf)) out.factors.emplace_back(std::move(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() <= 0) return false;
  auto f = factor(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace llterm
