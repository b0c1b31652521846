#include <llterm/polynomial.hpp>

#include <sstream>

namespace llterm {

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial(), a};
  std::vector<Rational> r(a.coefficients());
  const int db = b.degree();
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial rem(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return inv * p;
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = rem(x, y);
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

RatXgcd xgcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1;
  RatPolynomial t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPolynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) g = gcd_of(g, c);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> c(p.coefficients());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

IntPolynomial to_primitive_integer(const RatPolynomial& p) {
  Integer l = 1;
  for (const auto& v : p.coefficients()) l = lcm_of(l, v.get_den());
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coefficients()) {
    Integer t = v.get_num() * (l / v.get_den());
    c.push_back(t);
  }
  return primitive_part(IntPolynomial(std::move(c)));
}

Integer height(const IntPolynomial& p) {
  Integer h = 0;
  for (const auto& c : p.coefficients()) {
    Integer a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r(a.coefficients());
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer f;
    mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return to_primitive_integer(gcd(to_rational(a), to_rational(b)));
}

IntPolynomial negate_variable(const IntPolynomial& p) {
  std::vector<Integer> c(p.coefficients());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return primitive_part(IntPolynomial(std::move(c)));
}

IntPolynomial reverse(const IntPolynomial& p) {
  std::vector<Integer> c(p.coefficients());
  std::reverse(c.begin(), c.end());
  return primitive_part(IntPolynomial(std::move(c)));
}

IntPolynomial translate(const IntPolynomial& p, const Rational& s) {
  // roots r + s  <=>  p(x - s)
  RatPolynomial shift_poly({Rational(-s), Rational(1)});
  return to_primitive_integer(to_rational(p).compose(shift_poly));
}

IntPolynomial scale_roots(const IntPolynomial& p, const Rational& s) {
  if (s == 0) throw std::domain_error("scale_roots by zero");
  // roots r*s  <=>  p(x / s)
  RatPolynomial lin({Rational(0), Rational(1 / s)});
  return to_primitive_integer(to_rational(p).compose(lin));
}

IntPolynomial substitute_square(const IntPolynomial& p) {
  std::vector<Integer> c(2 * p.size(), Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) c[2 * i] = p[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial power_of_x_mod(unsigned long r, const IntPolynomial& m) {
  if (m.is_zero() || m.leading() != 1) throw std::domain_error("power_of_x_mod needs a monic modulus");
  const int n = m.degree();
  auto reduce = [&](std::vector<Integer> v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= n; --i) {
      if (v[i] == 0) continue;
      Integer f = v[i];
      for (int j = 0; j <= n; ++j) v[i - n + j] -= f * m[j];
    }
    if (static_cast<int>(v.size()) > n) v.resize(n);
    return IntPolynomial(std::move(v));
  };
  IntPolynomial result = reduce({Integer(1)});
  IntPolynomial base = reduce({Integer(0), Integer(1)});
  while (r) {
    if (r & 1ul) result = reduce((result * base).coefficients());
    r >>= 1ul;
    if (r) base = reduce((base * base).coefficients());
  }
  return result;
}

IntPolynomial cyclotomic(unsigned r) {
  // Phi_r = (x^r - 1) / prod_{d | r, d < r} Phi_d
  std::vector<Integer> c(r + 1, Integer(0));
  c[0] = -1;
  c[r] = 1;
  IntPolynomial acc(std::move(c));
  for (unsigned d = 1; d < r; ++d)
    if (r % d == 0) acc = *exact_quotient(acc, cyclotomic(d));
  return acc;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() <= 0) return out;
  RatPolynomial f = make_monic(to_rational(p));
  RatPolynomial df = f.derivative();
  RatPolynomial a = gcd(f, df);
  RatPolynomial b = divmod(f, a).first;
  RatPolynomial c = divmod(df, a).first;
  RatPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RatPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(to_primitive_integer(g), i);
    RatPolynomial nb = divmod(b, g).first;
    RatPolynomial nc = divmod(d, g).first;
    b = std::move(nb);
    d = nc - b.derivative();
    ++i;
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial acc = IntPolynomial::constant(1);
  for (const auto& [f, m] : squarefree_decomposition(p)) acc *= f;
  return primitive_part(acc);
}

namespace {
template <class T>
std::string poly_string(const Polynomial<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p[i];
    if (c == 0) continue;
    bool neg = c < 0;
    T a = neg ? T(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}
}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) { return poly_string(p, var); }
std::string to_string(const RatPolynomial& p, const std::string& var) { return poly_string(p, var); }

}  // namespace llterm
