#include <llterm/polyhedron.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace llterm {

bool LinearConstraint::constant() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

Rational LinearConstraint::value(const RatVector& t) const {
  Rational s = b;
  for (std::size_t j = 0; j < a.size() && j < t.size(); ++j) s += a[j] * t[j];
  return s;
}

bool LinearConstraint::holds(const RatVector& t) const {
  Rational v = value(t);
  return strict ? v > 0 : v >= 0;
}

std::string to_string(const LinearConstraint& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c.a.size(); ++j) {
    if (c.a[j] == 0) continue;
    os << (first ? "" : " + ") << c.a[j] << "*t" << j;
    first = false;
  }
  os << (first ? "" : " + ") << c.b << (c.strict ? " > 0" : " >= 0");
  return os.str();
}

bool Interval::empty() const {
  if (!lo || !hi) return false;
  if (*lo < *hi) return false;
  if (*lo > *hi) return true;
  return lo_strict || hi_strict;
}

std::optional<Integer> Interval::least_integer() const {
  if (!lo) return std::nullopt;
  Integer f = floor_of(*lo);
  Integer c = f == *lo && !lo_strict ? f : f + 1;
  return c;
}

std::optional<Integer> Interval::greatest_integer() const {
  if (!hi) return std::nullopt;
  Integer c = ceil_of(*hi);
  return c == *hi && !hi_strict ? c : c - 1;
}

std::optional<Integer> Interval::integer_count() const {
  if (!bounded()) return std::nullopt;
  Integer a = *least_integer(), b = *greatest_integer();
  return b >= a ? Integer(b - a + 1) : Integer(0);
}

namespace {

// Scale so the first non-zero coefficient has absolute value 1.
LinearConstraint normalized(LinearConstraint c) {
  for (const auto& x : c.a)
    if (x != 0) {
      Rational s = abs(x);
      for (auto& y : c.a) y /= s;
      c.b /= s;
      return c;
    }
  return c;
}

// Drop duplicates, keeping the tightest constant for each direction.
std::vector<LinearConstraint> simplify(std::vector<LinearConstraint> cs) {
  std::map<RatVector, LinearConstraint> best;
  for (auto& c : cs) {
    c = normalized(std::move(c));
    auto it = best.find(c.a);
    if (it == best.end()) {
      best.emplace(c.a, c);
      continue;
    }
    LinearConstraint& o = it->second;
    if (c.b < o.b || (c.b == o.b && c.strict)) o = c;
  }
  std::vector<LinearConstraint> out;
  for (auto& [k, c] : best) out.push_back(std::move(c));
  return out;
}

bool violated_constant(const LinearConstraint& c) { return c.strict ? !(c.b > 0) : c.b < 0; }

}  // namespace

Elimination fourier_motzkin(std::vector<LinearConstraint> cs, std::size_t n, std::size_t max_constraints) {
  Elimination e;
  e.n = n;
  e.stages.assign(n + 1, {});
  for (auto& c : cs) c.a.resize(n, Rational(0));
  e.stages[n] = simplify(std::move(cs));
  for (std::size_t k = n; k-- > 0;) {
    const auto& cur = e.stages[k + 1];
    std::vector<LinearConstraint> pos, neg, next;
    for (const auto& c : cur) {
      if (c.a[k] > 0)
        pos.push_back(c);
      else if (c.a[k] < 0)
        neg.push_back(c);
      else
        next.push_back(c);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // p.a[k] * t_k >= -(rest_p), q.a[k] * t_k >= -(rest_q); combine with positive weights
        Rational wp = -q.a[k], wq = p.a[k];
        LinearConstraint c;
        c.a.resize(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) c.a[j] = wp * p.a[j] + wq * q.a[j];
        c.a[k] = 0;
        c.b = wp * p.b + wq * q.b;
        c.strict = p.strict || q.strict;
        next.push_back(std::move(c));
      }
    next = simplify(std::move(next));
    if (next.size() > max_constraints) throw std::length_error("fourier_motzkin: constraint explosion");
    e.stages[k] = std::move(next);
  }
  for (const auto& c : e.stages[0])
    if (violated_constant(c)) {
      e.feasible = false;
      e.conflict = to_string(c);
      break;
    }
  return e;
}

Interval Elimination::range(std::size_t k, const RatVector& prefix) const {
  Interval iv;
  for (const auto& c : stages.at(k + 1)) {
    Rational rest = c.b;
    for (std::size_t j = 0; j < k; ++j) rest += c.a[j] * prefix[j];
    const Rational& coef = c.a[k];
    if (coef == 0) {
      if (violated_constant(LinearConstraint{{}, rest, c.strict})) {
        iv.lo = Rational(1);
        iv.hi = Rational(0);
        return iv;
      }
      continue;
    }
    Rational bound = -rest / coef;
    if (coef > 0) {
      if (!iv.lo || bound > *iv.lo || (bound == *iv.lo && c.strict)) {
        iv.lo_strict = iv.lo && bound == *iv.lo ? (iv.lo_strict || c.strict) : c.strict;
        iv.lo = bound;
      }
    } else {
      if (!iv.hi || bound < *iv.hi || (bound == *iv.hi && c.strict)) {
        iv.hi_strict = iv.hi && bound == *iv.hi ? (iv.hi_strict || c.strict) : c.strict;
        iv.hi = bound;
      }
    }
  }
  return iv;
}

Interval variable_range(const std::vector<LinearConstraint>& cs, std::size_t n, std::size_t i) {
  // move variable i to position 0 and eliminate the rest
  std::vector<LinearConstraint> perm;
  for (auto c : cs) {
    c.a.resize(n, Rational(0));
    std::swap(c.a[0], c.a[i]);
    perm.push_back(std::move(c));
  }
  Elimination e = fourier_motzkin(std::move(perm), n);
  if (!e.feasible) {
    Interval iv;
    iv.lo = Rational(1);
    iv.hi = Rational(0);
    return iv;
  }
  return e.range(0, {});
}

}  // namespace llterm
