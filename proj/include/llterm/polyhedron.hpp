#pragma once
// Exact rational polyhedra: Fourier-Motzkin elimination with strict inequalities.

#include <llterm/numeric.hpp>

#include <optional>
#include <string>
#include <vector>

namespace llterm {

// a . t + b > 0 (strict) or >= 0
struct LinearConstraint {
  RatVector a;
  Rational b;
  bool strict = false;
  bool constant() const;
  // Value at t (exact).
  Rational value(const RatVector& t) const;
  bool holds(const RatVector& t) const;
};

std::string to_string(const LinearConstraint& c);

struct Interval {
  std::optional<Rational> lo, hi;
  bool lo_strict = false, hi_strict = false;
  bool empty() const;
  bool bounded() const { return lo && hi; }
  // Integers in the interval, nullopt if unbounded.
  std::optional<Integer> integer_count() const;
  std::optional<Integer> least_integer() const;
  std::optional<Integer> greatest_integer() const;
};

// stages[k] holds constraints in variables t_0 .. t_{k-1} only; stages[n] is the input.
struct Elimination {
  std::size_t n = 0;
  bool feasible = true;
  std::vector<std::vector<LinearConstraint>> stages;
  std::string conflict;  // the violated constant constraint when infeasible
  // Range of t_k given values for t_0 .. t_{k-1}.
  Interval range(std::size_t k, const RatVector& prefix) const;
};

// Real feasibility of a system of linear constraints in n variables.
Elimination fourier_motzkin(std::vector<LinearConstraint> cs, std::size_t n, std::size_t max_constraints = 4000);

// Bounds of variable i over the real solution set (empty interval if infeasible).
Interval variable_range(const std::vector<LinearConstraint>& cs, std::size_t n, std::size_t i);

}  // namespace llterm
