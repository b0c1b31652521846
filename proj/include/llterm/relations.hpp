#pragma once

#include <llterm/algebraic.hpp>
#include <llterm/lattice.hpp>

#include <complex>
#include <optional>
#include <vector>

namespace llterm {

struct RelationOptions {
  double c = 2.0;       // exponent constant in the Masser-type bound
  long floor = 8;       // smallest search radius
  // Cap on the number of lattice points examined per radius. The theoretical
  // bound is astronomically large for s >= 2, so the radius actually searched
  // is the largest one whose box stays under this cap.
  std::size_t enumeration_limit = 200000;
  int audit_doublings = 1;
};

struct RelationLattice {
  std::size_t s = 0;
  IntMatrix basis;         // Hermite normal form, one relation per row
  Integer bound;           // the Masser-type bound M
  long searched = 0;       // radius actually enumerated
  bool capped = false;     // searched < bound
  long audit_radius = 0;
  bool audit_stable = true;
  std::size_t rank() const { return basis.rows(); }
};

// ceil((D log H)^(c s^2)) floored at `floor`; D, H are the maximal degree and height.
Integer masser_bound(const std::vector<AlgebraicNumber>& mu, double c = 2.0, long floor = 8);
// Exact test of mu^v = 1.
bool satisfies_relation(const std::vector<AlgebraicNumber>& mu, const IntVector& v);
RelationLattice relation_lattice(const std::vector<AlgebraicNumber>& mu, const Integer& M,
                                 const RelationOptions& opt = {});
RelationLattice relation_lattice(const std::vector<AlgebraicNumber>& mu, const RelationOptions& opt = {});

// {z in T^s : z^v = 1 for all relations v}. With U R V = D (Smith form) and
// z_j = exp(2 pi i theta_j), theta = V phi where phi_i = m_i / d_i for i < rank
// and phi_i is free for i >= rank.
struct TorusGroup {
  std::size_t s = 0;
  IntMatrix relations;
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // d_0 .. d_{rank-1}
  IntMatrix V;                    // s x s, unimodular
  std::size_t free_dim() const { return s - rank; }
  Integer component_count() const;
  // All torsion labels m (0 <= m_i < d_i); throws if there are more than `cap`.
  std::vector<std::vector<long>> components(std::size_t cap = 4096) const;
  // Phase of coordinate j (in turns) for torsion label m and free parameters t.
  double phase(std::size_t j, const std::vector<long>& m, const std::vector<double>& t) const;
  Rational torsion_phase(std::size_t j, const std::vector<long>& m) const;
  long exponent(std::size_t j, std::size_t free_index) const;  // G_{j,i}
  std::vector<std::complex<double>> point(const std::vector<long>& m, const std::vector<double>& t) const;
  bool contains(const std::vector<std::complex<double>>& z, double tol) const;
};

TorusGroup torus_group(const RelationLattice& lat);
TorusGroup torus_group(const IntMatrix& relations, std::size_t s);

// Least n <= n_max with max_j |lambda_j^n - z_j| <= eps, confirmed with ball
// arithmetic (exactly when eps == 0).
std::optional<unsigned long> orbit_approach(const std::vector<AlgebraicNumber>& lambda,
                                            const std::vector<std::complex<double>>& target, double eps,
                                            unsigned long n_max);

}  // namespace llterm
