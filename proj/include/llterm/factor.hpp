#pragma once

#include <llterm/polynomial.hpp>

#include <utility>
#include <vector>

namespace llterm {

struct Factorization {
  Integer unit;  // signed content
  // Irreducible primitive factors with positive leading coefficient.
  std::vector<std::pair<IntPolynomial, int>> factors;
};

// Complete factorization over the rationals. Deterministic ordering:
// increasing degree, then lexicographic coefficients.
Factorization factor(const IntPolynomial& p);

// Irreducible factors of a squarefree primitive polynomial.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& p);

bool is_irreducible(const IntPolynomial& p);

}  // namespace llterm
