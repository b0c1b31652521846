#pragma once

#include <llterm/matrix.hpp>

#include <optional>

namespace llterm {

// Row Hermite normal form: nonzero rows only, positive pivots, entries above
// each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& rows);

struct SmithForm {
  IntMatrix U, D, V;  // U * M * V = D, U and V unimodular
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // positive, each dividing the next
};
SmithForm smith_normal_form(const IntMatrix& m);

// x0 + span_Z(columns of basis)
struct IntegerCoset {
  IntVector x0;
  IntMatrix basis;  // n x k
  std::size_t dim() const { return basis.cols(); }
  IntVector point(const IntVector& z) const;
};

// All integer x with A x = b, or nullopt if there are none.
std::optional<IntegerCoset> integer_solutions(const RationalMatrix& a, const RatVector& b);

// Whether v lies in the row lattice of an HNF basis.
bool in_row_lattice(const IntMatrix& hnf, const IntVector& v);

// Integer row vector scaled so that entries are coprime integers (for rational rows).
IntVector clear_denominators(const RatVector& v);

}  // namespace llterm
