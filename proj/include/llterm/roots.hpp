#pragma once

#include <llterm/ball.hpp>
#include <llterm/polynomial.hpp>

#include <vector>

namespace llterm {

// A certified root location: the root lies in the disc |z - center| <= radius
// and the axis-aligned square of half-width radius around center contains no
// other root of the polynomial. Real roots have an exactly real center.
struct RootDisc {
  Ball disc;
  bool real = false;
};

// All complex roots of a squarefree integer polynomial of degree >= 1.
// Order: real roots ascending, then non-real roots by (re, im).
std::vector<RootDisc> isolate_squarefree(const IntPolynomial& p);

// Shrinks the disc until its radius is at most 2^-target_bits, never leaving
// the previous isolating square.
void refine_root(const IntPolynomial& p, RootDisc& root, long target_bits);

// Rigorous enclosure of p(z) for a ball z.
Ball evaluate(const IntPolynomial& p, const Ball& z);

}  // namespace llterm
