#pragma once

#include <llterm/number_field.hpp>

#include <optional>
#include <string>
#include <vector>

namespace llterm {

using KMatrix = Matrix<FieldElement>;
using KVector = std::vector<FieldElement>;

// One irreducible factor q of the minimal polynomial. Its roots are the
// embeddings of the generator theta of K = Q[x]/(q).
struct EigenFamily {
  IntPolynomial q;
  unsigned index = 0;  // multiplicity of q in the minimal polynomial
  FieldPtr field;
  KMatrix projector;  // onto the generalized eigenspace of theta, as a polynomial in A
  bool zero() const { return q.degree() == 1 && q.coeff(0) == 0; }
};

struct Eigenvalue {
  std::size_t family = 0, embedding = 0;
  AlgebraicNumber value;
  unsigned index = 0;
  bool real = false;
  int real_sign = 0;       // for real eigenvalues
  std::size_t conjugate = 0;  // embedding index of the complex conjugate in the same family
  std::size_t cls = 0;
};

struct ModulusClass {
  std::vector<std::size_t> members;  // indices into SpectralData::eigenvalues
  std::optional<std::size_t> positive_real, negative_real;
  std::vector<std::size_t> complex_upper;  // one representative (Im > 0) per conjugate pair
  unsigned max_index = 0;
  AlgebraicNumber modulus_squared;
};

struct SpectralData {
  std::size_t dim = 0;
  IntMatrix A;
  RatPolynomial min_poly;
  std::vector<EigenFamily> families;
  std::vector<Eigenvalue> eigenvalues;  // nonzero eigenvalues only
  std::vector<ModulusClass> classes;    // strictly decreasing modulus
  std::size_t min_poly_degree() const { return static_cast<std::size_t>(min_poly.degree()); }
  // Expansion valid from this index on (nilpotent part of the zero eigenvalue has died out).
  std::size_t threshold() const { return dim; }
};

SpectralData eigendecompose(const IntMatrix& A);

struct SupportVerdict {
  bool supported = true;
  std::string reason;
};
SupportVerdict check_supported(const SpectralData& spec, std::size_t dim);
// Whether two distinct eigenvalues have a root-of-unity quotient inside one class
// (only the modulus-class shape is inspected: two reals of opposite sign).
bool has_opposite_reals(const SpectralData& spec);

// b^T A^n = sum over families f, levels k of n^k * sum_sigma sigma(alpha[f][k] theta^n),
// scaled by a positive integer so that every coordinate is an integer.
struct CoefficientData {
  RatVector b;
  Integer scale = 1;
  std::vector<std::vector<KVector>> alpha;  // alpha[family][k], empty for the zero family
  // alpha[f][k] . v
  FieldElement apply(std::size_t f, unsigned k, const RatVector& v) const;
  // Same for every (f, k) at once.
  std::vector<std::vector<FieldElement>> apply_all(const RatVector& v) const;
};

CoefficientData coefficient_vectors(const SpectralData& spec, const RatVector& b);
// Coefficient vector alpha_{lambda,k} under the embedding of eigenvalue e.
std::vector<AlgebraicNumber> coefficient_vector(const SpectralData& spec, const CoefficientData& c, std::size_t e,
                                                unsigned k);
// Exact value of b^T A^n v from the expansion (valid for n >= threshold).
Rational expansion_value(const SpectralData& spec, const CoefficientData& c, const RatVector& v, unsigned long n);

// Component of u in the generalized eigenspace of family f (a vector over K_f).
KVector family_component(const SpectralData& spec, std::size_t f, const RatVector& u);
struct ClassComponent {
  std::size_t cls;
  std::vector<std::pair<std::size_t, KVector>> terms;  // (eigenvalue, P_lambda u over its family field)
};
// Components u_i per modulus class; the last entry (cls == classes.size()) holds the zero eigenvalue part.
std::vector<ClassComponent> project_components(const SpectralData& spec, const RatVector& u);
// Sum of all components, computed exactly through field traces. Equals u.
RatVector sum_of_components(const SpectralData& spec, const RatVector& u);

Rational trace_in(const EigenFamily& f, const FieldElement& x);
std::vector<Rational> stirling_row(unsigned m);  // signed Stirling numbers s(m, 0..m)

}  // namespace llterm
