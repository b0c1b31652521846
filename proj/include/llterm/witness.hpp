#pragma once

#include <llterm/loop.hpp>
#include <llterm/relations.hpp>
#include <llterm/spectral.hpp>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace llterm {

enum class Membership { In, Out, Inconclusive };
enum class TorusSign { NonNeg, Neg, Inconclusive };
std::string to_string(Membership m);
std::string to_string(TorusSign s);

// A real or complex algebraic value with enclosures on demand and an exact
// form for the rare comparisons that enclosures cannot settle.
struct ExactValue {
  std::function<Ball(long)> enclose;
  std::function<AlgebraicNumber()> exact;
  bool zero = true;
  static ExactValue of(const AlgebraicNumber& x);
  static ExactValue of(const FieldElement& x, std::size_t embedding);
  static ExactValue of(const Rational& x) { return of(AlgebraicNumber(x)); }
};

// Sign of a nonzero field element under a real embedding (0 only for zero).
int embedded_sign(const FieldElement& x, std::size_t embedding);

struct TorusOptions {
  std::size_t max_boxes = 20000;
  double margin = 1e-9;  // relative band around 0 where branch-and-bound gives up
};

struct TorusMinResult {
  TorusSign sign = TorusSign::Inconclusive;
  double estimate = 0;   // approximate minimum
  Rational lower_bound;  // certified lower bound on the minimum when NonNeg
  bool boundary = false;  // the minimum is exactly zero
  std::string method;
};

// Sign of min over z in T of a + sum_j (b_j z_j + conj(b_j z_j)), a real.
TorusMinResult torus_min(const ExactValue& a, const std::vector<ExactValue>& b, const TorusGroup& T,
                         const TorusOptions& opt = {});

enum class CaseTag { I, II, III };
std::string to_string(CaseTag t);

// Shape of the ENT condition for one modulus class.
struct EntPiece {
  std::size_t cls = 0;
  CaseTag tag = CaseTag::II;
  std::optional<std::size_t> rho;          // positive real eigenvalue
  unsigned rho_index = 0;
  std::vector<std::size_t> complex_members;  // upper representatives
  unsigned top_level = 0;                  // highest power of n present in the class
};
EntPiece classify_class(const SpectralData& spec, std::size_t cls);

// Rational equations (one row per power-basis coordinate) expressing that the
// listed families have vanishing coefficient vectors at the listed levels.
std::vector<RatVector> vanishing_rows(const SpectralData& spec, const CoefficientData& c, std::size_t family,
                                      unsigned level);
struct ZeroSet {
  std::vector<RatVector> equations;
  bool contains(const RatVector& v) const;
};
ZeroSet zero_set(const SpectralData& spec, const CoefficientData& c);
// Equations of ZERO_i: every family with a member in class i vanishes.
ZeroSet class_zero_set(const SpectralData& spec, const CoefficientData& c, std::size_t cls);
std::optional<std::size_t> dominant_component(const SpectralData& spec, const CoefficientData& c, const RatVector& v);

struct WitnessConfig {
  RelationOptions relations;
  TorusOptions torus;
};

// Homogenized, depowered program shared by all guard rows.
struct ReducedLoop {
  LoopProgram original;
  LoopProgram homogenized;
  unsigned long L = 1;
  IntMatrix AL;  // homogenized update to the power L
  SpectralData spec;
  SupportVerdict support;
  std::vector<ReductionCertificate> chain;
};

// One guard row of the homogenized program at one phase of the depowered loop:
// the sequence q -> b^T AL^q v with b^T = row^T A_h^phase.
struct GuardComponent {
  std::size_t row = 0, phase = 0;
  RatVector b;
  CoefficientData coeffs;
};

struct LevelTorus {
  std::vector<std::size_t> members;  // complex eigenvalues (upper) with index > level
  std::vector<AlgebraicNumber> mu;   // members normalized by the positive real eigenvalue
  RelationLattice lattice;
  TorusGroup group;
};

enum class PieceKind { Zero, Ladder, Torus, Oscillating };
std::string to_string(PieceKind k);

struct PieceEval {
  Membership result = Membership::In;
  PieceKind kind = PieceKind::Zero;
  std::size_t cls = 0;
  unsigned level = 0;
  TorusMinResult torus;  // filled for PieceKind::Torus
  std::string note;
};

class WitnessSet {
 public:
  static WitnessSet build(const LoopProgram& p, const WitnessConfig& cfg = {});

  const ReducedLoop& reduced() const { return *red_; }
  const SpectralData& spec() const { return red_->spec; }
  bool supported() const { return red_->support.supported; }
  const std::vector<GuardComponent>& components() const { return comps_; }
  const std::vector<EntPiece>& pieces() const { return pieces_; }
  const WitnessConfig& config() const { return cfg_; }
  const LevelTorus& torus(std::size_t cls, unsigned level) const;

  // v in homogenized coordinates
  PieceEval evaluate(std::size_t comp, const RatVector& v) const;
  Membership membership_homogeneous(const RatVector& v) const;
  // u in the original program's coordinates (slice at the constant coordinate 1)
  Membership membership(const IntVector& u) const;
  Membership membership(const RatVector& u) const;
  std::vector<PieceEval> explain(const RatVector& u) const;
  RatVector lift(const RatVector& u) const;

 private:
  std::shared_ptr<const ReducedLoop> red_;
  std::vector<GuardComponent> comps_;
  std::vector<EntPiece> pieces_;
  WitnessConfig cfg_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<LevelTorus>> tori;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace llterm
