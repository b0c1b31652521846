#pragma once
// Termination over the integers: integer search in the witness set and
// per-point certificates of eventual non-termination.

#include <llterm/polyhedron.hpp>
#include <llterm/witness.hpp>

#include <optional>
#include <string>
#include <vector>

namespace llterm {

struct DecisionConfig {
  std::vector<long> radius_schedule{4, 32, 256, 2048, 16384};
  std::optional<unsigned long> m_max;      // default 2 d (L + 1)
  std::size_t node_limit = 5000;
  std::optional<long> box_radius;          // fast-path box; default depends on d
  unsigned long max_prefix = 200000;       // longest simulated prefix in a certificate
  unsigned long refutation_horizon = 10000;
  WitnessConfig witness;
};

// Dominance data for one guard row at one phase of the depowered loop.
struct RowCertificate {
  std::size_t row = 0, phase = 0;
  PieceKind kind = PieceKind::Zero;
  std::size_t cls = 0;
  unsigned level = 0;
  std::string modulus;         // |lambda| of the dominant class (decimal)
  int sign = 0;                // +1 eventually positive, 0 zero tail, -1 refuting
  Rational delta;              // certified lower bound of the leading coefficient
  Rational tail_c1, tail_c2;   // lower levels of the dominant class, smaller classes
  std::string ratio;           // upper bound of rho'/rho (decimal)
  unsigned long n0 = 0;        // in steps of the depowered loop
  std::string method;
};

enum class CertStatus { Certified, Refuted, Inconclusive };
std::string to_string(CertStatus s);

struct PointCertificate {
  IntVector point;
  CertStatus status = CertStatus::Inconclusive;
  unsigned long L = 1;
  unsigned long m = 0;                     // the guard holds at every step n >= m
  IntVector nt_point;                      // state after m steps
  unsigned long simulated = 0;             // prefix length checked by simulation
  std::vector<unsigned long> failures;     // observed guard violations (sample)
  std::vector<RowCertificate> rows;
  bool lattice_audit_stable = true;
  std::string reason;
};

PointCertificate certify_point(const WitnessSet& w, const IntVector& u, const DecisionConfig& cfg = {});
PointCertificate certify_point(const LoopProgram& p, const IntVector& u, const DecisionConfig& cfg = {});

enum class SearchStatus { Found, Empty, Exhausted };
std::string to_string(SearchStatus s);

struct SearchStats {
  std::size_t nodes = 0, leaves = 0, open_leaves = 0, candidates = 0, inconclusive_points = 0;
  std::size_t pruned_equalities = 0, pruned_constant = 0, pruned_polyhedron = 0, pruned_bounded = 0;
  long radius = 0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  IntVector point;
  std::optional<PointCertificate> certificate;
  std::vector<std::string> proof;  // one line per pruned branch kind, or per open leaf
  SearchStats stats;
  std::string reason;               // for Exhausted: torus-inconclusive or radius-exhausted
};

SearchResult find_integer_point(const WitnessSet& w, const DecisionConfig& cfg = {});

enum class Outcome { NonTerminating, Terminates, Unknown };
std::string to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<IntVector> witness;
  std::optional<PointCertificate> certificate;
  std::vector<std::string> evidence;
  std::string reason;  // UNKNOWN: torus-inconclusive | radius-exhausted | unsupported-fragment
  struct Audit {
    bool lattice_stable = true;
    std::vector<std::string> flags;
    long radius = 0;
    SearchStats search;
    unsigned long L = 1;
    unsigned long m_max = 0;
    double seconds = 0;
  } audit;
};

Verdict analyze(const LoopProgram& p, const DecisionConfig& cfg = {});
Verdict analyze(const WitnessSet& w, const DecisionConfig& cfg = {});

}  // namespace llterm
