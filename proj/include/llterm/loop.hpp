#pragma once

#include <llterm/matrix.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace llterm {

struct ReductionCertificate {
  enum class Kind { Homogenize, SplitRow, Depower };
  Kind kind = Kind::Homogenize;
  unsigned long parameter = 0;  // row index for SplitRow, L for Depower
  std::string recovery;         // how a witness set of the reduced program maps back
};

std::string kind_name(ReductionCertificate::Kind k);

// x <- u; while B x >= c do x <- A x + a
struct LoopProgram {
  std::size_t dim = 0;
  IntMatrix B;
  IntVector c;
  IntMatrix A;
  IntVector a;
  std::vector<std::string> vars;
  std::vector<ReductionCertificate> provenance;

  std::size_t guard_count() const { return B.rows(); }
  bool homogeneous() const;
  bool single_guard() const { return B.rows() == 1; }
  void validate() const;  // throws std::invalid_argument on inconsistent shapes
};

struct LoopParseError : std::runtime_error {
  LoopParseError(const std::string& msg, int line, int column);
  int line, column;
};

LoopProgram parse_loop(const std::string& text);
LoopProgram parse_loop_json(const std::string& text);
// Dispatches on content: JSON documents start with '{'.
LoopProgram parse_loop_any(const std::string& text);
LoopProgram load_loop_file(const std::string& path);
std::string to_loop_text(const LoopProgram& p);
std::string to_loop_json(const LoopProgram& p);

std::pair<LoopProgram, ReductionCertificate> homogenize(const LoopProgram& p);
std::vector<LoopProgram> split_rows(const LoopProgram& p);
// lcm of the orders of all eigenvalue quotients that are roots of unity.
unsigned long compute_L(const IntMatrix& A);
std::pair<LoopProgram, ReductionCertificate> depower(const LoopProgram& p, unsigned long L);

}  // namespace llterm
