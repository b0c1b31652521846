#pragma once
// Exact execution of affine loops.

#include <llterm/loop.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace llterm {

enum class RunOutcome { Exited, Survived, Cycle };
std::string to_string(RunOutcome o);

struct Trace {
  IntVector initial;
  RunOutcome outcome = RunOutcome::Survived;
  unsigned long steps = 0;            // body executions
  std::optional<std::size_t> violated_row;
  IntVector final_state;
  std::vector<IntVector> states;      // filled when recording
  std::optional<unsigned long> cycle_start;
};

struct RunOptions {
  bool record = false;
  bool detect_cycles = false;
};

IntVector step(const LoopProgram& p, const IntVector& x);
// First guard row violated at x, if any.
std::optional<std::size_t> violated_row(const LoopProgram& p, const IntVector& x);
// Guard row values B x - c.
IntVector guard_values(const LoopProgram& p, const IntVector& x);

Trace run(const LoopProgram& p, const IntVector& u, unsigned long max_steps, const RunOptions& opt = {});

using Box = std::vector<std::pair<long, long>>;
// Lattice points of a box in lexicographic order.
std::vector<IntVector> box_points(const Box& box);
std::vector<Trace> classify_box(const LoopProgram& p, const Box& box, unsigned long max_steps,
                                const RunOptions& opt = {}, unsigned threads = 0);

// Thread count from LLTERM_THREADS, else the hardware count.
unsigned default_threads();

}  // namespace llterm
