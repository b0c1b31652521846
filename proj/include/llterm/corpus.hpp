#pragma once
// Golden corpus: loading, per-point ground truth and agreement with analyze.

#include <llterm/decision.hpp>
#include <llterm/simulator.hpp>

#include <optional>
#include <string>
#include <vector>

namespace llterm {

struct CorpusLoop {
  std::string name, path, source;
  LoopProgram program;
  std::optional<Outcome> expected;  // from a "# expect: ..." header line
  std::vector<std::string> tags;    // from a "# tags: a, b" header line
};

CorpusLoop load_corpus_loop(const std::string& path);
// Every *.loop file of a directory, sorted by name.
std::vector<CorpusLoop> load_corpus(const std::string& dir);

// Whole box for d <= 2; for larger d the box [-2, 2]^d plus `samples` random points.
std::vector<IntVector> truth_points(std::size_t d, long radius = 20, std::size_t samples = 400, unsigned seed = 1);

struct GroundTruth {
  std::size_t points = 0, ent = 0, refuted = 0, inconclusive = 0;
  std::size_t survived = 0;  // uncertified points still inside the guard after N steps
  std::optional<IntVector> ent_point;
  std::optional<IntVector> survivor;
};

GroundTruth ground_truth(const WitnessSet& w, const std::vector<IntVector>& points, unsigned long N = 10000,
                         const DecisionConfig& cfg = {});

struct Agreement {
  bool contradiction = false;
  std::string detail;
};

Agreement check_agreement(const WitnessSet& w, const Verdict& v, const GroundTruth& t, unsigned long N = 10000,
                          const DecisionConfig& cfg = {});

struct CorpusResult {
  std::string name;
  std::vector<std::string> tags;
  Verdict verdict;
  GroundTruth truth;
  Agreement agreement;
  bool expectation_met = true;
  double seconds = 0;
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  std::size_t decided = 0, contradictions = 0, expectation_mismatches = 0;
  double seconds = 0;
  double decided_fraction() const { return results.empty() ? 0.0 : double(decided) / results.size(); }
};

CorpusReport run_corpus(const std::vector<CorpusLoop>& loops, const DecisionConfig& cfg = {}, unsigned long N = 10000,
                        long radius = 20, std::size_t samples = 400, unsigned threads = 1);

std::optional<Outcome> parse_outcome(const std::string& s);

}  // namespace llterm
