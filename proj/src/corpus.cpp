#include <llterm/corpus.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace llterm {

namespace fs = std::filesystem;

std::optional<Outcome> parse_outcome(const std::string& s) {
  if (s == "TERMINATES") return Outcome::Terminates;
  if (s == "NONTERMINATING") return Outcome::NonTerminating;
  if (s == "UNKNOWN") return Outcome::Unknown;
  return std::nullopt;
}

namespace {

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
  return s;
}

}  // namespace

CorpusLoop load_corpus_loop(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  CorpusLoop c;
  c.path = path;
  c.name = fs::path(path).stem().string();
  c.source = ss.str();
  c.program = parse_loop(c.source);
  std::istringstream lines(c.source);
  for (std::string line; std::getline(lines, line);) {
    line = trim(line);
    if (line.rfind('#', 0) != 0) continue;
    line = trim(line.substr(1));
    if (line.rfind("expect:", 0) == 0) {
      c.expected = parse_outcome(trim(line.substr(7)));
    } else if (line.rfind("tags:", 0) == 0) {
      std::istringstream t(line.substr(5));
      for (std::string tag; std::getline(t, tag, ',');)
        if (!trim(tag).empty()) c.tags.push_back(trim(tag));
    }
  }
  return c;
}

std::vector<CorpusLoop> load_corpus(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".loop") paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusLoop> out;
  for (const auto& p : paths) out.push_back(load_corpus_loop(p));
  return out;
}

std::vector<IntVector> truth_points(std::size_t d, long radius, std::size_t samples, unsigned seed) {
  if (d <= 2) return box_points(Box(d, {-radius, radius}));
  std::set<IntVector> pts;
  for (auto& p : box_points(Box(d, {-2, 2}))) pts.insert(std::move(p));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coord(-radius, radius);
  for (std::size_t i = 0; i < samples; ++i) {
    IntVector u(d);
    for (auto& x : u) x = coord(rng);
    pts.insert(std::move(u));
  }
  return {pts.begin(), pts.end()};
}

GroundTruth ground_truth(const WitnessSet& w, const std::vector<IntVector>& points, unsigned long N,
                         const DecisionConfig& cfg) {
  GroundTruth t;
  const LoopProgram& p = w.reduced().original;
  for (const auto& u : points) {
    ++t.points;
    PointCertificate c = certify_point(w, u, cfg);
    if (c.status == CertStatus::Certified) {
      ++t.ent;
      if (!t.ent_point) t.ent_point = u;
      continue;
    }
    if (c.status == CertStatus::Refuted)
      ++t.refuted;
    else
      ++t.inconclusive;
    if (run(p, u, N).outcome == RunOutcome::Survived) {
      ++t.survived;
      if (!t.survivor) t.survivor = u;
    }
  }
  return t;
}

Agreement check_agreement(const WitnessSet& w, const Verdict& v, const GroundTruth& t, unsigned long N,
                          const DecisionConfig& cfg) {
  Agreement a;
  auto show = [](const IntVector& u) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
    os << ')';
    return os.str();
  };
  switch (v.outcome) {
    case Outcome::Terminates:
      if (t.ent_point) {
        a.contradiction = true;
        a.detail = "certified eventually non-terminating point " + show(*t.ent_point);
      } else if (t.survivor) {
        a.contradiction = true;
        a.detail = "point " + show(*t.survivor) + " survives " + std::to_string(N) + " steps";
      } else {
        a.detail = "all " + std::to_string(t.points) + " points exit";
      }
      break;
    case Outcome::NonTerminating: {
      PointCertificate c = certify_point(w, *v.witness, cfg);
      if (c.status != CertStatus::Certified) {
        a.contradiction = true;
        a.detail = "witness fails independent certification: " + c.reason;
        break;
      }
      Trace tr = run(w.reduced().original, c.nt_point, std::min<unsigned long>(N, 2000));
      if (tr.outcome != RunOutcome::Survived) {
        a.contradiction = true;
        a.detail = "state after m steps exits at step " + std::to_string(tr.steps);
        break;
      }
      a.detail = "witness " + show(*v.witness) + " certified, m = " + std::to_string(c.m);
      break;
    }
    case Outcome::Unknown: a.detail = "undecided: " + v.reason; break;
  }
  return a;
}

CorpusReport run_corpus(const std::vector<CorpusLoop>& loops, const DecisionConfig& cfg, unsigned long N, long radius,
                        std::size_t samples, unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusReport rep;
  rep.results.resize(loops.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < loops.size();) {
      auto s0 = std::chrono::steady_clock::now();
      const CorpusLoop& c = loops[i];
      CorpusResult& r = rep.results[i];
      r.name = c.name;
      r.tags = c.tags;
      WitnessSet w = WitnessSet::build(c.program, cfg.witness);
      r.verdict = analyze(w, cfg);
      if (w.supported()) r.truth = ground_truth(w, truth_points(c.program.dim, radius, samples), N, cfg);
      r.agreement = check_agreement(w, r.verdict, r.truth, N, cfg);
      r.expectation_met = !c.expected || r.verdict.outcome == Outcome::Unknown || *c.expected == r.verdict.outcome;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& r : rep.results) {
    rep.decided += r.verdict.outcome != Outcome::Unknown;
    rep.contradictions += r.agreement.contradiction;
    rep.expectation_mismatches += !r.expectation_met;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace llterm
