#include <llterm/simulator.hpp>

#include <atomic>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <thread>

namespace llterm {

std::string to_string(RunOutcome o) {
  switch (o) {
    case RunOutcome::Exited: return "exited";
    case RunOutcome::Survived: return "survived";
    case RunOutcome::Cycle: return "cycle";
  }
  return "?";
}

IntVector step(const LoopProgram& p, const IntVector& x) {
  IntVector y(p.dim);
  for (std::size_t i = 0; i < p.dim; ++i) {
    y[i] = p.a[i];
    for (std::size_t j = 0; j < p.dim; ++j)
      if (p.A(i, j) != 0) y[i] += p.A(i, j) * x[j];
  }
  return y;
}

IntVector guard_values(const LoopProgram& p, const IntVector& x) {
  IntVector g(p.guard_count());
  for (std::size_t r = 0; r < g.size(); ++r) {
    g[r] = -p.c[r];
    for (std::size_t j = 0; j < p.dim; ++j) g[r] += p.B(r, j) * x[j];
  }
  return g;
}

std::optional<std::size_t> violated_row(const LoopProgram& p, const IntVector& x) {
  for (std::size_t r = 0; r < p.guard_count(); ++r) {
    Integer g = -p.c[r];
    for (std::size_t j = 0; j < p.dim; ++j) g += p.B(r, j) * x[j];
    if (g < 0) return r;
  }
  return std::nullopt;
}

Trace run(const LoopProgram& p, const IntVector& u, unsigned long max_steps, const RunOptions& opt) {
  if (u.size() != p.dim) throw std::invalid_argument("run: initial state has wrong dimension");
  Trace t;
  t.initial = u;
  IntVector x = u;
  std::set<IntVector> seen;
  for (t.steps = 0;; ++t.steps) {
    if (opt.record) t.states.push_back(x);
    if (auto r = violated_row(p, x)) {
      t.outcome = RunOutcome::Exited;
      t.violated_row = r;
      break;
    }
    if (opt.detect_cycles && !seen.insert(x).second) {
      t.outcome = RunOutcome::Cycle;
      break;
    }
    if (t.steps == max_steps) {
      t.outcome = RunOutcome::Survived;
      break;
    }
    x = step(p, x);
  }
  t.final_state = std::move(x);
  return t;
}

std::vector<IntVector> box_points(const Box& box) {
  std::vector<IntVector> out;
  for (const auto& [lo, hi] : box)
    if (lo > hi) return out;
  IntVector cur;
  for (const auto& [lo, hi] : box) cur.emplace_back(lo);
  for (;;) {
    out.push_back(cur);
    std::size_t i = box.size();
    while (i-- > 0) {
      if (cur[i] < box[i].second) {
        cur[i] += 1;
        break;
      }
      cur[i] = box[i].first;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

unsigned default_threads() {
  if (const char* s = std::getenv("LLTERM_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

std::vector<Trace> classify_box(const LoopProgram& p, const Box& box, unsigned long max_steps, const RunOptions& opt,
                                unsigned threads) {
  if (box.size() != p.dim) throw std::invalid_argument("classify_box: box has wrong dimension");
  auto pts = box_points(box);
  std::vector<Trace> out(pts.size());
  if (threads == 0) threads = default_threads();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pts.size();) out[i] = run(p, pts[i], max_steps, opt);
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace llterm
