// llterm: termination analysis of affine integer loops.

#include <llterm/config.hpp>
#include <llterm/corpus.hpp>
#include <llterm/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <iostream>
#include <sstream>

using namespace llterm;

namespace {

constexpr int kInputError = 1;
constexpr int kUnknown = 2;

IntVector parse_point(const std::string& s, std::size_t dim) {
  IntVector u;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      u.emplace_back(item.find_first_not_of(" ") == std::string::npos ? "" : item.substr(item.find_first_not_of(" ")));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + item + "'");
    }
  }
  if (u.size() != dim)
    throw std::invalid_argument("expected " + std::to_string(dim) + " values, got " + std::to_string(u.size()));
  return u;
}

Box parse_box(const std::string& s, std::size_t dim) {
  Box b;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    auto c = item.find(':');
    if (c == std::string::npos) throw std::invalid_argument("box entries look like lo:hi");
    b.emplace_back(std::stol(item.substr(0, c)), std::stol(item.substr(c + 1)));
  }
  if (b.size() == 1 && dim > 1) b.assign(dim, b[0]);
  if (b.size() != dim) throw std::invalid_argument("box has the wrong number of ranges");
  return b;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, sep);)
    if (item.find_first_not_of(' ') != std::string::npos) out.push_back(item);
  return out;
}

IntMatrix parse_matrix(const std::string& s) {
  std::vector<IntVector> rows;
  for (const auto& r : split(s, ';')) rows.push_back(parse_point(r, split(r, ',').size()));
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// "c_n,...,c_0@re,im;..."
std::vector<AlgebraicNumber> parse_tuple(const std::string& s) {
  std::vector<AlgebraicNumber> out;
  for (const auto& item : split(s, ';')) {
    auto at = item.find('@');
    if (at == std::string::npos) throw std::invalid_argument("tuple entries look like c_n,...,c_0@re,im");
    IntVector c = parse_point(item.substr(0, at), split(item.substr(0, at), ',').size());
    std::reverse(c.begin(), c.end());
    IntPolynomial poly(c);
    if (poly.degree() < 1) throw std::invalid_argument("constant polynomial in tuple");
    auto near = split(item.substr(at + 1), ',');
    if (near.size() != 2) throw std::invalid_argument("location must be re,im");
    std::complex<double> z(std::stod(near[0]), std::stod(near[1]));
    auto roots = isolate_roots(poly);
    auto best = std::min_element(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
      return std::abs(a.root.approx() - z) < std::abs(b.root.approx() - z);
    });
    if (best->root.is_zero()) throw std::invalid_argument("zero is not allowed in a relation tuple");
    out.push_back(best->root);
  }
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Termination of affine integer loops"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string config_file;
  std::string format;
  unsigned threads = 0;
  app.add_option("--config", config_file, "TOML-style configuration file")->check(CLI::ExistingFile);
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "worker threads (LLTERM_THREADS overrides)");

  std::string file, radius, init, box, point;
  std::optional<unsigned long> m_max;
  unsigned long max_steps = 10000;
  bool record = false, cycles = false;
  long truth_radius = 20;
  std::size_t samples = 400;

  auto* analyze_cmd = app.add_subcommand("analyze", "decide termination over the integers");
  analyze_cmd->add_option("file", file, "loop file (text or JSON)")->required();
  analyze_cmd->add_option("--radius-schedule", radius, "comma-separated search radii");
  analyze_cmd->add_option("--m-max", m_max, "restart horizon for refutations");

  auto* sim_cmd = app.add_subcommand("simulate", "run the loop exactly");
  sim_cmd->add_option("file", file)->required();
  auto* init_opt = sim_cmd->add_option("--init", init, "initial state v1,v2,...");
  auto* box_opt = sim_cmd->add_option("--box", box, "lo:hi per variable (one range applies to all)");
  init_opt->excludes(box_opt);
  sim_cmd->add_option("--max-steps", max_steps);
  sim_cmd->add_flag("--record", record, "include every visited state");
  sim_cmd->add_flag("--detect-cycles", cycles, "stop when a state repeats");
  std::string sim_format = "csv";
  sim_cmd->add_option("--output", sim_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* spec_cmd = app.add_subcommand("spectrum", "eigenvalues and modulus classes of the reduced loop");
  spec_cmd->add_option("file", file)->required();
  auto* rel_cmd = app.add_subcommand("relations", "multiplicative relation lattices");
  std::string matrix, tuple;
  auto* rel_file = rel_cmd->add_option("file", file, "loop file: lattices of every torus condition");
  auto* rel_matrix = rel_cmd->add_option("--matrix", matrix, "rows separated by ';', entries by ','");
  auto* rel_tuple = rel_cmd->add_option("--tuple", tuple,
                                        "algebraic numbers 'c_n,...,c_0@re,im' separated by ';' (the root of "
                                        "the polynomial nearest to re+im*i)");
  rel_file->excludes(rel_matrix)->excludes(rel_tuple);
  rel_matrix->excludes(rel_tuple);
  rel_cmd->require_option(1);
  auto* wit_cmd = app.add_subcommand("witness", "witness set structure and point membership");
  wit_cmd->add_option("file", file)->required();
  wit_cmd->add_option("--point", point, "test membership of v1,v2,...");
  auto* corpus_cmd = app.add_subcommand("corpus", "analyze a directory of loops against simulation ground truth");
  std::string dir;
  corpus_cmd->add_option("dir", dir)->required()->check(CLI::ExistingDirectory);
  corpus_cmd->add_option("--max-steps", max_steps);
  corpus_cmd->add_option("--radius", truth_radius, "ground-truth box radius");
  corpus_cmd->add_option("--samples", samples, "random points for d >= 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  Config cfg;
  try {
    if (!config_file.empty()) cfg.apply_file(config_file);
    if (!format.empty()) cfg.format = format;
    if (threads) cfg.threads = threads;
    if (!radius.empty()) cfg.decision.radius_schedule = parse_long_list(radius);
    if (m_max) cfg.decision.m_max = m_max;
    cfg.apply_environment();
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  const bool json = cfg.format == "json";

  try {
    if (*corpus_cmd) {
      auto loops = load_corpus(dir);
      CorpusReport rep = run_corpus(loops, cfg.decision, max_steps, truth_radius, samples, cfg.threads);
      if (json) {
        Json j;
        Json rows = Json::array();
        for (const auto& r : rep.results)
          rows.push_back({{"name", r.name},
                          {"tags", r.tags},
                          {"outcome", to_string(r.verdict.outcome)},
                          {"reason", r.verdict.reason},
                          {"points", r.truth.points},
                          {"ent", r.truth.ent},
                          {"refuted", r.truth.refuted},
                          {"inconclusive", r.truth.inconclusive},
                          {"contradiction", r.agreement.contradiction},
                          {"detail", r.agreement.detail},
                          {"expectation_met", r.expectation_met},
                          {"seconds", r.seconds}});
        j["loops"] = std::move(rows);
        j["decided"] = rep.decided;
        j["total"] = rep.results.size();
        j["contradictions"] = rep.contradictions;
        j["expectation_mismatches"] = rep.expectation_mismatches;
        j["seconds"] = rep.seconds;
        print_json(j);
      } else {
        for (const auto& r : rep.results)
          std::cout << r.name << ": " << to_string(r.verdict.outcome)
                    << (r.verdict.outcome == Outcome::Unknown ? " (" + r.verdict.reason + ")" : "") << " | "
                    << r.truth.points << " points, " << r.truth.ent << " ENT, " << r.truth.refuted << " refuted, "
                    << r.truth.inconclusive << " open | " << (r.agreement.contradiction ? "CONTRADICTION: " : "")
                    << r.agreement.detail << (r.expectation_met ? "" : " | EXPECTATION MISMATCH") << '\n';
        std::cout << rep.decided << "/" << rep.results.size() << " decided, " << rep.contradictions
                  << " contradictions, " << rep.seconds << " s\n";
      }
      return rep.contradictions == 0 ? 0 : kUnknown;
    }

    if (*rel_cmd && file.empty()) {
      std::vector<std::vector<AlgebraicNumber>> tuples;
      if (!tuple.empty()) {
        tuples.push_back(parse_tuple(tuple));
      } else {
        // per modulus class, the complex eigenvalues scaled to the unit circle
        SpectralData spec = eigendecompose(parse_matrix(matrix));
        for (const auto& c : spec.classes) {
          std::vector<AlgebraicNumber> mu;
          for (std::size_t m : c.complex_upper)
            mu.push_back(alg_div(spec.eigenvalues[m].value, alg_abs(spec.eigenvalues[m].value)));
          if (!mu.empty()) tuples.push_back(std::move(mu));
        }
      }
      Json out = Json::array();
      for (const auto& t : tuples) out.push_back(relations_json(t, cfg.decision.witness.relations));
      if (json) {
        print_json(out);
      } else {
        if (out.empty()) std::cout << "no complex eigenvalues\n";
        for (const auto& r : out) {
          std::cout << r["mu"].size() << " numbers, relation rank " << r["rank"] << ", torus dimension "
                    << r["torus_free_dim"] << ", audit " << (r["audit_stable"].get<bool>() ? "stable" : "UNSTABLE")
                    << '\n';
          for (const auto& b : r["basis"]) std::cout << "  relation " << b.dump() << '\n';
        }
      }
      return 0;
    }

    LoopProgram p = load_loop_file(file);

    if (*sim_cmd) {
      RunOptions ro{record, cycles};
      std::vector<Trace> traces;
      if (!box.empty())
        traces = classify_box(p, parse_box(box, p.dim), max_steps, ro, cfg.threads);
      else
        traces.push_back(run(p, init.empty() ? IntVector(p.dim, Integer(0)) : parse_point(init, p.dim), max_steps, ro));
      if (json || sim_format == "json") {
        Json a = Json::array();
        for (const auto& t : traces) a.push_back(to_json(t));
        print_json(traces.size() == 1 ? a[0] : a);
      } else {
        std::cout << "initial,outcome,steps,violated_row,final_state\n";
        auto vec = [](const IntVector& v) {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
          return s;
        };
        for (const auto& t : traces)
          std::cout << '"' << vec(t.initial) << "\"," << to_string(t.outcome) << ',' << t.steps << ','
                    << (t.violated_row ? std::to_string(*t.violated_row) : "") << ",\"" << vec(t.final_state)
                    << "\"\n";
      }
      return 0;
    }

    WitnessSet w = WitnessSet::build(p, cfg.decision.witness);

    if (*analyze_cmd) {
      Verdict v = analyze(w, cfg.decision);
      if (json)
        print_json(to_json(v));
      else
        std::cout << verdict_text(v);
      return v.outcome == Outcome::Unknown ? kUnknown : 0;
    }
    if (*spec_cmd) {
      Json j = spectrum_json(w.spec());
      j["L"] = w.reduced().L;
      j["supported"] = w.supported();
      if (json) {
        print_json(j);
      } else {
        std::cout << "depower L = " << w.reduced().L << ", minimal polynomial " << j["min_poly"].get<std::string>()
                  << (w.supported() ? "" : " (unsupported: " + w.reduced().support.reason + ")") << '\n';
        for (const auto& c : j["classes"])
          std::cout << "class |lambda| = " << c["modulus"].get<double>() << ": " << c["members"].size()
                    << " eigenvalues, max index " << c["max_index"] << (c["positive_real"].is_null() ? "" : ", positive real")
                    << ", " << c["complex_pairs"] << " complex pairs\n";
      }
      return 0;
    }
    if (*rel_cmd) {
      Json j = relations_json(w);
      if (json) {
        print_json(j);
      } else {
        if (j.empty()) std::cout << "no torus conditions\n";
        for (const auto& r : j)
          std::cout << "class " << r["class"] << " level " << r["level"] << ": " << r["mu"].size()
                    << " normalized eigenvalues, relation rank " << r["rank"] << ", torus dimension "
                    << r["torus_free_dim"] << ", audit " << (r["audit_stable"].get<bool>() ? "stable" : "UNSTABLE")
                    << '\n';
      }
      return 0;
    }
    if (*wit_cmd) {
      Json j = witness_json(w);
      if (!point.empty()) j["membership"] = membership_json(w, parse_point(point, p.dim));
      if (json) {
        print_json(j);
      } else {
        std::cout << "L = " << w.reduced().L << ", " << w.components().size() << " guard components, "
                  << (w.supported() ? "supported" : "unsupported") << '\n';
        for (const auto& pc : j["pieces"])
          std::cout << "class " << pc["class"] << ": case " << pc["case"].get<std::string>() << ", top level "
                    << pc["top_level"] << '\n';
        if (j.contains("membership")) std::cout << "membership: " << j["membership"]["membership"].get<std::string>() << '\n';
      }
      return 0;
    }
  } catch (const LoopParseError& e) {
    std::cerr << file << ":" << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
