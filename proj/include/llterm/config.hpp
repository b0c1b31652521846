#pragma once
// Tool configuration: defaults, TOML-style file, environment override.

#include <llterm/decision.hpp>

#include <stdexcept>
#include <string>

namespace llterm {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  DecisionConfig decision;
  std::string format = "text";
  unsigned threads = 1;

  // "key = value" lines; '#' starts a comment, [section] headers are ignored.
  // Keys: radius_schedule, m_max, precision_floor, lattice_c, saturation_doublings,
  // node_limit, format, threads.
  void apply_text(const std::string& text);
  void apply_file(const std::string& path);
  // LLTERM_THREADS wins over the file and flags.
  void apply_environment();
  void validate() const;
};

std::vector<long> parse_long_list(const std::string& s);

}  // namespace llterm
