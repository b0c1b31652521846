#include <llterm/config.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace llterm {

namespace {

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
  return s;
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + " expects an integer, got '" + v + "'");
  }
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + " expects a number, got '" + v + "'");
  }
}

}  // namespace

std::vector<long> parse_long_list(const std::string& s) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::vector<long> out;
  std::istringstream in(t);
  for (std::string item; std::getline(in, item, ',');) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_long("list", item));
  }
  return out;
}

void Config::apply_text(const std::string& text) {
  std::istringstream in(text);
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), val = unquote(trim(line.substr(eq + 1)));
    if (key == "radius_schedule") {
      decision.radius_schedule = parse_long_list(val);
    } else if (key == "m_max") {
      decision.m_max = static_cast<unsigned long>(to_long(key, val));
    } else if (key == "precision_floor") {
      decision.witness.torus.margin = to_double(key, val);
    } else if (key == "lattice_c") {
      decision.witness.relations.c = to_double(key, val);
    } else if (key == "saturation_doublings") {
      decision.witness.relations.audit_doublings = static_cast<unsigned>(to_long(key, val));
    } else if (key == "node_limit") {
      decision.node_limit = static_cast<std::size_t>(to_long(key, val));
    } else if (key == "format") {
      format = val;
    } else if (key == "threads") {
      threads = static_cast<unsigned>(to_long(key, val));
    } else {
      throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  validate();
}

void Config::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_text(ss.str());
}

void Config::apply_environment() {
  if (const char* s = std::getenv("LLTERM_THREADS")) {
    long n = to_long("LLTERM_THREADS", s);
    if (n < 1) throw ConfigError("LLTERM_THREADS must be positive");
    threads = static_cast<unsigned>(n);
  }
}

void Config::validate() const {
  const auto& r = decision.radius_schedule;
  if (r.empty()) throw ConfigError("radius_schedule must not be empty");
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] <= 0 || (i > 0 && r[i] <= r[i - 1]))
      throw ConfigError("radius_schedule must be positive and strictly increasing");
  if (decision.m_max && *decision.m_max == 0) throw ConfigError("m_max must be positive");
  if (!(decision.witness.torus.margin > 0 && decision.witness.torus.margin < 1))
    throw ConfigError("precision_floor must lie in (0, 1)");
  if (!(decision.witness.relations.c > 0)) throw ConfigError("lattice_c must be positive");
  if (decision.node_limit == 0) throw ConfigError("node_limit must be positive");
  if (format != "text" && format != "json") throw ConfigError("format must be text or json");
  if (threads == 0) throw ConfigError("threads must be positive");
}

}  // namespace llterm
