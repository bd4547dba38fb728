#include "schemelab/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace schemelab {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

const std::map<std::string, std::set<std::string>>& kind_schemas() {
  static const std::map<std::string, std::set<std::string>> schemas = {
      {"fem-converge",
       {"kind", "mesh", "problem", "levels", "solver_tol", "cauchy_tol", "window"}},
      {"ift-solve",
       {"kind", "problem", "samples", "xmin", "xmax", "x", "tol", "max_iter", "window"}},
      {"ift-domain", {"kind", "ray", "steps", "tol", "max_iter", "window"}},
      {"frobenius", {"kind", "problem", "x", "y", "grids", "tol", "max_iter", "window"}},
      {"probe", {"kind", "target", "point", "h0", "halvings", "jump_threshold"}},
      {"counterexample", {"kind", "x", "y", "kmax", "tol", "max_index", "trace_t"}},
  };
  return schemas;
}

}  // namespace

std::string ExperimentConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for '" + key + "' in [" + name + "]");
  }
}

int ExperimentConfig::get_int(const std::string& key, int fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    size_t pos = 0;
    const int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value for '" + key + "' in [" + name + "]");
  }
}

std::vector<double> ExperimentConfig::get_list(const std::string& key,
                                               const std::vector<double>& fallback) const {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stod(trim(cell)));
    } catch (const std::exception&) {
      throw ConfigError("config: bad list value for '" + key + "' in [" + name + "]");
    }
  }
  if (out.empty()) throw ConfigError("config: empty list for '" + key + "' in [" + name + "]");
  return out;
}

std::vector<ExperimentConfig> parse_config(std::istream& in) {
  std::vector<ExperimentConfig> experiments;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config: unterminated section header at line " + std::to_string(lineno));
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) throw ConfigError("config: empty section name at line " + std::to_string(lineno));
      if (!names.insert(name).second) throw ConfigError("config: duplicate section [" + name + "]");
      experiments.push_back(ExperimentConfig{name, "", {}});
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected 'key = value' at line " + std::to_string(lineno));
    if (experiments.empty())
      throw ConfigError("config: key outside any [section] at line " + std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: empty key or value at line " + std::to_string(lineno));
    auto& exp = experiments.back();
    if (!exp.params.emplace(key, value).second)
      throw ConfigError("config: duplicate key '" + key + "' in [" + exp.name + "]");
    if (key == "kind") exp.kind = value;
  }
  return experiments;
}

std::vector<ExperimentConfig> parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::vector<ExperimentConfig> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  return parse_config(in);
}

void validate_config(const std::vector<ExperimentConfig>& experiments) {
  const auto& schemas = kind_schemas();
  for (const auto& exp : experiments) {
    if (exp.kind.empty()) throw ConfigError("config: [" + exp.name + "] is missing 'kind'");
    const auto it = schemas.find(exp.kind);
    if (it == schemas.end()) throw ConfigError("config: unknown kind '" + exp.kind + "' in [" + exp.name + "]");
    for (const auto& [key, value] : exp.params) {
      (void)value;
      if (!it->second.count(key))
        throw ConfigError("config: unknown key '" + key + "' for kind '" + exp.kind + "' in [" +
                          exp.name + "]");
    }
  }
}

std::vector<std::string> known_kinds() {
  std::vector<std::string> kinds;
  for (const auto& [kind, keys] : kind_schemas()) {
    (void)keys;
    kinds.push_back(kind);
  }
  return kinds;
}

}  // namespace schemelab
