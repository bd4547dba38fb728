#ifndef SCHEMELAB_CONFIG_HPP
#define SCHEMELAB_CONFIG_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schemelab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One experiment: a [name] section of flat key = value lines. The `kind`
// key selects the experiment type; the remaining keys are validated
// strictly against the kind's schema before anything runs.
struct ExperimentConfig {
  std::string name;
  std::string kind;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const { return params.count(key) > 0; }
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;
};

// Parses "[section]" headers and "key = value" lines; '#' starts a
// comment. Duplicate sections or keys are errors.
std::vector<ExperimentConfig> parse_config(std::istream& in);
std::vector<ExperimentConfig> parse_config_string(const std::string& text);
std::vector<ExperimentConfig> load_config_file(const std::string& path);

// Known experiment kinds and their allowed keys; throws ConfigError on an
// unknown kind or key so that no experiment starts on a bad bundle.
void validate_config(const std::vector<ExperimentConfig>& experiments);

std::vector<std::string> known_kinds();

}  // namespace schemelab

#endif
