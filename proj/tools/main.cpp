// Command-line driver: runs experiment bundles from a config file or a
// single experiment through a subcommand. Exit code 0 iff every check of
// every selected experiment passes.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schemelab/config.hpp"
#include "schemelab/experiments.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::vector<std::string> selected;
  std::uint64_t seed = 0;
  bool verbose = false;
};

int run_bundle(std::vector<schemelab::ExperimentConfig> experiments, const CommonArgs& args) {
  if (!args.selected.empty()) {
    std::vector<schemelab::ExperimentConfig> filtered;
    for (const auto& exp : experiments) {
      if (std::find(args.selected.begin(), args.selected.end(), exp.name) != args.selected.end())
        filtered.push_back(exp);
    }
    for (const auto& name : args.selected) {
      const bool found = std::any_of(experiments.begin(), experiments.end(),
                                     [&](const auto& e) { return e.name == name; });
      if (!found) {
        std::cerr << "error: no experiment named '" << name << "' in the config\n";
        return 2;
      }
    }
    experiments = std::move(filtered);
  }

  const schemelab::BundleResult result =
      schemelab::run_experiments(experiments, args.out_dir, args.seed, args.verbose);
  std::cout << result.report_text();
  return result.all_pass() ? 0 : 1;
}

// Builds a one-experiment bundle from subcommand flags.
schemelab::ExperimentConfig single(const std::string& name, const std::string& kind,
                                   std::map<std::string, std::string> params) {
  schemelab::ExperimentConfig cfg;
  cfg.name = name;
  cfg.kind = kind;
  cfg.params = std::move(params);
  cfg.params["kind"] = kind;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy-sequence numerical scheme laboratory"};
  app.require_subcommand(0, 1);

  CommonArgs args;
  app.add_option("--config", args.config_path, "Experiment bundle config file");
  app.add_option("--out", args.out_dir, "Output directory for CSV artifacts and report.txt");
  app.add_option("--experiment", args.selected, "Run only the named experiments (repeatable)");
  app.add_option("--seed", args.seed, "Seed for randomized sampling extensions");
  app.add_flag("--verbose", args.verbose, "Print per-check progress to stderr");

  // Subcommands map one-to-one onto experiment kinds; flag defaults follow
  // the kind defaults. Parent flags (--out, --verbose, ...) remain valid
  // after a subcommand name.
  app.fallthrough();
  auto* fem = app.add_subcommand("fem-converge", "Mesh-refinement convergence study");
  fem->fallthrough();
  std::string fem_problem = "sinsin", fem_mesh = "unit-square";
  int fem_levels = 5;
  fem->add_option("--problem", fem_problem, "sinsin | zero | constant");
  fem->add_option("--mesh", fem_mesh, "unit-square | l-shape");
  fem->add_option("--levels", fem_levels, "Refinement levels");

  auto* ift = app.add_subcommand("ift-solve", "Fixed-point implicit solve with oracles");
  ift->fallthrough();
  std::string ift_problem = "scalar-affine";
  int ift_samples = 20;
  ift->add_option("--problem", ift_problem, "scalar-affine | componentwise");
  ift->add_option("--samples", ift_samples, "Sample count across the x-range");

  auto* domain = app.add_subcommand("ift-domain", "Empirical domain profile along a ray");
  domain->fallthrough();
  std::string domain_steps = "0.1,0.3,0.5,0.7,0.9,1.5";
  double domain_ray = 1.0;
  domain->add_option("--steps", domain_steps, "Comma-separated magnitudes");
  domain->add_option("--ray", domain_ray, "Ray direction (scalar problem)");

  auto* frob = app.add_subcommand("frobenius", "Picard solve of D1 J = f(x, J)");
  frob->fallthrough();
  std::string frob_problem = "exponential", frob_grids = "50,100,200,400";
  frob->add_option("--problem", frob_problem, "exponential | constant");
  frob->add_option("--grids", frob_grids, "Comma-separated grid sizes");

  auto* probe = app.add_subcommand("probe", "Finite-difference smoothness probe");
  probe->fallthrough();
  std::string probe_target = "cubic";
  double probe_point = 0.3;
  probe->add_option("--target", probe_target, "cubic | quadratic | sin | abs");
  probe->add_option("--point", probe_point, "Probe location");

  auto* path = app.add_subcommand("counterexample", "Limit-map jump versus smooth term maps");
  path->fallthrough();
  int path_kmax = 10;
  path->add_option("--kmax", path_kmax, "Largest term index probed at its seams");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<schemelab::ExperimentConfig> experiments;
    if (fem->parsed()) {
      experiments.push_back(single("fem-converge", "fem-converge",
                                   {{"problem", fem_problem},
                                    {"mesh", fem_mesh},
                                    {"levels", std::to_string(fem_levels)}}));
    } else if (ift->parsed()) {
      experiments.push_back(single("ift-solve", "ift-solve",
                                   {{"problem", ift_problem},
                                    {"samples", std::to_string(ift_samples)}}));
    } else if (domain->parsed()) {
      experiments.push_back(single("ift-domain", "ift-domain",
                                   {{"steps", domain_steps},
                                    {"ray", std::to_string(domain_ray)}}));
    } else if (frob->parsed()) {
      experiments.push_back(
          single("frobenius", "frobenius", {{"problem", frob_problem}, {"grids", frob_grids}}));
    } else if (probe->parsed()) {
      experiments.push_back(single("probe", "probe",
                                   {{"target", probe_target},
                                    {"point", std::to_string(probe_point)}}));
    } else if (path->parsed()) {
      experiments.push_back(
          single("counterexample", "counterexample", {{"kmax", std::to_string(path_kmax)}}));
    } else {
      if (args.config_path.empty()) {
        std::cerr << "error: either a subcommand or --config is required\n";
        return 2;
      }
      experiments = schemelab::load_config_file(args.config_path);
    }
    return run_bundle(std::move(experiments), args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
