#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kml/errors.hpp"
#include "suites.hpp"

namespace {

struct CommonFlags {
  std::string out;
  std::string base = "Z";
  bool allowNonVerdict = false;
  bool timings = false;
  kml::cli::SuiteOptions suite;
};

void addCommonFlags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--out", f.out, "Write the JSON report here instead of stdout");
  cmd->add_option("--seed", f.suite.seed, "Seed for randomized checks")->capture_default_str();
  cmd->add_option("--truncation", f.suite.truncation, "Truncation degree or search window");
  cmd->add_option("--base", f.base, "Coefficient ring: Z, Q or Fp:<p>")->capture_default_str();
  cmd->add_flag("--allow-non-verdict", f.allowNonVerdict, "Exit 0 when checks end without a verdict");
  cmd->add_flag("--timings", f.timings, "Include wall_ms per check (output is no longer reproducible)");
}

int emit(const kml::Report& report, const CommonFlags& f) {
  const std::string text = report.toJson(f.timings).dump(2) + "\n";
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(f.out);
    if (!file) {
      std::cerr << "error: cannot write " << f.out << "\n";
      return 2;
    }
    file << text;
    for (const auto& c : report.checks)
      if (c.verdict != kml::Verdict::Pass) std::cout << kml::verdictName(c.verdict) << "  " << c.id << "\n";
    std::cout << report.suite << ": " << report.count(kml::Verdict::Pass) << " pass, "
              << report.count(kml::Verdict::Fail) << " fail, " << report.count(kml::Verdict::NonVerdict)
              << " non-verdict\n";
  }
  return report.exitCode(f.allowNonVerdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for Koszul cubes, graded F1-modules and K0 shadows"};
  app.set_version_flag("--version", std::string(kml::kToolVersion));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string chosen;
  std::function<kml::Report()> action;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  std::vector<std::string> suites = kml::cli::verifySuiteNames();
  suites.push_back("all");
  for (const auto& name : suites) {
    auto* cmd = verify->add_subcommand(name, "Suite " + name);
    addCommonFlags(cmd, flags);
    cmd->add_option("--n", flags.suite.n, "Dimension parameter n");
    cmd->add_option("--p", flags.suite.p, "Number of Koszul factors");
    cmd->add_option("--k", flags.suite.k, "Adams index");
    cmd->add_option("--dim", flags.suite.dim, "Rank of the base module");
    cmd->add_option("--count", flags.suite.count, "Number of random instances");
    cmd->add_option("--object", flags.suite.objectFile, "Affine object literal")->check(CLI::ExistingFile);
    cmd->add_option("--submodule", flags.suite.submoduleFile, "Generator matrix of a submodule")->check(CLI::ExistingFile);
    cmd->add_option("--filtration", flags.suite.filtrationFile, "Filtration literal")->check(CLI::ExistingFile);
    cmd->add_option("--module", flags.suite.moduleFile, "Graded module literal")->check(CLI::ExistingFile);
    cmd->callback([&, name] { action = [&, name] { return kml::cli::runVerify(name, flags.suite); }; });
  }

  auto addCompute = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* cmd = parent->add_subcommand(name, help);
    addCommonFlags(cmd, flags);
    if (name == "homology") {
      cmd->add_option("--cube", flags.suite.cubeFile, "Cube literal")->required()->check(CLI::ExistingFile);
      cmd->add_option("--order", flags.suite.order, "Direction order for the total complex signs");
    } else if (name == "snf") {
      cmd->add_option("--matrix", flags.suite.matrixFile, "Matrix literal")->required()->check(CLI::ExistingFile);
    } else {
      cmd->add_option("--module", flags.suite.moduleFile, "Graded module literal")->required()->check(CLI::ExistingFile);
    }
    cmd->callback([&, name] { action = [&, name] { return kml::cli::runCompute(name, flags.suite); }; });
  };
  auto* compute = app.add_subcommand("compute", "Compute an invariant of an input document");
  compute->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> computeCommands{
      {"homology", "Homology of the total complex of a cube"},
      {"koszul", "Koszul homology T_i of a graded module"},
      {"k0-class", "K0 class vector of a graded module"},
      {"snf", "Smith normal form of a matrix"}};
  for (const auto& [name, help] : computeCommands) {
    addCompute(compute, name, help);
    addCompute(&app, name, help + " (alias of compute " + name + ")");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    flags.suite.base = kml::Ring::parse(flags.base);
    return emit(action(), flags);
  } catch (const kml::SchemaError& e) {
    std::cerr << "schema error at " << e.what() << "\n";
    return 2;
  } catch (const kml::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const kml::Error& e) {
    std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
    return 2;
  }
}
