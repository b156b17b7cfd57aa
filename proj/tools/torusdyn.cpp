#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "torusdyn/report.hpp"

using namespace torusdyn;

namespace {

int finish(const CommandResult& r, const std::string& json_path) {
  std::cout << r.text;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return static_cast<int>(ExitCode::invalid_input);
    }
    out << r.report.dump(2) << "\n";
  }
  return static_cast<int>(r.code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy, dynamical degrees and commutative automorphism groups of complex tori"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string json_path;
  ReportOptions opt;

  std::string spec_path;
  auto* analyze = app.add_subcommand("analyze", "Full analysis of a group spec file");
  analyze->add_option("file", spec_path, "JSON spec file (torus_group or number_field)")->required();
  analyze->add_option("--seed", opt.seed, "Recorded in the report");
  analyze->add_option("--precision", opt.precision_bits, "Interval width below 2^-BITS")->check(CLI::Range(8U, 4096U));
  analyze->add_option("--json", json_path, "Write the JSON report here");

  unsigned dim = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  auto* hodge = app.add_subcommand("hodge-check", "Exact Hodge-Riemann and semipositivity checks");
  hodge->add_option("--dim", dim, "Complex dimension k")->required();
  hodge->add_option("--samples", samples, "Random contexts per sweep");
  hodge->add_option("--seed", seed, "Sweep seed");
  hodge->add_option("--json", json_path, "Write the JSON report here");

  std::string poly;
  long bound = 4;
  auto* forge = app.add_subcommand("forge", "Maximal-rank unit group of a totally real number field");
  forge->add_option("--poly", poly, "Monic polynomial, leading coefficient first, e.g. 1,-1,-2,1")->required();
  forge->add_option("--bound", bound, "Coefficient bound of the unit search")->check(CLI::Range(1L, 64L));
  forge->add_option("--precision", opt.precision_bits, "Interval width below 2^-BITS")->check(CLI::Range(8U, 4096U));
  forge->add_option("--json", json_path, "Write the JSON report here");

  long ebound = 1;
  unsigned edim = 2;
  auto* enumerate = app.add_subcommand("enumerate", "Distinct d_1 values over bounded integer matrices");
  enumerate->add_option("--dim", edim, "Complex dimension k")->required();
  enumerate->add_option("--bound", ebound, "Entry bound")->required();
  enumerate->add_option("--json", json_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::invalid_input);
  }

  if (analyze->parsed()) {
    Json spec;
    std::ifstream in(spec_path);
    if (!in) {
      std::cout << "invalid input: cannot read " << spec_path << "\n";
      return static_cast<int>(ExitCode::invalid_input);
    }
    try {
      spec = Json::parse(in);
    } catch (const Json::parse_error& e) {
      std::cout << "invalid input: " << spec_path << ": " << e.what() << "\n";
      return static_cast<int>(ExitCode::invalid_input);
    }
    return finish(cmd_analyze(spec, opt), json_path);
  }
  if (hodge->parsed()) return finish(cmd_hodge_check(dim, samples, seed), json_path);
  if (forge->parsed()) return finish(cmd_forge(poly, bound, opt), json_path);
  return finish(cmd_enumerate(edim, ebound), json_path);
}
